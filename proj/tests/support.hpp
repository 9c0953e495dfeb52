#pragma once

#include <inclab/geometry.hpp>

#include <cmath>
#include <cstdint>
#include <random>

namespace inclab::test {

// Fixed-seed generator for property tests; every case is reproducible.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Ellipse ellipse() {
    Ellipse e;
    e.a = uniform(0.5, 3.0);
    e.b = uniform(0.5, 3.0);
    return e;
  }

  Ellipsoid ellipsoid() { return {uniform(0.6, 2.5), uniform(0.6, 2.5), uniform(0.6, 2.5)}; }

  FourierStar star() {
    FourierStar s;
    s.r0 = uniform(0.7, 1.5);
    s.modes.push_back({integer(2, 5), uniform(-0.15, 0.15), uniform(-0.15, 0.15)});
    return s;
  }

  double contrast() {
    const double k = std::exp(uniform(-2.5, 2.5));
    return std::abs(k - 1.0) < 0.05 ? k + 0.2 : k;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace inclab::test
