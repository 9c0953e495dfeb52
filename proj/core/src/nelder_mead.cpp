#include "inclab/nelder_mead.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace inclab {

namespace {

struct Simplex {
  std::vector<Eigen::VectorXd> x;
  std::vector<double> f;

  void sort() {
    std::vector<std::size_t> idx(x.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return f[a] < f[b]; });
    std::vector<Eigen::VectorXd> xs;
    std::vector<double> fs;
    for (std::size_t i : idx) {
      xs.push_back(x[i]);
      fs.push_back(f[i]);
    }
    x = std::move(xs);
    f = std::move(fs);
  }

  double diameter() const {
    double d = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) d = std::max(d, (x[i] - x[0]).lpNorm<Eigen::Infinity>());
    return d;
  }
};

}  // namespace

NelderMeadResult nelder_mead(const ScalarObjective& f, const Eigen::VectorXd& x0, const NelderMeadOptions& opts,
                             const IterationObserver& observer) {
  const Eigen::Index n = x0.size();
  NelderMeadResult res;
  auto eval = [&](const Eigen::VectorXd& x) {
    ++res.evaluations;
    return f(x);
  };

  Eigen::VectorXd start = x0;
  double fstart = eval(start);
  for (int run = 0; run <= opts.restarts; ++run) {
    Simplex s;
    s.x.push_back(start);
    s.f.push_back(fstart);
    for (Eigen::Index i = 0; i < n; ++i) {
      Eigen::VectorXd v = start;
      v(i) += opts.initial_step;
      s.x.push_back(v);
      s.f.push_back(eval(v));
    }
    s.sort();

    bool converged = false;
    for (int it = 0; it < opts.max_iterations; ++it) {
      if (s.diameter() <= opts.x_tol) {
        converged = true;
        break;
      }
      const std::size_t worst = s.x.size() - 1;
      Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
      for (std::size_t i = 0; i < worst; ++i) centroid += s.x[i];
      centroid /= static_cast<double>(n);

      const Eigen::VectorXd xr = centroid + (centroid - s.x[worst]);
      const double fr = eval(xr);
      if (fr < s.f[0]) {
        const Eigen::VectorXd xe = centroid + 2.0 * (centroid - s.x[worst]);
        const double fe = eval(xe);
        if (fe < fr) {
          s.x[worst] = xe;
          s.f[worst] = fe;
        } else {
          s.x[worst] = xr;
          s.f[worst] = fr;
        }
      } else if (fr < s.f[worst - 1]) {
        s.x[worst] = xr;
        s.f[worst] = fr;
      } else {
        const bool outside = fr < s.f[worst];
        const Eigen::VectorXd xc = outside ? Eigen::VectorXd(centroid + 0.5 * (xr - centroid))
                                           : Eigen::VectorXd(centroid + 0.5 * (s.x[worst] - centroid));
        const double fc = eval(xc);
        if (fc < (outside ? fr : s.f[worst])) {
          s.x[worst] = xc;
          s.f[worst] = fc;
        } else {
          for (std::size_t i = 1; i < s.x.size(); ++i) {
            s.x[i] = s.x[0] + 0.5 * (s.x[i] - s.x[0]);
            s.f[i] = eval(s.x[i]);
          }
        }
      }
      s.sort();
      ++res.iterations;
      if (observer) observer(res.iterations, s.x[0], s.f[0]);
    }
    start = s.x[0];
    fstart = s.f[0];
    res.converged = converged;
  }
  res.x = start;
  res.f = fstart;
  return res;
}

}  // namespace inclab
