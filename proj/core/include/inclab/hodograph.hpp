#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <vector>

namespace inclab {

using Complex = std::complex<double>;
using ComplexMap = std::function<Complex(Complex)>;

/// psi_D(z) = (z - 1/z)/2 for |z| >= 1: the exterior of the unit disk onto the
/// complement of the slit [-i, i].
Complex koebe(Complex z);

/// F(z) = gamma z + C + beta/z on |z| > 1.
struct ExteriorMap {
  Complex gamma{1.0, 0.0};
  Complex C{0.0, 0.0};
  Complex beta{0.0, 0.0};

  Complex operator()(Complex z) const { return gamma * z + C + beta / z; }
  Complex derivative(Complex z) const { return gamma - beta / (z * z); }
};

/// gamma = (a+b)/2, C = 0, beta = (a-b)/2, so F(e^it) = a cos t + i b sin t.
/// For a < b beta is negative and the same formula still traces the ellipse.
ExteriorMap ellipse_exterior_map(double a, double b);

enum class Closure {
  Open,    // w must be strictly outside the image of the unit circle
  Closed,  // boundary points are accepted
};

/// Root of gamma z^2 - (w - C) z + beta = 0 with the larger modulus; throws
/// DomainError unless |z| > 1 (or >= 1 for Closure::Closed).
Complex invert_exterior_map(const ExteriorMap& F, Complex w, Closure closure = Closure::Open);

/// psi(w) = b koebe(F^-1(w)) for the ellipse exterior; equals i Im(w) on the
/// ellipse itself.
Complex hodograph_map(double a, double b, Complex w);

/// Leading coefficient b/(a+b) of hodograph_map at infinity.
double hodograph_leading_coefficient(double a, double b);

/// Fits f(w)/w = alpha + c1/w + c2/w^2 through the given real radii and
/// returns alpha.
Complex asymptotic_coefficient(const ComplexMap& f, const std::vector<double>& radii);

struct UnivalenceReport {
  double min_abs_derivative = 0.0;
  double slit_lo = 0.0;  // min Im over the boundary image
  double slit_hi = 0.0;  // max Im over the boundary image
  double max_boundary_real = 0.0;
  double cauchy_riemann_residual = 0.0;
  int min_winding = 0;
  int max_winding = 0;
  bool pass = false;
};

struct UnivalenceOptions {
  int radii = 64;
  int angles = 256;
  double r_min = 1.0 + 1e-3;
  double r_max = 1e3;
  double boundary_tol = 1e-10;
  double cr_tol = 1e-6;
};

/// Samples f o F on |z| in [r_min, r_max] (F = identity if absent) and on the
/// unit circle; checks nonvanishing derivative, Cauchy-Riemann consistency,
/// unit winding of image circles around the slit centre, and that the
/// boundary image lies on the imaginary axis.
UnivalenceReport univalence_check(const ComplexMap& f, const std::optional<ExteriorMap>& F = std::nullopt,
                                  const UnivalenceOptions& opts = {});

}  // namespace inclab
