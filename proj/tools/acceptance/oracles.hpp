#pragma once

// Reference values computed without any inclab routine: closed forms and
// general-purpose adaptive quadrature.

#include <complex>

namespace inclab::oracle {

/// Perimeter of the ellipse with semi-axes a, b by adaptive Gauss-Kronrod.
double ellipse_perimeter(double a, double b);

/// (c1 c2 c3 / 2) int_0^inf ds / ((c_j^2 + s) sqrt((c1^2+s)(c2^2+s)(c3^2+s)))
/// by double-exponential quadrature; j is 0-based.
double depolarization_quadrature(double c1, double c2, double c3, int j);

/// Interior slope 1/(1 + (k-1) a_j) and the diagonal of the polarization
/// tensor |Omega|(k-1)/(1 + (k-1) a_j) for an axis-aligned ellipse.
double ellipse_factor(double a, double b, int j);
double ellipse_slope(double a, double b, double k, int j);
double ellipse_pt_entry(double a, double b, double k, int j);

/// int_ball 1/(4 pi |x - y|) dy for the unit ball and |x| <= 1, with the
/// Delta N = 1 sign: |x|^2/6 - 1/2.
double ball_newtonian(double r);

/// (1/2pi) int_disk log|x - y| dy for the unit disk and |x| <= 1: r^2/4 - 1/4.
double disk_newtonian(double r);

/// int over the box [0,a] x [0,b] x [0,c] of 1/|y| dy (corner potential).
double box_corner_potential(double a, double b, double c);

/// Newtonian potential (Delta N = 1 sign) of the cube [-h,h]^3 at interior x.
double cube_newtonian(double h, double x, double y, double z);

/// Normal derivatives of S[cos(m t)] on the unit circle from inside and
/// outside, per unit cos(m t): -1/2 and +1/2 for m >= 1.
double circle_mode_inner(int m);
double circle_mode_outer(int m);

/// Unit-sphere average of the Kelvin matrix row: -(alpha1 + alpha2/3).
double kelvin_sphere_average(double lambda, double mu);

}  // namespace inclab::oracle
