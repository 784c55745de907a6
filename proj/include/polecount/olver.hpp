#pragma once

#include <complex>
#include <vector>

namespace polecount {

using cplx = std::complex<double>;

// Olver's conformal-map machinery for Bessel functions of large order.
//
//   rho(z)  = log((1 + sqrt(1-z^2))/z) - sqrt(1-z^2),      |arg z| < pi,
//   rho = (2/3) zeta^{3/2},
//
// with branches fixed so that both are real for z in (0,1).  sqrt(1-z^2) is
// taken in the product form sqrt(1-z)*sqrt(1+z) (principal factors), which is
// the continuation from (0,1) to |arg z| < pi.  The eye-shaped domain K is
// bounded in the closed upper half-plane by the curve
//
//   z(t) = (t coth t - t^2)^{1/2} + i (t^2 - t tanh t)^{1/2},  0 <= t <= t0,
//
// and its mirror images; t0 is the positive root of t = coth t.  Re rho > 0
// strictly inside K (upper half) and Re rho < 0 strictly outside.

// sqrt(1-z^2) on the branch continued from (0,1); Re >= 0 in |arg z| < pi.
cplx sqrt_one_minus_z2(cplx z);

cplx rho(cplx z);        // throws std::domain_error for z = 0 or arg z = +-pi
cplx rho_prime(cplx z);  // -sqrt(1-z^2)/z, matching branch
cplx zeta(cplx z);       // analytic across z = 1, real on the real axis

// max(-Re rho(z), 0); vanishes exactly on the closure of K in Im z > 0.
double neg_re_rho_plus(cplx z);

// Positive root of t*tanh(t) = 1 (equivalently t = coth t).
double eye_t0();

// Right-half boundary point z(t), 0 <= t <= t0.
cplx eye_point(double t);

struct EyeBoundary {
    double t0 = 0.0;
    struct Sample {
        double t;   // curve parameter in [0, t0]
        cplx z;     // boundary point, right half, Im z >= 0
        double s;   // -Im rho(z), increases from 0 to pi/2 along the half-curve
    };
    std::vector<Sample> samples;

    // Interpolated starting point for rho(z) = -i s, s in [0, pi/2].
    cplx seed(double s) const;

    // Distance from an arbitrary point to the full boundary of K
    // (all four symmetric arcs).
    double distance(cplx z) const;
};

EyeBoundary eye_boundary(int n_samples);

// Unique z on the upper boundary arc with rho(z) = -i*s, 0 <= s <= pi.
// s <= pi/2 lands on Re z >= 0, s >= pi/2 on Re z <= 0.
cplx rho_inverse_boundary(double s, const EyeBoundary& eb);

// Radial crossing of the eye boundary: the t > 0 where Re rho(t e^{i theta})
// changes sign.  Lies in [t0-intercept, 1] for theta in (0, pi).
double boundary_crossing(double theta);

// Sector weight h_n(theta) = 4/((n-2)!) * int_{t*}^inf (-Re rho)(t e^{i theta}) t^{-(n+1)} dt.
// Adaptive quadrature on the finite part, asymptotic series for the tail.
double h_sector_weight(double theta, int n, double rel_tol = 1e-8);

// Closed form for n = 3: h_3 = (4/9) (Re (1-z*^2)^{3/2} / |z*|^3 + sin 3*theta)
// with z* the boundary point at argument theta.  The sin term is the
// contribution of the antiderivative at the infinite endpoint.
double h3_closed_form(double theta);

} // namespace polecount
