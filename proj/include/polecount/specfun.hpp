#pragma once

#include "polecount/olver.hpp"

#include <complex>
#include <utility>
#include <vector>

namespace polecount {

// Half-integer order nu = l + n/2 - 1 for odd dimension n, stored exactly.
struct HalfIntOrder {
    int twice_nu = 1; // odd, positive
    int l = 0;        // angular momentum, >= 0
    int n = 3;        // odd dimension, >= 3

    double nu() const { return 0.5 * twice_nu; }
    int poly_degree() const { return (twice_nu - 1) / 2; } // nu - 1/2
    static HalfIntOrder from_ln(int l, int n);
};

struct CylValue {
    cplx value;
    cplx derivative; // d/dz
};

// Scaled variant: actual = value * 2^e2 (derivative shares the exponent).
// Keeps the transmission determinant finite when e^{|Im z|} overflows.
struct ScaledCyl {
    cplx value;
    cplx derivative;
    long e2 = 0;
};

// J_nu(z), J_nu'(z) for half-integer nu by Miller backward recurrence,
// normalized against the elementary J_{1/2} or J_{3/2}.
CylValue bessel_j(HalfIntOrder nu, cplx z);
ScaledCyl bessel_j_scaled(HalfIntOrder nu, cplx z);

// H^{(1,2)}_nu(z) and derivative via the reverse-Bessel representation
//   H^{(2)}_{m+1/2}(z) = i sqrt(2/(pi z)) e^{-iz} theta_m(iz)/z^m
// evaluated by upward recurrence on theta_m(+-iz)/z^m.
CylValue hankel_h(int kind, HalfIntOrder nu, cplx z);
ScaledCyl hankel_h_scaled(int kind, HalfIntOrder nu, cplx z);

// Coefficients of the reverse-Bessel polynomial theta_m (ascending powers);
// theta_0 = 1, theta_1 = x + 1, theta_m = (2m-1) theta_{m-1} + x^2 theta_{m-2}.
std::vector<double> reverse_bessel_coeffs(int m);

// theta_m(x) and theta_m'(x) evaluated by the three-term recurrence at the
// point, with power-of-two rescaling; only ratios of the outputs are exact
// across the rescaling, so the pair shares one exponent.
struct ScaledPoly {
    cplx value;
    cplx derivative;
    long e2 = 0;
};
ScaledPoly reverse_bessel_eval(int m, cplx x);

// Ai, Ai' to ~1e-8 relative accuracy inside |z| <= 6 (Maclaurin series);
// leading-order asymptotics beyond, the oscillatory form toward arg z = pi.
std::pair<cplx, cplx> airy_leading(cplx z);

// a_k = [3/2 (k pi - pi/4)]^{2/3}, the elementary approximations to the
// zeros of Ai(-z).
double airy_zero_approx(int k);

// Leading term of the uniform large-order expansions, argument z = lambda/nu.
cplx olver_leading_j(HalfIntOrder nu, cplx z);
cplx olver_leading_h2(HalfIntOrder nu, cplx z);

// All positive zeros of J_nu up to `up_to`, each to ~1e-10, validated by
// sign interlacing.
std::vector<double> bessel_real_zeros(HalfIntOrder nu, double up_to);

} // namespace polecount
