#pragma once

#include "polecount/olver.hpp"
#include "polecount/records.hpp"
#include "polecount/specfun.hpp"

#include <vector>

namespace polecount {

// Dimension of the degree-l spherical-harmonic eigenspace on S^{n-1},
// exact integer arithmetic.
long long multiplicity_m(int l, int n);

// The shared boundary table used for seeding and distance queries.
const EyeBoundary& shared_eye();

// All roots of the reverse-Bessel polynomial theta_m by Aberth-Ehrlich
// simultaneous iteration from the given seeds (one per root).
std::vector<cplx> reverse_bessel_roots(int m, const std::vector<cplx>& seeds);

// All nu - 1/2 zeros of H^{(1)}_nu(lambda R0) in Im lambda < 0, sorted by
// increasing Re lambda.
std::vector<cplx> sphere_zeros(int l, int n, double R0);

// lambda_{nu k} = nu rho^{-1}(-i (k - 1/4) pi / nu), conjugated into the
// lower half-plane, k = 1..nu-1/2.
std::vector<cplx> olver_approx_resonances(HalfIntOrder nu);

// Every resonance record with |lambda| < r_max, all angular momenta,
// sorted by (l, Re lambda).
std::vector<ResonanceRecord> sphere_table(int n, double R0, double r_max);

} // namespace polecount
