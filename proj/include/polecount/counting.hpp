#pragma once

#include "polecount/records.hpp"

#include <utility>
#include <vector>

namespace polecount {

// Sorted (modulus, multiplicity) table supporting the counting function
// N(r) and its regularized companion M(r) = n sum log(r/|lambda_j|).
struct CountingFunction {
    int n = 3;
    std::vector<std::pair<double, long long>> entries; // strictly sorted moduli
};

CountingFunction make_counting(const std::vector<ResonanceRecord>& recs, int n);

// number of entries with modulus strictly below r, with multiplicity
long long count_N(const CountingFunction& cf, double r);

// n * sum_{|lambda| < r} mult * log(r/|lambda|)
double regularized_M(const CountingFunction& cf, double r);

// Reference count N^#(r): Dirichlet eigenvalues of the ball of radius R,
// i.e. zeros of J_{l+n/2-1} <= r R weighted by m(l).
long long weyl_ball_count(int n, double R, double r);

struct GapResult {
    double lhs = 0.0; // |M(r) - 2 (N^#(r) - tau_n R^n r^n)|
    double rhs = 0.0; // (2 tau_n + A) R0^n r^n
};

// a_sharp is the counting constant A_{S^{n-1}} (pass a_boundary(n)).
GapResult theorem2_gap(const CountingFunction& cf, int n, double R0, double R,
                       double r, double a_sharp);

} // namespace polecount
