#include "polecount/counting.hpp"

#include "polecount/constants.hpp"
#include "polecount/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace polecount {

CountingFunction make_counting(const std::vector<ResonanceRecord>& recs, int n)
{
    std::map<double, long long> merged;
    for (const auto& r : recs) {
        const double mod = std::abs(r.lambda);
        if (mod <= 0.0) throw std::invalid_argument("make_counting: zero-modulus entry");
        merged[mod] += r.multiplicity;
    }
    CountingFunction cf;
    cf.n = n;
    cf.entries.assign(merged.begin(), merged.end());
    return cf;
}

long long count_N(const CountingFunction& cf, double r)
{
    if (r <= 0.0) throw std::invalid_argument("count_N: r must be > 0");
    long long total = 0;
    for (const auto& [mod, mult] : cf.entries) {
        if (mod >= r) break;
        total += mult;
    }
    return total;
}

double regularized_M(const CountingFunction& cf, double r)
{
    if (r <= 0.0) throw std::invalid_argument("regularized_M: r must be > 0");
    double sum = 0.0;
    for (const auto& [mod, mult] : cf.entries) {
        if (mod >= r) break;
        sum += double(mult) * std::log(r / mod);
    }
    return double(cf.n) * sum;
}

long long weyl_ball_count(int n, double R, double r)
{
    if (R <= 0.0 || r <= 0.0)
        throw std::invalid_argument("weyl_ball_count: R and r must be > 0");
    long long total = 0;
    const double cap = r * R;
    for (int l = 0;; ++l) {
        const HalfIntOrder nu = HalfIntOrder::from_ln(l, n);
        if (nu.nu() > cap) break; // first zero exceeds nu
        const auto zeros = bessel_real_zeros(nu, cap);
        if (zeros.empty()) break; // higher orders only move zeros further out
        total += multiplicity_m(l, n) * (long long)zeros.size();
    }
    return total;
}

GapResult theorem2_gap(const CountingFunction& cf, int n, double R0, double R,
                       double r, double a_sharp)
{
    if (!(R > R0 && R0 > 0.0))
        throw std::invalid_argument("theorem2_gap: need R > R0 > 0");
    const double t = tau(n);
    const double weyl_term = double(weyl_ball_count(n, R, r)) - t * std::pow(R, n) * std::pow(r, n);
    GapResult g;
    g.lhs = std::abs(regularized_M(cf, r) - 2.0 * weyl_term);
    g.rhs = (2.0 * t + a_sharp) * std::pow(R0, n) * std::pow(r, n);
    return g;
}

} // namespace polecount
