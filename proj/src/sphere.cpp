#include "polecount/sphere.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <future>
#include <stdexcept>
#include <string>

namespace polecount {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_n(int n)
{
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("dimension n must be odd and >= 3");
}

} // namespace

long long multiplicity_m(int l, int n)
{
    check_n(n);
    if (l < 0) throw std::invalid_argument("multiplicity_m: l must be >= 0");
    // (2l+n-2)/(n-2) * C(l+n-3, n-3)
    unsigned __int128 binom = 1;
    for (int j = 1; j <= n - 3; ++j) {
        binom = binom * (unsigned __int128)(l + j);
        binom /= (unsigned __int128)j; // exact: product of j consecutive integers
    }
    unsigned __int128 num = binom * (unsigned __int128)(2 * l + n - 2);
    if (num % (unsigned __int128)(n - 2) != 0)
        throw std::logic_error("multiplicity_m: non-integer result");
    num /= (unsigned __int128)(n - 2);
    if (num > (unsigned __int128)9223372036854775807ull)
        throw std::overflow_error("multiplicity_m: overflow");
    return (long long)num;
}

const EyeBoundary& shared_eye()
{
    static const EyeBoundary eb = eye_boundary(2048);
    return eb;
}

namespace {

// Newton ratio theta_m(x)/theta_m'(x) through the Hankel connection
//   log theta_m(x) = log H^{(2)}_{m+1/2}(lambda) + (m+1/2) log lambda + i lambda + const,
// lambda = -i x.  Direct polynomial evaluation amplifies rounding by
// e^{2 Im lambda} near the upper-half-plane roots; this path stays stable.
cplx theta_newton_ratio(int m, cplx x)
{
    const HalfIntOrder nu = HalfIntOrder::from_ln(m, 3); // nu = m + 1/2
    const cplx lambda = -cplx(0.0, 1.0) * x;
    const ScaledCyl h = hankel_h_scaled(2, nu, lambda);
    const cplx logderiv = h.derivative / h.value + cplx(0.0, 1.0) + (m + 0.5) / lambda;
    return cplx(0.0, 1.0) / logderiv;
}

} // namespace

std::vector<cplx> reverse_bessel_roots(int m, const std::vector<cplx>& seeds)
{
    if (int(seeds.size()) != m)
        throw std::invalid_argument("reverse_bessel_roots: need one seed per root");
    if (m == 0) return {};
    std::vector<cplx> x = seeds;
    std::vector<cplx> w(m);

    const int max_iter = 120;
    bool converged = false;
    for (int it = 0; it < max_iter && !converged; ++it) {
        double max_step = 0.0;
        for (int i = 0; i < m; ++i) w[i] = theta_newton_ratio(m, x[i]);
        for (int i = 0; i < m; ++i) {
            cplx repulse(0.0, 0.0);
            for (int j = 0; j < m; ++j)
                if (j != i) repulse += 1.0 / (x[i] - x[j]);
            cplx step = w[i] / (1.0 - w[i] * repulse);
            const double cap = 2.0;
            if (std::abs(step) > cap) step *= cap / std::abs(step);
            x[i] -= step;
            max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(x[i])));
        }
        converged = max_step < 5e-12; // below this the steps are rounding noise
    }
    if (!converged)
        throw std::runtime_error("reverse_bessel_roots: Aberth did not converge, m = " + std::to_string(m));

    // residuals (through the stable Hankel form) and pairwise separation
    const HalfIntOrder nu = HalfIntOrder::from_ln(m, 3);
    for (int i = 0; i < m; ++i) {
        const cplx lambda = -cplx(0.0, 1.0) * x[i];
        const ScaledCyl h = hankel_h_scaled(2, nu, lambda);
        const double scale = std::abs(lambda) * std::abs(h.derivative) + std::abs(h.value);
        if (!(std::abs(h.value) <= 1e-9 * scale))
            throw std::runtime_error("reverse_bessel_roots: residual check failed");
        for (int j = i + 1; j < m; ++j)
            if (std::abs(x[i] - x[j]) < 1e-6 * (1.0 + std::abs(x[i])))
                throw std::runtime_error("reverse_bessel_roots: duplicate roots (count mismatch)");
    }
    return x;
}

std::vector<cplx> sphere_zeros(int l, int n, double R0)
{
    check_n(n);
    if (l < 0) throw std::invalid_argument("sphere_zeros: l must be >= 0");
    if (R0 <= 0.0) throw std::invalid_argument("sphere_zeros: R0 must be > 0");
    const HalfIntOrder nu = HalfIntOrder::from_ln(l, n);
    const int m = nu.poly_degree();
    if (m == 0) return {};

    const double v = nu.nu();
    const EyeBoundary& eb = shared_eye();
    // Roots of theta_m live at X = i * (zero of H^{(2)}_nu); seed from the
    // Olver approximations on the scaled eye boundary.
    std::vector<cplx> seeds(m);
    for (int k = 1; k <= m; ++k) {
        const double s = (k - 0.25) * kPi / v;
        seeds[k - 1] = cplx(0.0, 1.0) * (v * rho_inverse_boundary(s, eb));
    }
    const std::vector<cplx> roots = reverse_bessel_roots(m, seeds);

    std::vector<cplx> zeros(m);
    for (int i = 0; i < m; ++i) {
        const cplx h2zero = -cplx(0.0, 1.0) * roots[i];  // zero of H^{(2)} in C_+
        zeros[i] = std::conj(h2zero) / R0;               // resonance: zero of H^{(1)}
    }
    std::sort(zeros.begin(), zeros.end(),
              [](cplx a, cplx b) { return a.real() < b.real(); });
    return zeros;
}

std::vector<cplx> olver_approx_resonances(HalfIntOrder nu)
{
    const int m = nu.poly_degree();
    const double v = nu.nu();
    const EyeBoundary& eb = shared_eye();
    std::vector<cplx> out;
    out.reserve(m);
    for (int k = 1; k <= m; ++k) {
        const double s = (k - 0.25) * kPi / v;
        out.push_back(std::conj(v * rho_inverse_boundary(s, eb)));
    }
    return out;
}

namespace {

int thread_budget()
{
    if (const char* env = std::getenv("POLECOUNT_THREADS")) {
        const int t = std::atoi(env);
        if (t >= 1) return std::min(t, 64);
    }
    return 1;
}

} // namespace

std::vector<ResonanceRecord> sphere_table(int n, double R0, double r_max)
{
    check_n(n);
    if (R0 <= 0.0 || r_max <= 0.0)
        throw std::invalid_argument("sphere_table: R0 and r_max must be > 0");
    const double rm = r_max * R0;

    // coarse cutoff: the lowest zero modulus of order nu is near 0.6627 nu
    int l_hard = 0;
    while (true) {
        const double v = 0.5 * (2 * l_hard + n - 2);
        if (0.6627 * v - 6.0 > rm) break;
        ++l_hard;
        if (l_hard > 4000000) throw std::invalid_argument("sphere_table: r_max too large");
    }
    const int l_top = l_hard + 2; // guard band, must stay empty

    auto records_for_l = [&](int l) {
        std::vector<ResonanceRecord> recs;
        const HalfIntOrder nu = HalfIntOrder::from_ln(l, n);
        const long long mult = multiplicity_m(l, n);
        for (const cplx& z : sphere_zeros(l, n, R0))
            if (std::abs(z) < r_max)
                recs.push_back({l, nu, z, mult, Family::sphere_exact});
        return recs;
    };

    const int threads = thread_budget();
    std::vector<std::vector<ResonanceRecord>> per_l(l_top + 1);
    if (threads <= 1) {
        for (int l = 0; l <= l_top; ++l) per_l[l] = records_for_l(l);
    } else {
        std::vector<std::future<void>> jobs;
        std::atomic<int> next{0};
        for (int t = 0; t < threads; ++t)
            jobs.push_back(std::async(std::launch::async, [&] {
                for (int l = next.fetch_add(1); l <= l_top; l = next.fetch_add(1))
                    per_l[l] = records_for_l(l);
            }));
        for (auto& j : jobs) j.get();
    }

    for (int l = l_hard; l <= l_top; ++l)
        if (!per_l[l].empty())
            throw std::runtime_error("sphere_table: guard band order l = " + std::to_string(l) +
                                     " contributed zeros; cutoff too tight");

    std::vector<ResonanceRecord> all;
    for (auto& v : per_l)
        all.insert(all.end(), v.begin(), v.end());
    // per-l blocks are already Re-sorted; the concatenation is (l, Re) sorted
    return all;
}

} // namespace polecount
