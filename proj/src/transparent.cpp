#include "polecount/transparent.hpp"

#include "polecount/olver.hpp"
#include "polecount/sphere.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <future>
#include <iterator>
#include <stdexcept>
#include <string>

namespace polecount {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct winding_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check_cn(int n, double c)
{
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("dimension n must be odd and >= 3");
    if (!(c > 0.0))
        throw std::invalid_argument("wave speed c must be > 0");
}

struct DetContext {
    HalfIntOrder nu;
    double c;
};

// cylinder-form determinant D = c H^{(2)'}(z) J(z/c) - H^{(2)}(z) J'(z/c),
// value * 2^e2; shares its zeros with (67)
struct DetValue {
    cplx value;
    cplx deriv;    // dD/dlambda, same exponent
    double scale;  // |c H' J| + |H J'|, same exponent
    long e2;
};

DetValue det_eval(const DetContext& ctx, cplx lambda)
{
    const double c = ctx.c;
    const cplx s = lambda / c;
    const ScaledCyl H = hankel_h_scaled(2, ctx.nu, lambda);
    const ScaledCyl J = bessel_j_scaled(ctx.nu, s);
    DetValue d;
    d.value = c * H.derivative * J.value - H.value * J.derivative;
    d.scale = std::abs(c * H.derivative * J.value) + std::abs(H.value * J.derivative);
    // second derivatives from the Bessel ODE keep the exponent shared
    const double v = ctx.nu.nu();
    const cplx Hpp = -H.derivative / lambda - (1.0 - v * v / (lambda * lambda)) * H.value;
    const cplx Jpp = -J.derivative / s - (1.0 - v * v / (s * s)) * J.value;
    d.deriv = c * Hpp * J.value - H.value * Jpp / c;
    d.e2 = H.e2 + J.e2;
    // keep |scale| ~ 1 so that phase products along contours cannot overflow
    if (d.scale > 0.0 && std::isfinite(d.scale)) {
        int ex = 0;
        std::frexp(d.scale, &ex);
        if (ex != 0) {
            d.value = cplx(std::ldexp(d.value.real(), -ex), std::ldexp(d.value.imag(), -ex));
            d.deriv = cplx(std::ldexp(d.deriv.real(), -ex), std::ldexp(d.deriv.imag(), -ex));
            d.scale = std::ldexp(d.scale, -ex);
            d.e2 += ex;
        }
    }
    return d;
}

} // namespace

cplx transmission_det(int l, int n, double c, cplx lambda)
{
    check_cn(n, c);
    if (lambda == cplx(0.0, 0.0))
        throw std::domain_error("transmission_det: lambda = 0 excluded");
    const HalfIntOrder nu = HalfIntOrder::from_ln(l, n);
    const double a = 1.0 - 0.5 * n;
    const cplx s = lambda / c;
    const CylValue H = hankel_h(2, nu, lambda);
    const CylValue J = bessel_j(nu, s);
    const cplx h = std::pow(lambda, a) * H.value;
    const cplx hp = a * std::pow(lambda, a - 1.0) * H.value + std::pow(lambda, a) * H.derivative;
    const cplx j = std::pow(s, a) * J.value;
    const cplx jp = a * std::pow(s, a - 1.0) * J.value + std::pow(s, a) * J.derivative;
    return c * hp * j - h * jp;
}

cplx transmission_logderiv_gap(int l, int n, double c, cplx lambda)
{
    check_cn(n, c);
    if (lambda == cplx(0.0, 0.0))
        throw std::domain_error("transmission_logderiv_gap: lambda = 0 excluded");
    const HalfIntOrder nu = HalfIntOrder::from_ln(l, n);
    const double a = 1.0 - 0.5 * n;
    const cplx s = lambda / c;
    const ScaledCyl H = hankel_h_scaled(2, nu, lambda);
    const ScaledCyl J = bessel_j_scaled(nu, s);
    const cplx ratio_h = a + lambda * H.derivative / H.value;
    const cplx ratio_j = a + s * J.derivative / J.value;
    return ratio_h - ratio_j;
}

namespace {

// continuous phase change of D along the segment [za, zb]
double edge_phase(const DetContext& ctx, cplx za, cplx fa, cplx zb, cplx fb,
                  double hmax, int depth)
{
    if (fa == cplx(0.0, 0.0) || fb == cplx(0.0, 0.0))
        throw winding_error("determinant vanished on the contour");
    const double d = std::arg(fb * std::conj(fa));
    if (std::abs(d) < kPi / 2.0 && std::abs(zb - za) <= hmax) return d;
    if (depth > 48)
        throw winding_error("phase continuation stalled (zero on or near contour)");
    const cplx zm = 0.5 * (za + zb);
    const cplx fm = det_eval(ctx, zm).value;
    return edge_phase(ctx, za, fa, zm, fm, hmax, depth + 1) +
           edge_phase(ctx, zm, fm, zb, fb, hmax, depth + 1);
}

int winding_impl(const DetContext& ctx, const Rect& box)
{
    const cplx c0(box.lo_re, box.lo_im), c1(box.hi_re, box.lo_im);
    const cplx c2(box.hi_re, box.hi_im), c3(box.lo_re, box.hi_im);
    const cplx f0 = det_eval(ctx, c0).value;
    const cplx f1 = det_eval(ctx, c1).value;
    const cplx f2 = det_eval(ctx, c2).value;
    const cplx f3 = det_eval(ctx, c3).value;
    const double hmax = 0.35 * std::min(1.0, ctx.c);
    double total = 0.0;
    total += edge_phase(ctx, c0, f0, c1, f1, hmax, 0);
    total += edge_phase(ctx, c1, f1, c2, f2, hmax, 0);
    total += edge_phase(ctx, c2, f2, c3, f3, hmax, 0);
    total += edge_phase(ctx, c3, f3, c0, f0, hmax, 0);
    const double w = total / (2.0 * kPi);
    const long k = std::lround(w);
    if (std::abs(w - double(k)) > 0.15 || k < 0)
        throw winding_error("winding did not snap to a non-negative integer: " + std::to_string(w));
    return int(k);
}

cplx newton_polish(const DetContext& ctx, const Rect& box, cplx z0)
{
    cplx z = z0;
    const double diam = std::max(box.width(), box.height());
    for (int it = 0; it < 60; ++it) {
        const DetValue d = det_eval(ctx, z);
        cplx step = d.value / d.deriv;
        if (std::abs(step) > 0.6 * diam) step *= 0.6 * diam / std::abs(step);
        z -= step;
        if (std::abs(step) < 1e-14 * (1.0 + std::abs(z))) break;
        if (z.real() < box.lo_re - diam || z.real() > box.hi_re + diam ||
            z.imag() < box.lo_im - diam || z.imag() > box.hi_im + diam)
            throw winding_error("Newton escaped the search box");
    }
    const DetValue d = det_eval(ctx, z);
    if (!(std::abs(d.value) <= 1e-10 * d.scale))
        throw winding_error("Newton residual above 1e-10 of the term scale");
    return z;
}

void collect_zeros(const DetContext& ctx, const Rect& box, int winding, int depth,
                   std::vector<cplx>& out)
{
    if (winding == 0) return;
    if (depth > 64)
        throw winding_error("subdivision depth exhausted");
    const double diam = std::max(box.width(), box.height());
    if (winding == 1 && diam <= 0.3) {
        const cplx center(0.5 * (box.lo_re + box.hi_re), 0.5 * (box.lo_im + box.hi_im));
        try {
            const cplx z = newton_polish(ctx, box, center);
            const double m = 1e-12 * (1.0 + std::abs(z));
            if (z.real() >= box.lo_re - m && z.real() <= box.hi_re + m &&
                z.imag() >= box.lo_im - m && z.imag() <= box.hi_im + m) {
                out.push_back(z);
                return;
            }
        } catch (const winding_error&) {
            // fall through to a further split
        }
    }

    static const double fractions[] = {0.5, 0.43, 0.57, 0.37, 0.63};
    const bool split_re = box.width() >= box.height();
    for (double f : fractions) {
        Rect a = box, b = box;
        if (split_re) {
            const double cut = box.lo_re + f * box.width();
            a.hi_re = cut;
            b.lo_re = cut;
        } else {
            const double cut = box.lo_im + f * box.height();
            a.hi_im = cut;
            b.lo_im = cut;
        }
        try {
            const int wa = winding_impl(ctx, a);
            const int wb = winding_impl(ctx, b);
            if (wa + wb != winding)
                continue; // a zero sits on the cut; move it
            collect_zeros(ctx, a, wa, depth + 1, out);
            collect_zeros(ctx, b, wb, depth + 1, out);
            return;
        } catch (const winding_error&) {
            continue;
        }
    }
    throw winding_error("all subdivision cuts failed for a box with winding " +
                        std::to_string(winding));
}

std::vector<cplx> zeros_with_retry(const DetContext& ctx, Rect region)
{
    for (int attempt = 0;; ++attempt) {
        try {
            std::vector<cplx> out;
            const int w = winding_impl(ctx, region);
            collect_zeros(ctx, region, w, 0, out);
            if (int(out.size()) != w)
                throw std::runtime_error("zero count does not match the region winding");
            std::sort(out.begin(), out.end(), [](cplx a, cplx b) {
                return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
            });
            return out;
        } catch (const winding_error& e) {
            if (attempt >= 5)
                throw std::runtime_error(std::string("zeros_in_region failed: ") + e.what());
            const double eps = 7.3e-4 * (attempt + 1);
            region.lo_re -= eps;
            region.hi_re += eps * 1.17;
            region.lo_im -= eps * 0.83;
            region.hi_im += eps;
        }
    }
}

} // namespace

int winding_number(int l, int n, double c, const Rect& box)
{
    check_cn(n, c);
    const DetContext ctx{HalfIntOrder::from_ln(l, n), c};
    return winding_impl(ctx, box);
}

std::vector<cplx> zeros_in_region(int l, int n, double c, Rect region)
{
    check_cn(n, c);
    if (!(region.hi_re > region.lo_re && region.hi_im > region.lo_im))
        throw std::invalid_argument("zeros_in_region: empty region");
    if (region.lo_re <= 0.0 && region.hi_re >= 0.0 && region.lo_im <= 0.0 && region.hi_im >= 0.0)
        throw std::invalid_argument("zeros_in_region: region must not contain lambda = 0");
    const DetContext ctx{HalfIntOrder::from_ln(l, n), c};
    return zeros_with_retry(ctx, region);
}

namespace {

Family classify_family(cplx unit_zero, double v)
{
    const cplx z = unit_zero / v;
    const double eye_dist = shared_eye().distance(z);
    return (eye_dist <= z.imag()) ? Family::transparent_boundary
                                  : Family::transparent_interior;
}

int thread_budget()
{
    if (const char* env = std::getenv("POLECOUNT_THREADS")) {
        const int t = std::atoi(env);
        if (t >= 1) return std::min(t, 64);
    }
    return 1;
}

} // namespace

std::vector<ResonanceRecord> transparent_table(int n, double c, double R0, double r_max)
{
    check_cn(n, c);
    if (c == 1.0)
        throw std::invalid_argument("transparent_table: c = 1 has no resonances");
    if (R0 <= 0.0 || r_max <= 0.0)
        throw std::invalid_argument("transparent_table: R0 and r_max must be > 0");
    const double rm = r_max * R0; // work with the unit-interface zeros mu = lambda R0

    const double family_floor = std::min(0.6627, c);
    int l_hard = 0;
    while (true) {
        const double v = 0.5 * (2 * l_hard + n - 2);
        if (family_floor * v - 8.0 > rm) break;
        ++l_hard;
        if (l_hard > 100000)
            throw std::invalid_argument("transparent_table: r_max/c out of supported range");
    }
    const int l_top = l_hard + 2;

    auto zeros_for_l = [&](int l) {
        const DetContext ctx{HalfIntOrder::from_ln(l, n), c};
        const double pad = rm * 5e-4 + 0.5;
        const double top = rm + pad;
        // the cylinder determinant has a simple pole at 0: keep it outside
        // both pieces; axis zeros never approach the origin corner
        static const double seams[] = {0.25, 0.317, 0.203, 0.371, 0.159};
        for (size_t si = 0;; ++si) {
            if (si >= std::size(seams))
                throw std::runtime_error("transparent_table: no seam position worked for l = " +
                                         std::to_string(l));
            const double seam = seams[si];
            try {
                Rect right{seam, top, -1e-3, top};
                Rect strip{-seam, seam, 1e-3, top};
                std::vector<cplx> zs = zeros_with_retry(ctx, right);
                const size_t n_right = zs.size();
                const std::vector<cplx> axis = zeros_with_retry(ctx, strip);
                zs.insert(zs.end(), axis.begin(), axis.end());
                for (size_t i = 0; i < n_right; ++i)
                    zs.push_back(cplx(-zs[i].real(), zs[i].imag()));
                return zs;
            } catch (const std::runtime_error&) {
                if (si + 1 >= std::size(seams)) throw;
            }
        }
    };

    auto records_for_l = [&](int l) {
        std::vector<ResonanceRecord> recs;
        const HalfIntOrder nu = HalfIntOrder::from_ln(l, n);
        const long long mult = multiplicity_m(l, n);
        for (const cplx& mu : zeros_for_l(l)) {
            if (!(std::abs(mu) < rm)) continue;
            recs.push_back({l, nu, mu / R0, mult, classify_family(mu, nu.nu())});
        }
        std::sort(recs.begin(), recs.end(), [](const ResonanceRecord& a, const ResonanceRecord& b) {
            return a.lambda.real() != b.lambda.real() ? a.lambda.real() < b.lambda.real()
                                                      : a.lambda.imag() < b.lambda.imag();
        });
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
            throw std::runtime_error("transparent_table: guard band order l = " +
                                     std::to_string(l) + " contributed zeros");

    std::vector<ResonanceRecord> all;
    for (auto& v : per_l)
        all.insert(all.end(), v.begin(), v.end());
    return all;
}

} // namespace polecount
