#include "polecount/olver.hpp"

#include "polecount/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace polecount {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_domain(cplx z)
{
    if (z == cplx(0.0, 0.0))
        throw std::domain_error("rho: z = 0 is outside the domain");
    if (z.imag() == 0.0 && z.real() < 0.0)
        throw std::domain_error("rho: arg z = +-pi is outside the domain");
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::domain_error("rho: non-finite argument");
}

} // namespace

cplx sqrt_one_minus_z2(cplx z)
{
    return std::sqrt(1.0 - z) * std::sqrt(1.0 + z);
}

cplx rho(cplx z)
{
    check_domain(z);
    const cplx w = sqrt_one_minus_z2(z);
    if (std::abs(w) < 1e-3) {
        // log(1+w) - w by series; the direct form loses all digits at z ~ +-1.
        const cplx w2 = w * w;
        cplx sum(0.0, 0.0);
        cplx pw = w2; // w^2
        for (int k = 2; k <= 12; ++k) {
            sum += ((k % 2 == 0) ? -1.0 : 1.0) / double(k) * pw;
            pw *= w;
        }
        return sum - std::log(z); // log((1+w)/z) - w = [log(1+w) - w] - log z
    }
    return std::log((1.0 + w) / z) - w;
}

cplx rho_prime(cplx z)
{
    check_domain(z);
    return -sqrt_one_minus_z2(z) / z;
}

double neg_re_rho_plus(cplx z)
{
    return std::max(-rho(z).real(), 0.0);
}

namespace {

// Coefficients of the expansion rho = (2 sqrt2 / 3) u^{3/2} (1 + sum d_k u^k),
// u = 1 - z.  Derived from integrating sqrt(2s) sqrt(1-s/2)/(1-s) termwise.
const std::vector<double>& zeta_series_coeffs()
{
    static const std::vector<double> d = [] {
        const int K = 24;
        std::vector<double> b(K + 1), g(K + 1), dd(K + 1);
        b[0] = 1.0;
        for (int j = 1; j <= K; ++j) b[j] = b[j - 1] * (j - 1.5) / (2.0 * j);
        double acc = 0.0;
        for (int k = 0; k <= K; ++k) {
            acc += b[k];
            g[k] = acc;
            dd[k] = 3.0 * g[k] / (2.0 * k + 3.0);
        }
        return dd;
    }();
    return d;
}

cplx zeta_series(cplx z)
{
    const cplx u = 1.0 - z;
    const auto& d = zeta_series_coeffs();
    cplx s(0.0, 0.0);
    cplx pu(1.0, 0.0);
    for (size_t k = 0; k < d.size(); ++k) {
        s += d[k] * pu;
        pu *= u;
    }
    return std::cbrt(2.0) * u * std::pow(s, 2.0 / 3.0);
}

} // namespace

cplx zeta(cplx z)
{
    if (std::abs(1.0 - z) < 0.25) return zeta_series(z);
    check_domain(z);
    const cplx r = rho(z);
    const cplx base = std::pow(1.5 * r, 2.0 / 3.0);
    const double a = std::arg(r);
    // For Im z > 0 the continuously tracked arg rho lies in (-3pi/2, 0); the
    // principal power is wrong exactly where it wrapped, i.e. arg rho_p in
    // (pi/2, pi], and the result needs e^{-4pi i/3} = e^{+2pi i/3} there.
    const cplx rot = std::polar(1.0, 2.0 * kPi / 3.0);
    if (z.imag() > 0.0 && a > kPi / 2.0) return base * rot;
    if (z.imag() < 0.0 && a < -kPi / 2.0) return base * std::conj(rot);
    if (z.imag() == 0.0 && z.real() > 1.0) return cplx(-std::abs(base), 0.0);
    return base;
}

double eye_t0()
{
    // root of f(t) = t*tanh(t) - 1 on [1, 1.5], safeguarded Newton
    double lo = 1.0, hi = 1.5, t = 1.2;
    for (int it = 0; it < 60; ++it) {
        const double th = std::tanh(t);
        const double f = t * th - 1.0;
        if (f > 0.0) hi = t; else lo = t;
        const double fp = th + t * (1.0 - th * th);
        double tn = t - f / fp;
        if (!(tn > lo && tn < hi)) tn = 0.5 * (lo + hi);
        if (std::abs(tn - t) < 1e-16) { t = tn; break; }
        t = tn;
    }
    return t;
}

namespace {

// coth t - t, Taylor at t0 when the direct difference would cancel
double coth_minus_t(double t, double t0)
{
    // direct difference keeps ~4e-16/h relative accuracy; switch to Taylor
    // only where that degrades
    const double h = t - t0;
    if (std::abs(h) < 1e-6) {
        const double sh = std::sinh(t0);
        const double csch2 = 1.0 / (sh * sh);
        const double coth = std::cosh(t0) / sh;
        const double c1 = -(csch2 + 1.0);
        const double c2 = 2.0 * csch2 * coth;
        const double c3 = -4.0 * csch2 * coth * coth - 2.0 * csch2 * csch2;
        const double c4 = 8.0 * csch2 * coth * (coth * coth + 2.0 * csch2);
        return h * (c1 + h * (0.5 * c2 + h * (c3 / 6.0 + h * c4 / 24.0)));
    }
    return std::cosh(t) / std::sinh(t) - t;
}

} // namespace

cplx eye_point(double t)
{
    static const double t0 = eye_t0();
    if (t <= 0.0) return cplx(1.0, 0.0);
    if (t >= t0) return cplx(0.0, std::sqrt(t0 * t0 - 1.0));
    const double x2 = t * coth_minus_t(t, t0);       // t coth t - t^2
    const double y2 = t * (t - std::tanh(t));        // t^2 - t tanh t
    return cplx(std::sqrt(std::max(x2, 0.0)), std::sqrt(std::max(y2, 0.0)));
}

EyeBoundary eye_boundary(int n_samples)
{
    if (n_samples < 2) throw std::invalid_argument("eye_boundary: need n_samples >= 2");
    EyeBoundary eb;
    eb.t0 = eye_t0();
    eb.samples.reserve(n_samples);
    for (int i = 0; i < n_samples; ++i) {
        const double t = eb.t0 * double(i) / double(n_samples - 1);
        const cplx z = eye_point(t);
        const double s = (i == 0) ? 0.0 : -rho(z).imag();
        eb.samples.push_back({t, z, s});
    }
    return eb;
}

cplx EyeBoundary::seed(double s) const
{
    if (s <= 0.0) return samples.front().z;
    if (s >= samples.back().s) return samples.back().z;
    size_t lo = 0, hi = samples.size() - 1;
    while (hi - lo > 1) {
        const size_t mid = (lo + hi) / 2;
        if (samples[mid].s <= s) lo = mid; else hi = mid;
    }
    const auto& a = samples[lo];
    const auto& b = samples[hi];
    const double f = (s - a.s) / (b.s - a.s);
    return a.z + f * (b.z - a.z);
}

double EyeBoundary::distance(cplx z) const
{
    // fold into the closed first-quadrant arc; K is symmetric in both axes
    const cplx p(std::abs(z.real()), std::abs(z.imag()));
    size_t best = 0;
    double bestd = std::abs(p - samples[0].z);
    for (size_t i = 1; i < samples.size(); ++i) {
        const double d = std::abs(p - samples[i].z);
        if (d < bestd) { bestd = d; best = i; }
    }
    // golden-section refine on t around the best sample
    const double dt = t0 / double(samples.size() - 1);
    double a = std::max(0.0, samples[best].t - dt);
    double b = std::min(t0, samples[best].t + dt);
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = std::abs(p - eye_point(x1)), f2 = std::abs(p - eye_point(x2));
    for (int it = 0; it < 60; ++it) {
        if (f1 < f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - gr * (b - a);
            f1 = std::abs(p - eye_point(x1));
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + gr * (b - a);
            f2 = std::abs(p - eye_point(x2));
        }
    }
    return std::min({bestd, f1, f2});
}

cplx rho_inverse_boundary(double s, const EyeBoundary& eb)
{
    if (s < -1e-12 || s > kPi + 1e-9)
        throw std::out_of_range("rho_inverse_boundary: s outside [0, pi]");
    s = std::clamp(s, 0.0, kPi);
    if (s > kPi / 2.0) {
        const cplx zr = rho_inverse_boundary(kPi - s, eb);
        return cplx(-zr.real(), zr.imag()); // rho(-conj z) = conj(rho z) - i pi
    }
    if (s == 0.0) return cplx(1.0, 0.0);

    cplx z;
    if (s < 2e-3) {
        // corner expansion: rho ~ (2 sqrt2/3)(1-z)^{3/2}, boundary leg at arg(1-z) = -pi/3
        const double mag = std::pow(1.5 * s / std::sqrt(2.0), 2.0 / 3.0);
        z = 1.0 - std::polar(mag, -kPi / 3.0);
    } else {
        z = eb.seed(s);
    }
    const cplx target(0.0, -s);
    for (int it = 0; it < 80; ++it) {
        const cplx f = rho(z) - target;
        if (std::abs(f) < 1e-13) break;
        const cplx dp = rho_prime(z);
        cplx step = f / dp;
        // keep iterates in the closed upper half-plane near the curve
        cplx zn = z - step;
        int halvings = 0;
        while ((zn.imag() < -1e-9 || std::abs(zn) > 2.0) && halvings < 30) {
            step *= 0.5;
            zn = z - step;
            ++halvings;
        }
        z = zn;
    }
    if (std::abs(rho(z) - target) > 1e-10)
        throw std::runtime_error("rho_inverse_boundary: Newton residual above 1e-10");
    if (z.imag() < 0.0) z = cplx(z.real(), 0.0);
    return z;
}

double boundary_crossing(double theta)
{
    if (theta <= 0.0 || theta >= kPi)
        throw std::out_of_range("boundary_crossing: theta outside (0, pi)");
    const cplx dir = std::polar(1.0, theta);
    double lo = 0.1, hi = 1.1; // Re rho > 0 at lo (inside K), < 0 at hi
    for (int it = 0; it < 70; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (rho(mid * dir).real() > 0.0) lo = mid; else hi = mid;
    }
    return 0.5 * (lo + hi);
}

namespace {

double factorial(int k)
{
    double r = 1.0;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

// tail int_T^inf (-Re rho)(t e^{i theta}) t^{-(n+1)} dt from the large-t series
//   -Re rho = t sin(th) - sin(th)/(2t) - sin(3th)/(24 t^3) - sin(5th)/(80 t^5) - 5 sin(7th)/(896 t^7)
double h_tail(double theta, int n, double T)
{
    const double s1 = std::sin(theta), s3 = std::sin(3 * theta);
    const double s5 = std::sin(5 * theta), s7 = std::sin(7 * theta);
    double tail = s1 * std::pow(T, 1.0 - n) / (n - 1.0);
    tail -= 0.5 * s1 * std::pow(T, -(n + 1.0)) / (n + 1.0);
    tail -= s3 / 24.0 * std::pow(T, -(n + 3.0)) / (n + 3.0);
    tail -= s5 / 80.0 * std::pow(T, -(n + 5.0)) / (n + 5.0);
    tail -= 5.0 * s7 / 896.0 * std::pow(T, -(n + 7.0)) / (n + 7.0);
    return tail;
}

} // namespace

double h_sector_weight(double theta, int n, double rel_tol)
{
    if (theta <= 0.0 || theta >= kPi)
        throw std::out_of_range("h_sector_weight: theta outside (0, pi)");
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("h_sector_weight: n must be odd and >= 3");
    const double tstar = boundary_crossing(theta);
    const double T = std::max(10.0, 2.0 / std::sin(theta));
    const cplx dir = std::polar(1.0, theta);
    auto f = [&](double t) { return neg_re_rho_plus(t * dir) * std::pow(t, -(n + 1.0)); };
    const double finite = integrate_or_throw(f, tstar, T, rel_tol, 0.0, 8000);
    return 4.0 / factorial(n - 2) * (finite + h_tail(theta, n, T));
}

double h3_closed_form(double theta)
{
    const double tstar = boundary_crossing(theta);
    const cplx zs = tstar * std::polar(1.0, theta);
    const cplx w = sqrt_one_minus_z2(zs);
    const double phi = (w * w * w).real() / (tstar * tstar * tstar);
    return 4.0 / 9.0 * (phi + std::sin(3.0 * theta));
}

} // namespace polecount
