#include "polecount/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace polecount {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLn2 = 0.69314718055994530942;

void check_arg(cplx z)
{
    if (z == cplx(0.0, 0.0))
        throw std::domain_error("bessel/hankel: z = 0 is a branch point");
    if (z.imag() == 0.0 && z.real() < 0.0)
        throw std::domain_error("bessel/hankel: the cut arg z = +-pi is excluded");
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::domain_error("bessel/hankel: non-finite argument");
}

// value * 2^e2 with |value| kept in a sane binade range
struct Scaled {
    cplx v;
    long e2 = 0;
};

Scaled normalized(cplx v, long e2)
{
    const double m = std::max(std::abs(v.real()), std::abs(v.imag()));
    if (m == 0.0 || !std::isfinite(m)) return {v, e2};
    int ex = 0;
    std::frexp(m, &ex);
    if (ex > 400 || ex < -400) {
        v = cplx(std::ldexp(v.real(), -ex), std::ldexp(v.imag(), -ex));
        e2 += ex;
    }
    return {v, e2};
}

cplx apply_exp(cplx v, long e2)
{
    if (e2 > 3000) return v * std::numeric_limits<double>::infinity();
    while (e2 > 900) { v = cplx(std::ldexp(v.real(), 900), std::ldexp(v.imag(), 900)); e2 -= 900; }
    while (e2 < -900) { v = cplx(std::ldexp(v.real(), -900), std::ldexp(v.imag(), -900)); e2 += 900; }
    return cplx(std::ldexp(v.real(), int(e2)), std::ldexp(v.imag(), int(e2)));
}

// sin z and cos z scaled by a common power of two (e^{|Im z|} can overflow)
void scaled_sin_cos(cplx z, cplx& s, cplx& c, long& e2)
{
    const double x = z.real(), y = z.imag();
    if (std::abs(y) <= 30.0) {
        s = std::sin(z);
        c = std::cos(z);
        e2 = 0;
        return;
    }
    // cosh y ~ sinh y ~ e^{|y|}/2 to 1e-26 relative
    const double ay = std::abs(y);
    const long k = long(ay / kLn2);
    const double f = std::exp(ay - double(k) * kLn2) * 0.5;
    const double sg = (y > 0.0) ? 1.0 : -1.0;
    s = cplx(std::sin(x) * f, sg * std::cos(x) * f);
    c = cplx(std::cos(x) * f, -sg * std::sin(x) * f);
    e2 = k;
}

// e^{i w} as value * 2^e2
void scaled_cis(cplx w, cplx& v, long& e2)
{
    // e^{iw} = e^{i Re w} e^{-Im w}
    const double m = -w.imag();
    const long k = long(std::floor(m / kLn2));
    v = std::polar(std::exp(m - double(k) * kLn2), w.real());
    e2 = k;
}

} // namespace

HalfIntOrder HalfIntOrder::from_ln(int l, int n)
{
    if (l < 0) throw std::invalid_argument("HalfIntOrder: l must be >= 0");
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("HalfIntOrder: n must be odd and >= 3");
    HalfIntOrder o;
    o.l = l;
    o.n = n;
    o.twice_nu = 2 * l + n - 2;
    return o;
}

std::vector<double> reverse_bessel_coeffs(int m)
{
    if (m < 0) throw std::invalid_argument("reverse_bessel_coeffs: m must be >= 0");
    std::vector<double> prev{1.0};          // theta_0
    if (m == 0) return prev;
    std::vector<double> cur{1.0, 1.0};      // theta_1 = 1 + x
    for (int k = 2; k <= m; ++k) {
        std::vector<double> next(k + 1, 0.0);
        for (int j = 0; j <= k - 1; ++j) next[j] += (2.0 * k - 1.0) * cur[j];
        for (int j = 0; j <= k - 2; ++j) next[j + 2] += prev[j];
        prev.swap(cur);
        cur.swap(next);
    }
    return cur;
}

ScaledPoly reverse_bessel_eval(int m, cplx x)
{
    // theta_{-1}(x) = 1/x would be the natural seed; start from 0,1 instead
    ScaledPoly out;
    cplx pm1(1.0, 0.0), dm1(0.0, 0.0);   // theta_0, theta_0'
    if (m == 0) { out.value = pm1; out.derivative = dm1; return out; }
    cplx p = x + 1.0, d = cplx(1.0, 0.0); // theta_1, theta_1'
    long e2 = 0;
    const cplx x2 = x * x;
    for (int k = 2; k <= m; ++k) {
        const double a = 2.0 * k - 1.0;
        const cplx pn = a * p + x2 * pm1;
        const cplx dn = a * d + 2.0 * x * pm1 + x2 * dm1;
        pm1 = p; dm1 = d; p = pn; d = dn;
        const double mag = std::max({std::abs(p.real()), std::abs(p.imag()),
                                     std::abs(d.real()), std::abs(d.imag())});
        if (mag > 1e250) {
            const double inv = 0x1p-860;
            p *= inv; d *= inv; pm1 *= inv; dm1 *= inv;
            e2 += 860;
        }
    }
    out.value = p;
    out.derivative = d;
    out.e2 = e2;
    return out;
}

namespace {

// Upward recurrence on theta_m(-+ iz)/z^m.  Follows the solution that grows
// with the order, so it is stable only for the kind that is dominant on that
// side of the real axis: H^{(1)} in Im z >= 0 and H^{(2)} in Im z <= 0.
ScaledCyl hankel_upward(int kind, HalfIntOrder nu, cplx z)
{
    const int m = nu.poly_degree();
    // H^{(1)}_{m+1/2} = -i sqrt(2/(pi z)) e^{+iz} theta_m(-iz)/z^m
    // H^{(2)}_{m+1/2} = +i sqrt(2/(pi z)) e^{-iz} theta_m(+iz)/z^m
    const cplx iu(0.0, 1.0);
    cplx tm1 = (kind == 1) ? iu : -iu; // theta_{-1}(x)/z^{-1} with x = -+iz
    cplx t = cplx(1.0, 0.0);
    long e2 = 0;
    for (int k = 0; k < m; ++k) {
        const cplx tn = ((2.0 * k + 1.0) / z) * t - tm1;
        tm1 = t;
        t = tn;
        const double mag = std::max(std::abs(t.real()), std::abs(t.imag()));
        if (mag > 1e250 || (mag != 0.0 && mag < 1e-250)) {
            const int sh = (mag > 1.0) ? -860 : 860;
            t = cplx(std::ldexp(t.real(), sh), std::ldexp(t.imag(), sh));
            tm1 = cplx(std::ldexp(tm1.real(), sh), std::ldexp(tm1.imag(), sh));
            e2 -= sh;
        }
    }

    cplx ev;
    long ee;
    scaled_cis((kind == 1) ? z : -z, ev, ee);
    const cplx pref = ((kind == 1) ? -iu : iu) * std::sqrt(2.0 / (kPi * z)) * ev;

    ScaledCyl out;
    out.value = pref * t;
    out.derivative = pref * (tm1 - (nu.nu() / z) * t); // C' = C_{nu-1} - (nu/z) C
    out.e2 = e2 + ee;
    const Scaled norm = normalized(out.value, out.e2);
    if (norm.e2 != out.e2) {
        const long d = norm.e2 - out.e2;
        out.value = norm.v;
        out.derivative = apply_exp(out.derivative, -d);
        out.e2 = norm.e2;
    }
    return out;
}

} // namespace

ScaledCyl hankel_h_scaled(int kind, HalfIntOrder nu, cplx z)
{
    if (kind != 1 && kind != 2) throw std::invalid_argument("hankel_h: kind must be 1 or 2");
    check_arg(z);
    const bool unstable = (kind == 2 && z.imag() > 0.0) || (kind == 1 && z.imag() < 0.0);
    if (!unstable) return hankel_upward(kind, nu, z);

    // The requested kind is recessive on this side near nu * dK, where its
    // zeros live; build it as 2J - H^{other}, both stably computable.
    const ScaledCyl J = bessel_j_scaled(nu, z);
    const ScaledCyl O = hankel_upward(kind == 2 ? 1 : 2, nu, z);
    const long e2 = std::max(J.e2, O.e2);
    ScaledCyl out;
    out.value = 2.0 * apply_exp(J.value, J.e2 - e2) - apply_exp(O.value, O.e2 - e2);
    out.derivative =
        2.0 * apply_exp(J.derivative, J.e2 - e2) - apply_exp(O.derivative, O.e2 - e2);
    out.e2 = e2;
    const Scaled norm = normalized(out.value, out.e2);
    if (norm.e2 != out.e2) {
        const long d = norm.e2 - out.e2;
        out.value = norm.v;
        out.derivative = apply_exp(out.derivative, -d);
        out.e2 = norm.e2;
    }
    return out;
}

CylValue hankel_h(int kind, HalfIntOrder nu, cplx z)
{
    const ScaledCyl s = hankel_h_scaled(kind, nu, z);
    return {apply_exp(s.value, s.e2), apply_exp(s.derivative, s.e2)};
}

namespace {

// Miller start index: far enough above max(order, |z|) that the minimal
// solution picked up by the trial seed has decayed by ~e^{-50}.
int miller_start(int m, double r)
{
    const int kref = std::max(m, int(std::ceil(r)));
    const int delta = 14 + int(std::ceil(9.0 * std::cbrt(std::max(r, 1.0))));
    return kref + delta;
}

} // namespace

namespace {

Scaled smul(Scaled a, Scaled b) { return normalized(a.v * b.v, a.e2 + b.e2); }
Scaled sdiv(Scaled a, Scaled b) { return normalized(a.v / b.v, a.e2 - b.e2); }

} // namespace

ScaledCyl bessel_j_scaled(HalfIntOrder nu, cplx z)
{
    check_arg(z);
    const int m = nu.poly_degree();

    cplx s, c;
    long etrig;
    scaled_sin_cos(z, s, c, etrig);
    const cplx root = std::sqrt(2.0 / (kPi * z));

    if (m == 0) {
        // J_{1/2} = sqrt(2/(pi z)) sin z, J_{-1/2} = sqrt(2/(pi z)) cos z
        ScaledCyl out;
        out.value = root * s;
        out.derivative = root * c - (0.5 / z) * out.value;
        out.e2 = etrig;
        return out;
    }

    // Miller: run the trial solution down from M, renormalizing by powers of
    // two; a snapshot at index k holds the trial value times 2^{shift_k}.
    const int M = miller_start(m, std::abs(z));
    cplx gkp1(0.0, 0.0), gk(1.0, 0.0);
    long shift = 0;
    Scaled gm, gmm1, g1, g0;
    for (int k = M; k >= 0; --k) {
        if (k == m) gm = {gk, shift};
        if (k == m - 1) gmm1 = {gk, shift};
        if (k == 1) g1 = {gk, shift};
        if (k == 0) { g0 = {gk, shift}; break; }
        const cplx gkm1 = ((2.0 * k + 1.0) / z) * gk - gkp1;
        gkp1 = gk;
        gk = gkm1;
        const double mag = std::max(std::abs(gk.real()), std::abs(gk.imag()));
        if (mag > 1e250) {
            gk *= 0x1p-860;
            gkp1 *= 0x1p-860;
            shift += 860;
        }
    }

    // normalize against whichever elementary value is larger
    const Scaled j_half = normalized(root * s, etrig);
    const Scaled j_3half = normalized(root * (s / z - c), etrig);
    auto mag2 = [](const Scaled& a) {
        const double m0 = std::abs(a.v);
        return m0 == 0.0 ? -1e308 : std::log2(m0) + double(a.e2);
    };
    const bool use_half = mag2(j_half) >= mag2(j_3half);
    const Scaled jnorm = use_half ? j_half : j_3half;
    const Scaled gnorm = use_half ? g0 : g1;
    if (gnorm.v == cplx(0.0, 0.0))
        throw std::runtime_error("bessel_j: Miller normalization failed");

    const Scaled ratio = sdiv(jnorm, gnorm);
    const Scaled jm = smul(gm, ratio);
    const Scaled jm1 = smul(gmm1, ratio);

    ScaledCyl out;
    out.value = jm.v;
    out.e2 = jm.e2;
    out.derivative = apply_exp(jm1.v, jm1.e2 - jm.e2) - (nu.nu() / z) * jm.v;
    return out;
}

CylValue bessel_j(HalfIntOrder nu, cplx z)
{
    const ScaledCyl s = bessel_j_scaled(nu, z);
    return {apply_exp(s.value, s.e2), apply_exp(s.derivative, s.e2)};
}

std::pair<cplx, cplx> airy_leading(cplx z)
{
    const double az = std::abs(z);
    if (az <= 6.0) {
        // Ai = Ai(0) f + Ai'(0) g with the standard Maclaurin pair
        const double ai0 = 0.35502805388781723926;
        const double aip0 = -0.25881940379280679841;
        cplx f(1.0, 0.0), g = z, fp(0.0, 0.0), gp(1.0, 0.0);
        cplx tf(1.0, 0.0), tg = z;
        const cplx z3 = z * z * z;
        for (int k = 0; k < 40; ++k) {
            tf *= z3 / ((3.0 * k + 2.0) * (3.0 * k + 3.0));
            tg *= z3 / ((3.0 * k + 3.0) * (3.0 * k + 4.0));
            f += tf;
            g += tg;
            if (z != cplx(0.0, 0.0)) {
                fp += tf * (3.0 * (k + 1.0)) / z;
                gp += tg * (3.0 * k + 4.0) / z;
            }
            if (std::abs(tf) + std::abs(tg) < 1e-20 * (std::abs(f) + std::abs(g))) break;
        }
        return {ai0 * f + aip0 * g, ai0 * fp + aip0 * gp};
    }
    const double a = std::arg(z);
    if (std::abs(a) <= 2.0 * kPi / 3.0) {
        // decaying leading form
        const cplx zq = std::pow(z, 0.25);
        const cplx xi = (2.0 / 3.0) * std::pow(z, 1.5);
        const cplx e = std::exp(-xi);
        const double q = 0.5 / std::sqrt(kPi);
        return {q * e / zq, -q * zq * e};
    }
    // oscillatory form near the negative axis, w = -z
    const cplx w = -z;
    const cplx wq = std::pow(w, 0.25);
    const cplx xi = (2.0 / 3.0) * std::pow(w, 1.5);
    const double q = 1.0 / std::sqrt(kPi);
    const cplx ai = q / wq * std::cos(xi - kPi / 4.0);
    const cplx aip = -q * wq * std::sin(xi - kPi / 4.0);
    return {ai, aip};
}

double airy_zero_approx(int k)
{
    if (k < 1) throw std::invalid_argument("airy_zero_approx: k must be >= 1");
    return std::pow(1.5 * (double(k) * kPi - kPi / 4.0), 2.0 / 3.0);
}

namespace {

cplx olver_amplitude(cplx zt, cplx z)
{
    // (4 zeta / (1 - z^2))^{1/4} with 1 - z^2 = w(z)^2 on the coherent branch
    const cplx w = sqrt_one_minus_z2(z);
    return std::pow(4.0 * zt / (w * w), 0.25);
}

} // namespace

cplx olver_leading_j(HalfIntOrder nu, cplx z)
{
    check_arg(z);
    if (std::abs(std::arg(z)) > kPi - 0.05)
        throw std::domain_error("olver_leading_j: too close to the excluded ray arg z = pi");
    const double v = nu.nu();
    const cplx zt = zeta(z);
    const cplx arg = std::cbrt(v * v) * zt;
    return olver_amplitude(zt, z) * airy_leading(arg).first / std::cbrt(v);
}

cplx olver_leading_h2(HalfIntOrder nu, cplx z)
{
    check_arg(z);
    if (std::abs(std::arg(z)) > kPi - 0.05)
        throw std::domain_error("olver_leading_h2: too close to the excluded ray arg z = pi");
    const double v = nu.nu();
    const cplx zt = zeta(z);
    const cplx rot = std::polar(1.0, -2.0 * kPi / 3.0); // Ai_+(w) = Ai(e^{-2 pi i/3} w)
    const cplx arg = rot * std::cbrt(v * v) * zt;
    const cplx pref = 2.0 * std::polar(1.0, kPi / 3.0);
    return pref * olver_amplitude(zt, z) * airy_leading(arg).first / std::cbrt(v);
}

namespace {

double bessel_j_real(HalfIntOrder nu, double x, double* deriv = nullptr)
{
    const CylValue v = bessel_j(nu, cplx(x, 0.0));
    if (deriv) *deriv = v.derivative.real();
    return v.value.real();
}

double refine_zero(HalfIntOrder nu, double x0)
{
    double x = x0;
    for (int it = 0; it < 60; ++it) {
        double dp;
        const double f = bessel_j_real(nu, x, &dp);
        const double step = f / dp;
        x -= step;
        if (std::abs(step) < 1e-12 * std::max(1.0, std::abs(x))) break;
    }
    return x;
}

} // namespace

std::vector<double> bessel_real_zeros(HalfIntOrder nu, double up_to)
{
    if (up_to <= 0.0) throw std::invalid_argument("bessel_real_zeros: up_to must be > 0");
    std::vector<double> zeros;
    const double v = nu.nu();

    // first zero from the Olver expansion, then Newton
    double first = v + 1.8557571 * std::cbrt(v) + 1.033150 / std::cbrt(v);
    first = refine_zero(nu, first);
    if (first > up_to + 2.0) return zeros;
    if (first <= up_to) zeros.push_back(first);

    double x = first;
    while (true) {
        const double rr = std::max(1.0 - (v / x) * (v / x), 0.04);
        const double wav = std::min(kPi / std::sqrt(rr), 6.0);
        double guess = x + wav;
        double zn = refine_zero(nu, guess);
        if (!(zn > x + 0.2 * wav && zn < x + 1.8 * wav)) {
            // fall back to a sign scan
            double a = x + 0.15 * wav;
            double fa = bessel_j_real(nu, a);
            double b = a;
            bool found = false;
            for (int i = 0; i < 30; ++i) {
                b = a + 0.3 * wav;
                const double fb = bessel_j_real(nu, b);
                if (fa * fb < 0.0) { found = true; break; }
                a = b;
                fa = fb;
            }
            if (!found) throw std::runtime_error("bessel_real_zeros: lost the zero trail");
            for (int i = 0; i < 80; ++i) {
                const double mid = 0.5 * (a + b);
                const double fm = bessel_j_real(nu, mid);
                if (fa * fm <= 0.0) b = mid; else { a = mid; fa = fm; }
            }
            zn = refine_zero(nu, 0.5 * (a + b));
        }
        if (zn > up_to) break;
        zeros.push_back(zn);
        x = zn;
    }

    // interlacing validation: J alternates sign at the gap midpoints
    double prev_sign = 0.0;
    for (size_t i = 0; i + 1 < zeros.size(); ++i) {
        const double fm = bessel_j_real(nu, 0.5 * (zeros[i] + zeros[i + 1]));
        const double sg = (fm > 0.0) ? 1.0 : -1.0;
        if (prev_sign != 0.0 && sg == prev_sign)
            throw std::runtime_error("bessel_real_zeros: interlacing check failed (missed zero)");
        prev_sign = sg;
    }
    return zeros;
}

} // namespace polecount
