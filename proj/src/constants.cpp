#include "polecount/constants.hpp"

#include "polecount/olver.hpp"
#include "polecount/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace polecount {

namespace {

constexpr double kPi = 3.14159265358979323846;

double factorial(int k)
{
    double r = 1.0;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

void check_n(int n)
{
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("dimension n must be odd and >= 3");
}

} // namespace

double tau(int n)
{
    check_n(n);
    const double vol = std::pow(kPi, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
    return std::pow(2.0 * kPi, -double(n)) * vol * vol;
}

namespace {

// theta-integral of the large-t series of [-Re rho], for the radial tail:
// int_0^pi [-Re rho](t e^{i th}) dth = 2t - 1/t - 1/(36 t^3) - 1/(200 t^5) - ...
double area_tail(int n, double T)
{
    double tail = 2.0 * std::pow(T, 1.0 - n) / (n - 1.0);
    tail -= std::pow(T, -(n + 1.0)) / (n + 1.0);
    tail -= (1.0 / 36.0) * std::pow(T, -(n + 3.0)) / (n + 3.0);
    tail -= (1.0 / 200.0) * std::pow(T, -(n + 5.0)) / (n + 5.0);
    tail -= (5.0 / 3136.0) * std::pow(T, -(n + 7.0)) / (n + 7.0);
    return tail;
}

} // namespace

double a_area(int n, double rel_tol)
{
    check_n(n);
    static const EyeBoundary eb = eye_boundary(512);
    const double y0 = eb.samples.back().z.imag();
    const double T = 12.0;

    auto g = [&](double t) {
        // angular integral at fixed radius; [-Re rho]_+ kills the part in K
        auto f = [&](double th) { return neg_re_rho_plus(t * std::polar(1.0, th)); };
        return 2.0 * integrate_or_throw(f, 1e-12, kPi / 2.0, 1e-9, 1e-13, 2000);
    };
    auto outer = [&](double t) { return g(t) * std::pow(t, -(n + 1.0)); };

    // the integrand has a kink where the circle |z| = t leaves K; split at 1
    const double part1 = integrate_or_throw(outer, y0, 1.0, rel_tol * 0.3, 0.0, 4000);
    const double part2 = integrate_or_throw(outer, 1.0, T, rel_tol * 0.3, 0.0, 4000);
    const double integral = part1 + part2 + area_tail(n, T);
    return 2.0 * n / (kPi * factorial(n - 2)) * integral - 2.0 * tau(n);
}

double a_area_h_route(int n, double rel_tol)
{
    check_n(n);
    auto f = [&](double th) { return h_sector_weight(th, n, 1e-9); };
    // h_n vanishes linearly at both endpoints and is symmetric about pi/2
    const double integral = 2.0 * integrate_or_throw(f, 1e-9, kPi / 2.0, rel_tol * 0.5, 0.0, 4000);
    return n / (2.0 * kPi) * integral - 2.0 * tau(n);
}

namespace {

// |1-z^2|^{1/2} / |z|^{n+1} at a curve point
double boundary_density(cplx z, int n)
{
    const double a = std::abs(1.0 - z * z);
    return std::sqrt(a) / std::pow(std::abs(z), n + 1.0);
}

// curve derivatives on the right half of the eye; x' via c = x^2/t so the
// stable evaluation inside eye_point is reused
void curve_velocity(double t, double t0, double& xp, double& yp)
{
    const cplx z = eye_point(t);
    const double x = z.real(), y = z.imag();
    const double c = x * x / t;
    const double sh = std::sinh(t);
    const double cprime = -1.0 / (sh * sh) - 1.0;
    xp = (c + t * cprime) / (2.0 * x);
    const double th = std::tanh(t);
    const double sech2 = 1.0 - th * th;
    yp = (2.0 * t - th - t * sech2) / (2.0 * y);
    (void)t0;
}

} // namespace

double a_boundary(int n, double rel_tol)
{
    check_n(n);
    const double t0 = eye_t0();
    const double y0 = std::sqrt(t0 * t0 - 1.0);
    const double split = t0 - 0.04;

    auto direct = [&](double t) {
        double xp, yp;
        curve_velocity(t, t0, xp, yp);
        return boundary_density(eye_point(t), n) * std::hypot(xp, yp);
    };
    // near t0 the speed blows up like (t0 - t)^{-1/2}; substitute t = t0 - u^2
    auto top = [&](double u) {
        if (u < 1e-12) {
            const cplx z(0.0, y0);
            return boundary_density(z, n) * std::pow(t0, 1.5);
        }
        const double t = t0 - u * u;
        const cplx z = eye_point(t);
        const double x = z.real(), y = z.imag();
        const double c = x * x / t;
        const double sh = std::sinh(t);
        const double cprime = -1.0 / (sh * sh) - 1.0;
        const double u_xp = u * (c + t * cprime) / (2.0 * x);  // u * x'(t), finite at u -> 0
        const double th = std::tanh(t);
        const double yp = (2.0 * t - th - t * (1.0 - th * th)) / (2.0 * y);
        const double dzdu = 2.0 * std::hypot(u_xp, u * yp);
        return boundary_density(z, n) * dzdu;
    };

    const double half = integrate_or_throw(direct, 0.0, split, rel_tol * 0.4, 0.0, 4000) +
                        integrate_or_throw(top, 0.0, std::sqrt(t0 - split), rel_tol * 0.4, 0.0, 4000);
    return 2.0 / (kPi * n * factorial(n - 2)) * 2.0 * half;
}

std::pair<double, double> radial_identity(int n)
{
    check_n(n);
    // t = 1/s then s = sin(u) turns the integral into a smooth one on [0, pi/2]
    auto f = [&](double u) {
        const double s = std::sin(u);
        const double c = std::cos(u);
        return c * c * std::pow(s, n - 2.0);
    };
    const double lhs = integrate_or_throw(f, 0.0, kPi / 2.0, 1e-12, 0.0, 4000);
    const double rhs = std::sqrt(kPi) * std::tgamma(0.5 * (n - 1)) / (2.0 * n * std::tgamma(0.5 * n));
    return {lhs, rhs};
}

double duplication_residual(int n)
{
    check_n(n);
    const double rhs = radial_identity(n).second;
    const double t = tau(n);
    return std::abs(2.0 / (kPi * n * factorial(n - 2)) * rhs - t) / t;
}

ConstantReport constant_report(int n, double rel_tol)
{
    ConstantReport rep;
    rep.n = n;
    rep.tau_n = tau(n);
    rep.a_area = a_area(n, rel_tol);
    rep.a_boundary = a_boundary(n, std::min(rel_tol, 1e-8));
    const auto rad = radial_identity(n);
    rep.radial_integral = rad.first;
    rep.identity_residuals["two_route_rel"] =
        std::abs(rep.a_area - rep.a_boundary) / rep.a_boundary;
    rep.identity_residuals["h_route_rel"] =
        std::abs(a_area_h_route(n, rel_tol) - rep.a_area) / rep.a_area;
    rep.identity_residuals["radial_identity_rel"] =
        std::abs(rad.first - rad.second) / rad.second;
    rep.identity_residuals["duplication_rel"] = duplication_residual(n);
    return rep;
}

} // namespace polecount
