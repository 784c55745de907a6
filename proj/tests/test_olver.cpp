#include "polecount/olver.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace polecount;
namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("rho on the real interval matches the derivative quadrature")
{
    CHECK(std::abs(rho(cplx(1.0, 0.0))) < 1e-14);
    const double want = oracle::rho_on_unit_interval(0.5);
    CHECK(rho(cplx(0.5, 0.0)).real() == doctest::Approx(want).epsilon(1e-10));
    CHECK(std::abs(rho(cplx(0.5, 0.0)).imag()) < 1e-14);
}

TEST_CASE("rho on the positive imaginary axis has Im = -pi/2")
{
    for (double y : {0.3, 0.6627, 2.0})
        CHECK(rho(cplx(0.0, y)).imag() == doctest::Approx(-kPi / 2).epsilon(1e-14));
    // -Re rho(2i) = sqrt(5) - log((1+sqrt5)/2)
    const double want = std::sqrt(5.0) - std::log((1.0 + std::sqrt(5.0)) / 2.0);
    CHECK(neg_re_rho_plus(cplx(0.0, 2.0)) == doctest::Approx(want).epsilon(1e-13));
}

TEST_CASE("rho domain errors")
{
    CHECK_THROWS_AS(rho(cplx(0.0, 0.0)), std::domain_error);
    CHECK_THROWS_AS(rho(cplx(-1.0, 0.0)), std::domain_error);
    CHECK_THROWS_AS(rho_prime(cplx(0.0, 0.0)), std::domain_error);
}

TEST_CASE("rho_prime closed values and finite-difference consistency")
{
    CHECK(rho_prime(cplx(0.5, 0.0)).real() == doctest::Approx(-std::sqrt(0.75) / 0.5).epsilon(1e-12));
    const cplx at_i = rho_prime(cplx(0.0, 1.0));
    CHECK(std::abs(at_i) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(at_i.imag() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12)); // i sqrt2

    double worst = 0.0;
    for (const cplx& z : oracle::sector_points(100, 0.1, kPi - 0.1, 0.2, 5.0))
        worst = std::max(worst, std::abs(oracle::rho_derivative_fd(z) - rho_prime(z)));
    CHECK(worst <= 1e-6);
}

TEST_CASE("zeta branch and continuity at z = 1")
{
    CHECK(std::abs(zeta(cplx(1.0, 0.0))) < 1e-14);
    const double r05 = oracle::rho_on_unit_interval(0.5);
    CHECK(zeta(cplx(0.5, 0.0)).real() ==
          doctest::Approx(std::pow(1.5 * r05, 2.0 / 3.0)).epsilon(1e-9));
    CHECK(zeta(cplx(0.5, 0.0)).real() > 0.0);

    const cplx ref = zeta(cplx(1.0 - 1e-3, 0.0));
    for (int k = 0; k < 24; ++k) {
        const cplx z = cplx(1.0, 0.0) + std::polar(1e-3, 2.0 * kPi * k / 24.0);
        if (z.imag() == 0.0 && z.real() < 1.0) continue;
        CHECK(std::abs(zeta(z) - ref) <= 1e-2);
    }
    // real and negative beyond z = 1
    CHECK(zeta(cplx(1.5, 0.0)).real() < 0.0);
    CHECK(std::abs(zeta(cplx(1.5, 0.0)).imag()) < 1e-12);
}

TEST_CASE("branch coherence: (2/3) zeta^{3/2} = rho across the upper sector")
{
    for (const cplx& z : oracle::sector_points(200, 0.1, kPi - 0.1, 0.2, 5.0)) {
        const cplx zt = zeta(z);
        const cplx rh = rho(z);
        CHECK(std::abs((2.0 / 3.0) * std::pow(zt, 1.5) - rh) <= 1e-9);
        // cube form is branch-free
        const cplx lhs = zt * zt * zt;
        const cplx rhs = 2.25 * rh * rh;
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));
    }
}

TEST_CASE("eye boundary: t0, intercept, endpoints, Re rho = 0")
{
    const EyeBoundary eb = eye_boundary(512);
    CHECK(std::abs(eb.t0 - 1.19967864) <= 1e-7);
    CHECK(eb.samples.front().z == cplx(1.0, 0.0));
    CHECK(std::abs(eb.samples.back().z - cplx(0.0, 0.6627)) <= 1e-3);
    for (const auto& s : eb.samples)
        CHECK(std::abs(rho(s.z).real()) <= 1e-10);
    CHECK_THROWS_AS(eye_boundary(1), std::invalid_argument);
}

TEST_CASE("Re rho is positive inside K and negative outside (upper half)")
{
    const EyeBoundary eb = eye_boundary(256);
    for (const auto& s : eb.samples) {
        if (s.t == 0.0 || s.t >= eb.t0) continue;
        CHECK(rho(0.9 * s.z).real() > 0.0);
        CHECK(rho(1.1 * s.z).real() < 0.0);
    }
    CHECK(neg_re_rho_plus(cplx(0.1, 0.1)) == 0.0);
    for (const auto& s : eb.samples)
        if (s.z.imag() > 0.0) CHECK(neg_re_rho_plus(s.z) <= 1e-9);
}

TEST_CASE("radial monotonicity and reflection symmetry of Re rho")
{
    for (double th : {0.3, 1.0, kPi / 2, 2.5}) {
        double prev = -rho(0.05 * std::polar(1.0, th)).real();
        for (double t = 0.1; t < 6.0; t += 0.05) {
            const double cur = -rho(t * std::polar(1.0, th)).real();
            CHECK(cur > prev);
            prev = cur;
        }
    }
    for (const cplx& z : oracle::sector_points(50, 0.05, kPi - 0.05, 0.2, 4.0))
        CHECK(rho(cplx(-z.real(), z.imag())).real() ==
              doctest::Approx(rho(z).real()).epsilon(1e-11));
}

TEST_CASE("rho_inverse_boundary round trip and landmarks")
{
    const EyeBoundary eb = eye_boundary(512);
    CHECK(rho_inverse_boundary(0.0, eb) == cplx(1.0, 0.0));
    CHECK(std::abs(rho_inverse_boundary(kPi / 2, eb) - cplx(0.0, 0.6627)) <= 1e-3);
    for (int i = 0; i <= 60; ++i) {
        const double s = kPi * i / 60.0;
        const cplx z = rho_inverse_boundary(s, eb);
        CHECK(std::abs(rho(z) + cplx(0.0, s)) <= 1e-10);
        if (s < kPi / 2) CHECK(z.real() >= 0.0);
        if (s > kPi / 2) CHECK(z.real() <= 0.0);
    }
    CHECK_THROWS_AS(rho_inverse_boundary(-0.1, eb), std::out_of_range);
    CHECK_THROWS_AS(rho_inverse_boundary(kPi + 1e-6, eb), std::out_of_range);
}

TEST_CASE("sector weight h_3: closed form, quadrature, vanishing endpoints")
{
    // pinned by two independent routes: adaptive quadrature of the radial
    // integral, and the antiderivative evaluated at the crossing and at the
    // infinite endpoint (the sin 3*theta term)
    CHECK(h_sector_weight(kPi / 2, 3) == doctest::Approx(2.1917411894620).epsilon(1e-9));
    CHECK(h3_closed_form(kPi / 2) == doctest::Approx(2.1917411894620).epsilon(1e-9));

    double prev = h_sector_weight(0.3, 3);
    for (double th : {0.2, 0.1, 0.05}) {
        const double cur = h_sector_weight(th, 3);
        CHECK(cur < prev);
        CHECK(cur > 0.0);
        prev = cur;
    }

    double worst = 0.0;
    for (int i = 1; i <= 50; ++i) {
        const double th = kPi * i / 51.0;
        worst = std::max(worst, std::abs(h_sector_weight(th, 3) - h3_closed_form(th)));
    }
    CHECK(worst <= 1e-6);

    CHECK_THROWS_AS(h_sector_weight(0.0, 3), std::out_of_range);
    CHECK_THROWS_AS(h_sector_weight(0.5, 4), std::invalid_argument);
}

TEST_CASE("boundary crossing stays in [intercept, 1]")
{
    const double y0 = std::sqrt(eye_t0() * eye_t0() - 1.0);
    for (double th = 0.05; th < kPi; th += 0.1) {
        const double t = boundary_crossing(th);
        CHECK(t >= y0 - 1e-12);
        CHECK(t <= 1.0 + 1e-12);
    }
    CHECK(boundary_crossing(kPi / 2) == doctest::Approx(y0).epsilon(1e-9));
}
