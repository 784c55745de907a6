#include "polecount/sphere.hpp"

#include "polecount/constants.hpp"

#include <doctest.h>

#ifdef POLECOUNT_HAVE_EIGEN
#include <Eigen/Dense>
#endif

#include <algorithm>
#include <cmath>
#include <complex>

using namespace polecount;
namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("spherical harmonic multiplicities")
{
    for (int l : {0, 1, 5, 17})
        CHECK(multiplicity_m(l, 3) == 2 * l + 1);
    CHECK(multiplicity_m(0, 5) == 1);
    CHECK(multiplicity_m(1, 5) == 5);
    CHECK(multiplicity_m(2, 7) == 27); // (2*2+5)/5 * C(6,4)
    CHECK_THROWS_AS(multiplicity_m(-1, 3), std::invalid_argument);
    CHECK_THROWS_AS(multiplicity_m(1, 4), std::invalid_argument);
}

TEST_CASE("multiplicity leading behavior 2 l^{n-2}/(n-2)!")
{
    // the first correction is 4.5/l for n = 5, so at l = 200 the deviation
    // is 2.27%; it halves when l doubles
    auto dev = [](int l) {
        return std::abs(double(multiplicity_m(l, 5)) * 6.0 / (2.0 * std::pow(l, 3.0)) - 1.0);
    };
    CHECK(dev(200) <= 0.023);
    CHECK(dev(400) <= 0.0115);
    CHECK(dev(400) < dev(200));
    CHECK(dev(250) <= 0.02);
}

TEST_CASE("sphere zeros: elementary low orders")
{
    CHECK(sphere_zeros(0, 3, 1.0).empty());

    const auto z1 = sphere_zeros(1, 3, 1.0);
    REQUIRE(z1.size() == 1);
    CHECK(std::abs(z1[0] - cplx(0.0, -1.0)) <= 1e-12);

    const auto z2 = sphere_zeros(2, 3, 1.0);
    REQUIRE(z2.size() == 2);
    CHECK(std::abs(z2[0] - cplx(-std::sqrt(3.0) / 2.0, -1.5)) <= 1e-12);
    CHECK(std::abs(z2[1] - cplx(std::sqrt(3.0) / 2.0, -1.5)) <= 1e-12);
}

TEST_CASE("zeros lie in the lower half-plane, conjugate-paired, Re-sorted")
{
    for (int l : {5, 12, 33}) {
        const auto zs = sphere_zeros(l, 3, 1.0);
        CHECK(int(zs.size()) == HalfIntOrder::from_ln(l, 3).poly_degree());
        for (size_t i = 0; i < zs.size(); ++i) {
            CHECK(zs[i].imag() < 0.0);
            if (i > 0) CHECK(zs[i].real() >= zs[i - 1].real());
            // the set is symmetric under lambda -> -conj(lambda)
            const cplx mirror = -std::conj(zs[i]);
            double best = 1e9;
            for (const auto& w : zs) best = std::min(best, std::abs(w - mirror));
            CHECK(best <= 1e-9);
        }
    }
}

#ifdef POLECOUNT_HAVE_EIGEN
TEST_CASE("companion-matrix cross-check for moderate degrees")
{
    // coefficient-space roots carry the e^{nu(|z|-Im z)} conditioning of the
    // reverse-Bessel polynomial, so the match tolerance is loose at l = 20
    for (int l : {5, 12, 20}) {
        const auto coeffs = reverse_bessel_coeffs(l);
        const int m = int(coeffs.size()) - 1;
        Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(m, m);
        for (int i = 1; i < m; ++i) comp(i, i - 1) = 1.0;
        for (int i = 0; i < m; ++i) comp(i, m - 1) = -coeffs[i] / coeffs[m];
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
        std::vector<cplx> lam;
        for (int i = 0; i < m; ++i) {
            const std::complex<double> x = es.eigenvalues()[i];
            lam.push_back(cplx(0, 1) * std::conj(cplx(x.real(), x.imag())));
        }
        const auto zs = sphere_zeros(l, 3, 1.0);
        for (const auto& z : zs) {
            double best = 1e9;
            for (const auto& w : lam) best = std::min(best, std::abs(z - w));
            CHECK(best <= 2e-5);
        }
    }
}
#endif

TEST_CASE("Olver approximate resonances: count, sector accuracy, localization")
{
    for (int l : {1, 10, 30})
        CHECK(int(olver_approx_resonances(HalfIntOrder::from_ln(l, 3)).size()) == l);

    // each approximation in the sector is within 5/nu of an exact zero
    {
        const HalfIntOrder nu = HalfIntOrder::from_ln(30, 3);
        const double v = nu.nu();
        const auto exact = sphere_zeros(30, 3, 1.0);
        double worst = 0.0;
        for (const cplx& a : olver_approx_resonances(nu)) {
            const double th = std::arg(std::conj(a));
            if (th < kPi / 6 || th > 5 * kPi / 6) continue;
            double best = 1e9;
            for (const auto& e : exact) best = std::min(best, std::abs(a - e));
            worst = std::max(worst, best);
        }
        CHECK(worst <= 5.0 / v);
    }

    // all lambda/nu on the boundary within 0.05 for nu = 60.5
    {
        const HalfIntOrder nu = HalfIntOrder::from_ln(60, 3);
        for (const cplx& a : olver_approx_resonances(nu))
            CHECK(shared_eye().distance(a / nu.nu()) <= 0.05);
    }
}

TEST_CASE("sphere table: small radius enumeration and R0 scaling")
{
    // smallest resonance moduli: l=1 gives |-i| = 1, l=2 gives sqrt3, so
    // r_max = 1.2 sees exactly the l = 1 triple
    const auto t12 = sphere_table(3, 1.0, 1.2);
    REQUIRE(t12.size() == 1);
    CHECK(t12[0].l == 1);
    CHECK(t12[0].multiplicity == 3);
    CHECK(std::abs(t12[0].lambda - cplx(0.0, -1.0)) <= 1e-12);

    CHECK(sphere_table(3, 1.0, 0.5).empty());

    const auto a = sphere_table(3, 2.0, 9.0);
    const auto b = sphere_table(3, 1.0, 18.0);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].l == b[i].l);
        CHECK(std::abs(a[i].lambda - b[i].lambda / 2.0) <= 1e-11);
    }
}

TEST_CASE("K-localization of scaled zeros for nu >= 20.5")
{
    for (int l : {20, 27, 41}) {
        const HalfIntOrder nu = HalfIntOrder::from_ln(l, 3);
        const double v = nu.nu();
        for (const cplx& z : sphere_zeros(l, 3, 1.0))
            CHECK(shared_eye().distance(z / v) <= 5.0 / v);
    }
}

TEST_CASE("counting constant trend toward A")
{
    const double a_const = a_boundary(3);
    const auto recs = sphere_table(3, 1.0, 67.1);
    auto n_below = [&](double r) {
        long long n = 0;
        for (const auto& rec : recs)
            if (std::abs(rec.lambda) < r) n += rec.multiplicity;
        return n;
    };
    for (double r : {40.0, 55.0, 67.0}) {
        const double ratio = double(n_below(r)) / (r * r * r);
        CHECK(std::abs(ratio - a_const) <= 0.03);
    }
    CHECK(std::abs(double(n_below(67.0)) / (67.0 * 67.0 * 67.0) - a_const) <= 0.0121);
}

TEST_CASE("scatter data behind the resonance figure stays on the scaled eye")
{
    const auto recs = sphere_table(3, 1.0, 31.0);
    for (const auto& rec : recs) {
        CHECK(rec.lambda.imag() < 0.0);
        const double v = rec.nu.nu();
        if (rec.nu.twice_nu >= 41) // nu >= 20.5
            CHECK(shared_eye().distance(rec.lambda / v) <= 5.0 / v);
    }
}
