#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "swb/eisenstein.hpp"

using namespace swb;

namespace oracle {
// mpmath, 17 digits
constexpr double phi_2 = 1.74456808213125595235;       // zeta*(3)/zeta*(4)
constexpr double c238 = -0.34597473053221416729;       // weight-3/2 constant
constexpr double ct_s0_2 = 0.54719755119659774615;     // pi/3 - 1/2
}  // namespace oracle

TEST_CASE("scattering quotient") {
    CHECK(std::abs(phi_scattering({2.0, 0.0}) - oracle::phi_2) < 1e-12);
    cplx s{0.7, 0.2};
    CHECK(std::abs(phi_scattering(s) * phi_scattering(1.0 - s) - 1.0) <
          1e-12);
    // simple pole at s = 1 with residue 1/(2 zeta*(2)) = 3/pi
    LaurentData d = laurent_extract(
        [](cplx s) { return phi_scattering(s); }, cplx(1.0, 0.0), 0.1, 64);
    CHECK(std::abs(d.c_m1 - 3.0 / M_PI) < 1e-10);
    CHECK_THROWS(phi_scattering(cplx(1.0, 0.0)));
}

TEST_CASE("fourier vs direct orbit sum") {
    for (HPoint z : {HPoint{0.0, 1.0}, HPoint{0.3, 1.7}}) {
        cplx f = eisenstein_zagier(z, {2.0, 0.0}, EisMode::fourier);
        cplx d = eisenstein_zagier(z, {2.0, 0.0}, EisMode::direct);
        CHECK(std::abs(f - d) < 1e-8);
    }
    std::mt19937 rng(55);
    std::uniform_real_distribution<double> dx(-0.5, 0.5), dy(0.8, 2.0),
        dt(-1.0, 1.0);
    for (int i = 0; i < 10; ++i) {
        HPoint z{dx(rng), dy(rng)};
        cplx s{2.0, dt(rng)};
        cplx f = eisenstein_zagier(z, s, EisMode::fourier);
        cplx d = eisenstein_zagier(z, s, EisMode::direct);
        CHECK(std::abs(f - d) < 1e-8);
    }
    CHECK_THROWS_AS(
        eisenstein_zagier({0.0, 1.0}, {0.9, 0.0}, EisMode::direct),
        std::domain_error);
}

TEST_CASE("constant Fourier coefficient is y^s + phi(s) y^(1-s)") {
    double y = 3.0;
    cplx avg = quad_gk(
        [y](double x) {
            return eisenstein_zagier({x, y}, {2.0, 0.0}, EisMode::fourier);
        },
        0.0, 1.0, 1e-12);
    CHECK(std::abs(avg - (y * y + oracle::phi_2 / y)) < 1e-10);
}

TEST_CASE("SL2(Z)-invariance in z") {
    HPoint z{0.2, 1.3};
    HPoint sz{-z.x / (z.x * z.x + z.y * z.y),
              z.y / (z.x * z.x + z.y * z.y)};
    cplx a = eisenstein_zagier(z, {2.0, 0.0}, EisMode::fourier);
    cplx b = eisenstein_zagier(sz, {2.0, 0.0}, EisMode::fourier);
    CHECK(std::abs(a - b) < 1e-9);
}

TEST_CASE("completed functional equation s <-> 1-s") {
    std::mt19937 rng(8);
    std::uniform_real_distribution<double> dx(-0.4, 0.4), dy(0.9, 1.6),
        ds(0.2, 0.45), dt(-0.8, 0.8);
    for (int i = 0; i < 6; ++i) {
        HPoint z{dx(rng), dy(rng)};
        cplx s{ds(rng), dt(rng)};
        cplx a = zeta_star(2.0 * s) *
                 eisenstein_zagier(z, s, EisMode::fourier);
        cplx b = zeta_star(2.0 - 2.0 * s) *
                 eisenstein_zagier(z, 1.0 - s, EisMode::fourier);
        CHECK(std::abs(a - b) < 1e-8 * (1.0 + std::abs(a)));
    }
}

TEST_CASE("truncated integral closed form") {
    CHECK(std::abs(truncated_rs_closed({2.0, 0.0}, 2.0) -
                   (2.0 - oracle::phi_2 / 8.0)) < 1e-12);
    // quadrature over the truncated fundamental domain
    Region r{RegionKind::FundamentalTruncated, 2.0};
    IntegrateOptions opt;
    QuadratureResult q = integrate(
        [](HPoint p) {
            return eisenstein_zagier(p, {2.0, 0.0}, EisMode::fourier);
        },
        r, 1e-7, opt);
    CHECK(std::abs(q.value - truncated_rs_closed({2.0, 0.0}, 2.0)) < 1e-6);
}

TEST_CASE("constant term at s = 0") {
    CHECK(std::abs(ct_powerint(CtKind::ct_s0, 2.0) - oracle::ct_s0_2) <
          1e-9);
    for (double That : {1.0, 4.0, 10.0})
        CHECK(std::abs(ct_powerint(CtKind::ct_s0, That) -
                       (M_PI / 3.0 - 1.0 / That)) < 1e-9);
}

TEST_CASE("constant term at s = 1 and the residue normalization") {
    CHECK(std::abs(ct_powerint(CtKind::ct_s1, 100.0) - std::log(100.0)) <
          0.06);
    CHECK(std::abs(ct_powerint(CtKind::ct_s1, 1e4) - std::log(1e4)) <
          0.0015);
    // residue at s=1 is 1 - (3/pi)/That: the orbit-sum mass of the
    // truncated domain against the pole of E
    for (double That : {2.0, 5.0}) {
        LaurentData d = laurent_extract(
            [That](cplx s) { return truncated_rs_closed(s, That); },
            cplx(1.0, 0.0), 0.2, 64);
        CHECK(std::abs(d.c_m1 + (3.0 / M_PI) / That - 1.0) < 1e-9);
    }
}

TEST_CASE("constant term of the s-derivative at s = 0") {
    // first-order Laurent data of the closed form gives, for the pure
    // power piece, -(log That + 1)/That, and the scattering piece shifts
    // by phi'(0) log That = -(pi/3) log That between two cutoffs
    double lhs = ct_powerint(CtKind::ct_s0_log, 2.0) -
                 ct_powerint(CtKind::ct_s0_log, 8.0);
    double L1 = std::log(2.0), L2 = std::log(8.0);
    double rhs =
        -(L1 + 1.0) / 2.0 + (L2 + 1.0) / 8.0 - (M_PI / 3.0) * (L1 - L2);
    CHECK(std::abs(lhs - rhs) < 1e-9);
}

TEST_CASE("weight-3/2 constant") {
    CHECK(std::abs(weight32_A0_constant() - oracle::c238) < 1e-13);
    // independent route: sqrt(2 pi) times the constant term at s = 1/2 of
    // 2^(-s) Gamma(s) zeta(2s)/zeta(2s+1)
    LaurentData d = laurent_extract(
        [](cplx s) {
            return std::pow(2.0, -s) * cgamma(s) * zeta(2.0 * s) /
                   zeta(2.0 * s + 1.0);
        },
        cplx(0.5, 0.0), 0.1, 64);
    CHECK(std::abs(std::sqrt(2.0 * M_PI) * d.c_0.real() - oracle::c238) <
          1e-12);
    // v + sqrt(v) scaling
    CHECK(std::abs((weight32_A0(4.0) - 4.0) - 2.0 * (weight32_A0(1.0) - 1.0)) <
          1e-14);
}
