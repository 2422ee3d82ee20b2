#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "swb/specfun.hpp"

using namespace swb;

// Oracle values computed to 30+ digits with an arbitrary-precision library
// before this implementation was written.
namespace oracle {
const double erf_sqrt_pi_half = 0.92368075054294527954;
const double zetap_m1 = -0.16542114370045092921;   // zeta'(-1)
const double zetap_2 = -0.93754825431584375370;    // zeta'(2)
const double zetastarp_2 = -0.74923516913315133130;
const double zetastarp_m1 = 0.74923516913315133130;
const double gu_mhalf_pihalf = 0.061183113756276057210;   // Gamma(-1/2,pi/2)
const double guda_mhalf_pihalf = 0.046256446180175346320; // dGamma/da there
const double guda_1_5 = 0.011992602943575051187;          // int_5^inf log t e^-t
const double Btilde = 0.023345745822353365548;
const double A = -10.508815706441589712;
const double A_alt = -10.341240706676346251;
const double K_3half_1 = 0.92213700889578911688;
const double K_07_2 = 0.12601327130661063859;
const double zeta_2p3i_re = 0.79802198514627572062;
const double zeta_2p3i_im = -0.11374430805293850022;
}  // namespace oracle

TEST_CASE("erf basics and frozen value") {
    CHECK(erf_(0.0) == 0.0);
    CHECK(std::abs(erf_(1.7) + erf_(-1.7)) < 1e-16);
    CHECK(std::abs(erf_(std::sqrt(M_PI / 2.0)) - oracle::erf_sqrt_pi_half) <
          1e-14);
    // monotonicity on a grid
    double prev = erf_(-3.0);
    for (double x = -2.9; x < 3.0; x += 0.1) {
        CHECK(erf_(x) > prev);
        prev = erf_(x);
    }
}

TEST_CASE("gamma_upper closed forms") {
    CHECK(std::abs(gamma_upper(1.0, 2.0) - std::exp(-2.0)) < 1e-15);
    CHECK(std::abs(gamma_upper(0.5, 0.5) -
                   std::sqrt(M_PI) * std::erfc(std::sqrt(0.5))) < 1e-14);
    double closed = 2.0 * std::pow(M_PI / 2.0, -0.5) * std::exp(-M_PI / 2.0) -
                    2.0 * std::sqrt(M_PI) * std::erfc(std::sqrt(M_PI / 2.0));
    CHECK(std::abs(gamma_upper(-0.5, M_PI / 2.0) - closed) < 1e-14);
    CHECK(std::abs(gamma_upper(-0.5, M_PI / 2.0) - oracle::gu_mhalf_pihalf) <
          1e-14);
    CHECK_THROWS_AS(gamma_upper(1.0, -1.0), std::domain_error);
}

TEST_CASE("gamma_upper recurrence battery") {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> da(-2.0, 3.0), dx(0.1, 20.0);
    for (int i = 0; i < 100; ++i) {
        double a = da(rng), x = dx(rng);
        double g1 = gamma_upper(a + 1.0, x);
        double g0 = gamma_upper(a, x);
        double pw = std::exp(a * std::log(x) - x);
        double scale = std::max({std::abs(g1), std::abs(a * g0), pw});
        CHECK(std::abs(g1 - a * g0 - pw) <= 1e-12 * scale);
    }
}

TEST_CASE("gamma_upper nonpositive integer orders") {
    // Gamma(0,x) = E1(x); Gamma(-1,x) = e^-x/x - E1(x)
    CHECK(std::abs(exp_e1(1.0) - 0.21938393439552027368) < 1e-15);
    CHECK(std::abs(gamma_upper(0.0, 2.5) - exp_e1(2.5)) < 1e-16);
    double x = 0.7;
    CHECK(std::abs(gamma_upper(-1.0, x) -
                   (std::exp(-x) / x - exp_e1(x))) < 1e-13);
}

TEST_CASE("gamma_upper complex order against real path") {
    cplx g = gamma_upper(cplx(-0.5, 0.0), M_PI / 2.0);
    CHECK(std::abs(g.real() - oracle::gu_mhalf_pihalf) < 1e-14);
    CHECK(std::abs(g.imag()) < 1e-15);
    // recurrence at a complex order
    cplx a(0.4, 0.3);
    cplx g1 = gamma_upper(a + 1.0, 1.3);
    cplx g0 = gamma_upper(a, 1.3);
    cplx pw = std::exp(a * std::log(1.3) - 1.3);
    CHECK(std::abs(g1 - a * g0 - pw) < 1e-13);
}

TEST_CASE("gamma_upper_da") {
    CHECK(std::abs(gamma_upper_da(1.0, 5.0) - oracle::guda_1_5) < 1e-14);
    CHECK(std::abs(gamma_upper_da(-0.5, M_PI / 2.0) -
                   oracle::guda_mhalf_pihalf) < 1e-13);
    double h = 1e-5;
    double fd = (gamma_upper(-0.5 + h, M_PI / 2.0) -
                 gamma_upper(-0.5 - h, M_PI / 2.0)) /
                (2.0 * h);
    CHECK(std::abs(gamma_upper_da(-0.5, M_PI / 2.0) - fd) < 1e-7);
    CHECK(gamma_upper_da(0.3, 3.0) > 0.0);
    CHECK(gamma_upper_da(-1.2, 4.0) > 0.0);
}

TEST_CASE("zeta values") {
    CHECK(std::abs(zeta(cplx(2.0)) - M_PI * M_PI / 6.0) < 1e-14);
    CHECK(std::abs(zeta(cplx(0.0)) - (-0.5)) < 1e-13);
    CHECK(std::abs(zeta(cplx(3.0)) - 1.2020569031595942854) < 1e-14);
    cplx z = zeta(cplx(2.0, 3.0));
    CHECK(std::abs(z - cplx(oracle::zeta_2p3i_re, oracle::zeta_2p3i_im)) <
          1e-12);
    CHECK_THROWS_AS(zeta(cplx(1.0)), std::domain_error);
}

TEST_CASE("zeta_prime via contour matches functional-equation oracle") {
    CHECK(std::abs(zeta_prime(cplx(-1.0)).real() - oracle::zetap_m1) < 1e-12);
    CHECK(std::abs(zeta_prime(cplx(2.0)).real() - oracle::zetap_2) < 1e-12);
}

TEST_CASE("zeta_star and functional equation") {
    CHECK(std::abs(zeta_star(cplx(2.0)) - M_PI / 6.0) < 1e-14);
    CHECK(std::abs(zeta_star(cplx(3.0)) - zeta_star(cplx(-2.0))) < 1e-12);
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> dr(-10.0, 10.0);
    int done = 0;
    while (done < 50) {
        cplx s(dr(rng), dr(rng) * 0.5);
        if (std::abs(s) > 10.0) continue;
        if (std::abs(s) < 0.2 || std::abs(s - 1.0) < 0.2) continue;
        cplx a = zeta_star(s), b = zeta_star(1.0 - s);
        CHECK(std::abs(a - b) <= 1e-10 * std::max(1.0, std::abs(a)));
        ++done;
    }
    CHECK_THROWS_AS(zeta_star(cplx(0.0)), std::domain_error);
}

TEST_CASE("zeta_star_prime") {
    double h = 1e-6;
    double fd = (zeta_star(cplx(2.0 + h)).real() -
                 zeta_star(cplx(2.0 - h)).real()) /
                (2.0 * h);
    CHECK(std::abs(zeta_star_prime(cplx(2.0)).real() - fd) < 1e-8);
    CHECK(std::abs(zeta_star_prime(cplx(2.0)).real() - oracle::zetastarp_2) <
          1e-12);
    CHECK(std::abs(zeta_star_prime(cplx(-1.0)).real() -
                   oracle::zetastarp_m1) < 1e-12);
}

TEST_CASE("bessel_k closed forms and symmetry") {
    double x = 3.0;
    CHECK(std::abs(bessel_k(0.5, x) -
                   std::sqrt(M_PI / (2.0 * x)) * std::exp(-x)) <
          1e-13 * bessel_k(0.5, x));
    CHECK(std::abs(bessel_k(0.7, 2.0) - bessel_k(-0.7, 2.0)) < 1e-15);
    CHECK(std::abs(bessel_k(0.7, 2.0) - oracle::K_07_2) < 1e-13);
    CHECK(std::abs(bessel_k(1.5, 1.0) - oracle::K_3half_1) < 1e-12);
    CHECK_THROWS_AS(bessel_k(1.0, 0.0), std::domain_error);
}

TEST_CASE("bessel_k integral-representation quadrature oracle") {
    double nu = 1.5, x = 1.0;
    auto f = [&](double t) -> cplx {
        return std::exp(-x * std::cosh(t)) * std::cosh(nu * t);
    };
    double ref = quad_gk(f, 0.0, 12.0, 1e-14).real();
    CHECK(std::abs(bessel_k(nu, x) - ref) < 1e-12);
}

TEST_CASE("bessel_k recurrence and decay over the working domain") {
    // K_(nu+1)(x) = K_(nu-1)(x) + (2 nu / x) K_nu(x)
    for (auto [nu, x] : {std::pair{1.2, 0.5}, {4.0, 10.0}, {9.0, 150.0},
                         {0.3, 200.0}, {6.5, 40.0}}) {
        double lhs = bessel_k(nu + 1.0, x);
        double rhs = bessel_k(nu - 1.0, x) + 2.0 * nu / x * bessel_k(nu, x);
        CHECK(std::abs(lhs - rhs) < 1e-12 * std::abs(lhs));
    }
    double prev = bessel_k(2.0, 0.5);
    for (double x = 1.0; x <= 16.0; x *= 2.0) {
        double cur = bessel_k(2.0, x);
        CHECK(cur > 0.0);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("bessel_k complex order consistency") {
    cplx v = bessel_k(cplx(1.5, 0.0), 1.0);
    CHECK(std::abs(v.real() - oracle::K_3half_1) < 1e-12);
    CHECK(std::abs(v.imag()) < 1e-14);
    // symmetry nu <-> -nu for complex order
    cplx nu(0.8, 0.4);
    CHECK(std::abs(bessel_k(nu, 2.0) - bessel_k(-nu, 2.0)) < 1e-14);
}

TEST_CASE("constants A and Btilde") {
    CHECK(std::abs(constant_Btilde() - oracle::Btilde) < 1e-13);
    CHECK(std::abs(constant_A() - oracle::A) < 5e-13);
    CHECK(std::abs(constant_A_alt() - oracle::A_alt) < 5e-13);
    // reassembly determinism
    CHECK(std::abs(constant_A() - constant_A()) < 1e-13);
    // the two assemblies genuinely differ; reported downstream, not equal
    CHECK(std::abs(constant_A() - constant_A_alt()) > 0.1);
}

TEST_CASE("laurent_extract on model functions") {
    cplx s0(0.3, -0.2);
    auto pole = [s0](cplx s) { return 1.0 / (s - s0); };
    LaurentData L = laurent_extract(pole, s0, 0.5, 32);
    CHECK(std::abs(L.c_m2) < 1e-12);
    CHECK(std::abs(L.c_m1 - 1.0) < 1e-12);
    CHECK(std::abs(L.c_0) < 1e-12);
    CHECK(std::abs(L.c_1) < 1e-12);

    auto expf = [s0](cplx s) { return std::exp(s - s0); };
    L = laurent_extract(expf, s0, 0.5, 32);
    CHECK(std::abs(L.c_m2) < 1e-12);
    CHECK(std::abs(L.c_m1) < 1e-12);
    CHECK(std::abs(L.c_0 - 1.0) < 1e-12);
    CHECK(std::abs(L.c_1 - 1.0) < 1e-12);
}

TEST_CASE("laurent_extract of zeta(2 sigma + 1) at 0") {
    auto F = [](cplx sg) { return zeta(2.0 * sg + 1.0); };
    LaurentData L = laurent_extract(F, cplx(0.0), 0.25, 48);
    CHECK(std::abs(L.c_m1 - 0.5) < 1e-11);
    // CT is the standard gamma, not the sign printed in the source identity
    CHECK(std::abs(L.c_0 - gamma_em) < 1e-11);
}

TEST_CASE("laurent_extract radius independence") {
    auto F = [](cplx s) { return zeta_star(s) / (s - 2.0); };
    LaurentData a = laurent_extract(F, cplx(2.0), 0.2, 48);
    LaurentData b = laurent_extract(F, cplx(2.0), 0.4, 48);
    CHECK(std::abs(a.c_m1 - b.c_m1) < 1e-10);
    CHECK(std::abs(a.c_0 - b.c_0) < 1e-10);
    CHECK(std::abs(a.c_1 - b.c_1) < 1e-10);
    CHECK_THROWS_AS(laurent_extract(F, cplx(2.0), 0.2, 8),
                    std::invalid_argument);
}

TEST_CASE("quad_gk sanity") {
    auto f = [](double t) -> cplx { return std::exp(-t * t); };
    double v = quad_gk(f, 0.0, 10.0, 1e-14).real();
    CHECK(std::abs(v - 0.5 * std::sqrt(M_PI)) < 1e-13);
}
