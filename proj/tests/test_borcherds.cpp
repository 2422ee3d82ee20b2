#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "swb/borcherds.hpp"
#include "swb/specfun.hpp"

using namespace swb;

#ifndef SWB_DATA_DIR
#define SWB_DATA_DIR "data"
#endif

TEST_CASE("delta_log large-y asymptotic") {
    double y = 20.0;
    PeterssonValue p = delta_log({0.0, y});
    CHECK(std::abs(p.log_pet - (-2.0 * M_PI * y + 6.0 * std::log(y))) <
          1e-12);
    CHECK(std::abs(p.log_pet - p.log_abs - 6.0 * std::log(y)) < 1e-14);
}

TEST_CASE("log_pet invariance under reduction") {
    HPoint z{0.37, 0.41};
    CHECK(std::abs(delta_log(z).log_pet -
                   delta_log(reduce(z).first).log_pet) < 1e-9);
    std::mt19937 rng(12);
    std::uniform_real_distribution<double> dx(-2.0, 2.0), dy(0.2, 3.0);
    for (int i = 0; i < 100; ++i) {
        HPoint w{dx(rng), dy(rng)};
        CHECK(std::abs(delta_log(w).log_pet -
                       delta_log(reduce(w).first).log_pet) < 1e-9);
    }
}

TEST_CASE("q-expansion cross-check at z = 2i") {
    // q prod (1-q^n)^24 expanded to degree 50 by polynomial multiplication
    const int N = 50;
    std::vector<double> poly(N + 1, 0.0);
    poly[0] = 1.0;
    for (int n = 1; n <= N; ++n)
        for (int k = 0; k < 24; ++k)
            for (int d = N; d >= n; --d) poly[d] -= poly[d - n];
    double q = std::exp(-4.0 * M_PI);
    double series = 0.0, qp = q;  // q^(d+1)
    for (int d = 0; d <= N; ++d, qp *= q) series += poly[d] * qp;
    CHECK(std::abs(std::exp(delta_log({0.0, 2.0}).log_abs) -
                   std::abs(series)) < 1e-15 * std::abs(series) + 1e-30);
}

TEST_CASE("x-mean of log|1 - e^(2 pi i z)| vanishes") {
    double y = 0.9;
    cplx mean = quad_gk(
        [y](double x) {
            cplx q = std::exp(cplx(-2.0 * M_PI * y, 2.0 * M_PI * x));
            return cplx(std::log(std::abs(1.0 - q)), 0.0);
        },
        0.0, 1.0, 1e-13);
    CHECK(std::abs(mean) < 1e-10);
}

TEST_CASE("delta_log is smooth on a sampled grid") {
    double h = 1e-3;
    for (double x : {-0.2, 0.1})
        for (double y : {0.8, 1.5}) {
            double d2x = delta_log({x + h, y}).log_pet -
                         2.0 * delta_log({x, y}).log_pet +
                         delta_log({x - h, y}).log_pet;
            CHECK(std::abs(d2x) / (h * h) < 1e4);
        }
}

TEST_CASE("relation right-hand side") {
    WeaklyHolomorphicInput zero;
    zero.mu0 = {{{0, 1}, cplx(0.0, 0.0)}};
    CHECK(borcherds_relation_rhs(zero, 3.7, 1.0) ==
          borcherds_relation_rhs(zero, 3.7, 9.0));
    CHECK(std::abs(borcherds_relation_rhs(zero, 3.7, 2.0) + 3.7 / 4.0) <
          1e-15);

    WeaklyHolomorphicInput f;
    f.mu0 = {{{0, 1}, cplx(24.0, 0.0)}};
    // linearity in the lift value
    double base = borcherds_relation_rhs(f, 0.0, 1.3);
    CHECK(std::abs(borcherds_relation_rhs(f, 2.0, 1.3) +
                   borcherds_relation_rhs(f, -2.0, 1.3) - 2.0 * base) <
          1e-12);
    // calibration of the y-dependence: with c0(0) = 24 the right-hand side
    // moves by -12 log(y1/y2); the Petersson weight-12 normalization moves
    // log|Delta| - log_pet by -6 log(y1/y2), i.e. exactly half (the
    // relation's y-power is the square of the weight-(w/2) norm factor)
    double y1 = 1.0, y2 = 4.0;
    double drhs = borcherds_relation_rhs(f, 0.0, y1) -
                  borcherds_relation_rhs(f, 0.0, y2);
    CHECK(std::abs(drhs + 12.0 * std::log(y1 / y2)) < 1e-12);
    PeterssonValue p1 = delta_log({0.0, y1}), p2 = delta_log({0.0, y2});
    double dpet = (p1.log_abs - p1.log_pet) - (p2.log_abs - p2.log_pet);
    CHECK(std::abs(drhs - 2.0 * dpet) < 1e-12);
}

TEST_CASE("shipped delta input matches the theta representation numbers") {
    WeaklyHolomorphicInput f =
        load_input_form(std::string(SWB_DATA_DIR) + "/delta_input.json");
    CHECK(f.weight == Rational{-1, 2});
    CHECK(f.c0_mu0() == cplx(24.0, 0.0));
    // mu0 coefficient of n^2 is 24 * #{x in Z : x^2 = n^2}
    for (int n = 1; n <= 6; ++n)
        CHECK(f.coeff(CosetId::mu0, {n * n, 1}) == cplx(48.0, 0.0));
    CHECK(f.coeff(CosetId::mu0, {2, 1}) == cplx(0.0, 0.0));
    for (int n = 0; n <= 5; ++n) {
        int64_t num = (2 * n + 1) * (2 * n + 1);
        CHECK(f.coeff(CosetId::mu1, {num, 4}) == cplx(48.0, 0.0));
    }
    // value at large v approaches the constant term
    CHECK(std::abs(f.value(CosetId::mu0, {0.0, 5.0}) - 24.0) < 1e-10);
}

TEST_CASE("input form io roundtrip and validation") {
    WeaklyHolomorphicInput f =
        load_input_form(std::string(SWB_DATA_DIR) + "/delta_input.json");
    save_input_form(f, "/tmp/swb_roundtrip.json");
    WeaklyHolomorphicInput g = load_input_form("/tmp/swb_roundtrip.json");
    CHECK(g.mu0 == f.mu0);
    CHECK(g.mu1 == f.mu1);

    WeaklyHolomorphicInput bad;
    bad.mu0 = {{{0, 1}, cplx(1.0, 0.0)}};
    bad.mu1 = {{{1, 2}, cplx(1.0, 0.0)}};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    WeaklyHolomorphicInput noc0;
    noc0.mu0 = {{{1, 1}, cplx(1.0, 0.0)}};
    CHECK_THROWS_AS(noc0.validate(), std::invalid_argument);
    // dual-sign mu1 convention also accepted, but not mixed
    WeaklyHolomorphicInput dual;
    dual.mu0 = {{{0, 1}, cplx(1.0, 0.0)}};
    dual.mu1 = {{{-1, 4}, cplx(1.0, 0.0)}};
    CHECK_NOTHROW(dual.validate());
    dual.mu1.push_back({{1, 4}, cplx(1.0, 0.0)});
    CHECK_THROWS_AS(dual.validate(), std::invalid_argument);
}
