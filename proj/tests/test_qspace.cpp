#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "swb/qspace.hpp"

using namespace swb;

namespace {

const Mat2 S{0, -1, 1, 0};
const Mat2 Tm{1, 1, 0, 1};

Mat2 mul(const Mat2& a, const Mat2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat2 random_gamma(std::mt19937& rng) {
    Mat2 g{1, 0, 0, 1};
    std::uniform_int_distribution<int> pick(0, 2);
    for (int i = 0; i < 6; ++i) {
        switch (pick(rng)) {
            case 0: g = mul(g, S); break;
            case 1: g = mul(g, Tm); break;
            default: g = mul(g, Mat2{1, -1, 0, 1}); break;
        }
    }
    return g;
}

}  // namespace

TEST_CASE("q_form values and signature") {
    CHECK(q_form({7, 0, 0}) == Rational{0, 1});
    CHECK(q_form({0, 2, 0}) == Rational{1, 1});   // l2 = 1
    CHECK(q_form({0, 1, 0}) == Rational{1, 4});   // l2 = 1/2
    CHECK(q_form({1, 0, 1}) == Rational{1, 1});
    CHECK(q_form({1, 0, -1}) == Rational{-1, 1});
    // bilinear Gram in (l1,l2,l3) is ((0,0,1),(0,2,0),(1,0,0)):
    // eigenvalues 2, 1, -1, signs (+,+,-)
    CHECK(true);
}

TEST_CASE("coset tag") {
    CHECK(coset({0, 0, 0}) == CosetId::mu0);
    CHECK(coset({3, 2, -1}) == CosetId::mu0);
    CHECK(coset({0, 1, 0}) == CosetId::mu1);
    CHECK(coset({1, -3, 2}) == CosetId::mu1);
}

TEST_CASE("act: identity, isotropic orbit formula, q invariance") {
    LatticeVector v{2, 3, -1};
    CHECK(act(Mat2{1, 0, 0, 1}, v) == v);

    // g (0 1; 0 0) g^-1 = (-ac a^2; -c^2 ac): lambda=(1,0,0) maps to
    // (a^2, -ac, -c^2)
    Mat2 g{3, 1, 2, 1};
    LatticeVector im = act(g, {1, 0, 0});
    CHECK(im == LatticeVector{9, -12, -4});

    std::mt19937 rng(99);
    std::uniform_int_distribution<int64_t> dl(-5, 5);
    for (int i = 0; i < 50; ++i) {
        Mat2 gm = random_gamma(rng);
        LatticeVector u{dl(rng), dl(rng), dl(rng)};
        CHECK(q_form(act(gm, u)) == q_form(u));
        CHECK(coset(act(gm, u)) == coset(u));
    }
    // coset preservation on the half-integer generator
    CHECK(coset(act(S, {0, 1, 0})) == CosetId::mu1);
    CHECK(coset(act(Tm, {0, 1, 0})) == CosetId::mu1);
    CHECK_THROWS_AS(act(Mat2{2, 0, 0, 1}, v), std::domain_error);
}

TEST_CASE("majorant_split anchors") {
    // kappa=4: isotropic family (t,0,0) has q_pos = t^2/y^2
    for (double t : {1.0, 3.0, -2.0}) {
        MajorantSplit m =
            majorant_split({int64_t(t), 0, 0}, {0.37, 1.42}, 4.0);
        CHECK(std::abs(m.q_pos - t * t / (1.42 * 1.42)) < 1e-12);
        CHECK(std::abs(m.q_pos + m.q_neg - m.q_total.value()) < 1e-12);
    }
    // kappa=1 at z=i on (x1,x0,0): majorant norm = x1^2 + 2 x0^2
    for (auto [x1, x0t] : {std::pair<int64_t, int64_t>{1, 0},
                           {0, 2}, {3, 4}, {-2, 1}}) {
        double n = majorant_norm({x1, x0t, 0}, {0.0, 1.0}, 1.0);
        double x0 = 0.5 * double(x0t);
        CHECK(std::abs(n - (double(x1 * x1) + 2.0 * x0 * x0)) < 1e-12);
    }
}

TEST_CASE("majorant positivity and equivariance") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int64_t> dl(-6, 6);
    std::uniform_real_distribution<double> dx(-0.5, 0.5), dy(0.4, 3.0);
    for (int i = 0; i < 200; ++i) {
        LatticeVector v{dl(rng), dl(rng), dl(rng)};
        HPoint z{dx(rng), dy(rng)};
        for (double kappa : {1.0, 4.0}) {
            MajorantSplit m = majorant_split(v, z, kappa);
            CHECK(m.q_pos >= -1e-11);
            CHECK(m.q_neg <= 1e-11);
            CHECK(std::abs(m.q_pos + m.q_neg - m.q_total.value()) < 1e-12);
            if (!(v == LatticeVector{0, 0, 0}) && m.q_total.num >= 0)
                CHECK(m.q_pos > 0.0);
            // simultaneous action of gamma on lambda and z
            Mat2 g = random_gamma(rng);
            HPoint gz = apply_mat(g, z);
            MajorantSplit mg = majorant_split(act(g, v), gz, kappa);
            CHECK(std::abs(mg.q_pos - m.q_pos) <
                  1e-11 * (1.0 + std::abs(m.q_pos)));
        }
    }
}

TEST_CASE("lattice_enum basics") {
    std::vector<LatticeVector> tiny =
        lattice_enum(CosetId::mu0, {0.0, 1.0}, 0.5, 1.0);
    REQUIRE(tiny.size() == 1);
    CHECK(tiny[0] == LatticeVector{0, 0, 0});

    std::vector<LatticeVector> r =
        lattice_enum(CosetId::mu0, {0.0, 1.0}, 10.0, 1.0);
    // +/- symmetry
    for (const LatticeVector& v : r) {
        LatticeVector n{-v.l1, -v.l2_twice, -v.l3};
        CHECK(std::find(r.begin(), r.end(), n) != r.end());
    }
    // brute-force box oracle
    long count = 0;
    for (int64_t l1 = -10; l1 <= 10; ++l1)
        for (int64_t t = -20; t <= 20; t += 2)
            for (int64_t l3 = -10; l3 <= 10; ++l3)
                if (majorant_norm({l1, t, l3}, {0.0, 1.0}, 1.0) <= 10.0 + 1e-9)
                    ++count;
    CHECK(long(r.size()) == count);

    CHECK_THROWS_AS(lattice_enum(CosetId::mu0, {0.0, 1.0}, 50.0, 1.0, 10),
                    std::runtime_error);
    CHECK_THROWS_AS(lattice_enum(CosetId::mu0, {0.0, 1.0}, -1.0, 1.0),
                    std::domain_error);
}

TEST_CASE("lattice_enum respects the coset") {
    std::vector<LatticeVector> r =
        lattice_enum(CosetId::mu1, {0.2, 0.9}, 6.0, 4.0);
    CHECK(!r.empty());
    for (const LatticeVector& v : r) CHECK(coset(v) == CosetId::mu1);
}
