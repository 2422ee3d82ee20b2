#include "swb/qspace.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace swb {

void Rational::normalize() {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    int64_t g = std::gcd(std::llabs(num), den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

CosetId coset(const LatticeVector& v) {
    return (v.l2_twice % 2 == 0) ? CosetId::mu0 : CosetId::mu1;
}

Rational q_form(const LatticeVector& v) {
    // q = l2^2 + l1 l3 = (l2_twice^2 + 4 l1 l3)/4
    Rational r{v.l2_twice * v.l2_twice + 4 * v.l1 * v.l3, 4};
    r.normalize();
    return r;
}

LatticeVector act(const Mat2& g, const LatticeVector& v) {
    if (g[0] * g[3] - g[1] * g[2] != 1)
        throw std::domain_error("act: det g != 1");
    // work on 2 M(lambda) = (t 2l1; 2l3 -t), t = l2_twice; g^-1 = (d -b; -c a)
    int64_t a = g[0], b = g[1], c = g[2], d = g[3];
    int64_t t = v.l2_twice, p = 2 * v.l1, q = 2 * v.l3;
    // N = g (t p; q -t) g^-1
    int64_t n11 = (a * t + b * q) * d + (a * p - b * t) * (-c);
    int64_t n12 = (a * t + b * q) * (-b) + (a * p - b * t) * a;
    int64_t n21 = (c * t + d * q) * d + (c * p - d * t) * (-c);
    if (n12 % 2 != 0 || n21 % 2 != 0)
        throw std::logic_error("act: conjugation left the lattice");
    return {n12 / 2, n11, n21 / 2};
}

MajorantSplit majorant_split(const LatticeVector& v, HPoint z, double kappa) {
    double x = z.x, y = z.y;
    double D = double(v.l1) + double(v.l2_twice) * x -
               double(v.l3) * (x * x + y * y);
    double qn = -kappa * D * D / (4.0 * y * y);
    Rational q = q_form(v);
    return {q, q.value() - qn, qn, kappa};
}

double majorant_norm(const LatticeVector& v, HPoint z, double kappa) {
    MajorantSplit m = majorant_split(v, z, kappa);
    return 2.0 * (m.q_pos - m.q_neg);
}

std::vector<LatticeVector> lattice_enum(CosetId c, HPoint z, double bound,
                                        double kappa, long max_count) {
    if (!(bound > 0.0)) throw std::domain_error("lattice_enum: bound <= 0");
    double x = z.x, y = z.y, w = x * x + y * y;
    double k = kappa / (y * y);
    // Gram of the majorant in coordinates (l1, l2, l3) with real l2
    double G11 = k, G22 = 2.0 + 4.0 * x * x * k, G33 = k * w * w;
    double G12 = 2.0 * x * k, G13 = 1.0 - k * w, G23 = -2.0 * x * w * k;
    double det = G11 * (G22 * G33 - G23 * G23) -
                 G12 * (G12 * G33 - G23 * G13) +
                 G13 * (G12 * G23 - G22 * G13);
    if (det <= 0.0) throw std::runtime_error("lattice_enum: degenerate form");
    // diagonal of the inverse gives the bounding box
    double i11 = (G22 * G33 - G23 * G23) / det;
    double i22 = (G11 * G33 - G13 * G13) / det;
    double i33 = (G11 * G22 - G12 * G12) / det;
    int64_t b1 = int64_t(std::floor(std::sqrt(bound * i11) + 1e-9));
    int64_t b2 = int64_t(std::floor(2.0 * std::sqrt(bound * i22) + 1e-9));
    int64_t b3 = int64_t(std::floor(std::sqrt(bound * i33) + 1e-9));
    std::vector<LatticeVector> out;
    int64_t parity = (c == CosetId::mu0) ? 0 : 1;
    for (int64_t l1 = -b1; l1 <= b1; ++l1)
        for (int64_t t = -b2; t <= b2; ++t) {
            if (((t % 2) + 2) % 2 != parity) continue;
            for (int64_t l3 = -b3; l3 <= b3; ++l3) {
                double u1 = double(l1), u2 = 0.5 * double(t), u3 = double(l3);
                double Q = G11 * u1 * u1 + G22 * u2 * u2 + G33 * u3 * u3 +
                           2.0 * (G12 * u1 * u2 + G13 * u1 * u3 +
                                  G23 * u2 * u3);
                if (Q <= bound + 1e-9) {
                    out.push_back({l1, t, l3});
                    if (long(out.size()) > max_count)
                        throw std::runtime_error(
                            "lattice_enum: count budget exceeded");
                }
            }
        }
    return out;
}

}  // namespace swb
