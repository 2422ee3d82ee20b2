#ifndef SWB_QSPACE_HPP
#define SWB_QSPACE_HPP

#include <cstdint>
#include <vector>

#include "swb/hdomain.hpp"

namespace swb {

struct Rational {
    int64_t num = 0;
    int64_t den = 1;  // > 0, gcd(num,den) = 1
    void normalize();
    double value() const { return double(num) / double(den); }
    bool operator==(const Rational&) const = default;
};

// lambda = (l1, l2, l3) in L' = Z + (1/2)Z + Z; l2 stored doubled
struct LatticeVector {
    int64_t l1;
    int64_t l2_twice;
    int64_t l3;
    bool operator==(const LatticeVector&) const = default;
};

enum class CosetId { mu0, mu1 };

CosetId coset(const LatticeVector& v);

// q(lambda) = l2^2 + l1 l3, exactly
Rational q_form(const LatticeVector& v);

// conjugation on M(lambda) = (l2 l1; l3 -l2): M(act(g,v)) = g M(v) g^-1
LatticeVector act(const Mat2& g, const LatticeVector& v);

struct MajorantSplit {
    Rational q_total;
    double q_pos;   // q(lambda_z) >= 0
    double q_neg;   // q(lambda_zperp) <= 0
    double kappa;   // 1 or 4 (see the two source normalizations)
};

// D(lambda,z) = l1 + 2 l2 x - l3 (x^2+y^2); q_neg = -kappa D^2/(4y^2)
MajorantSplit majorant_split(const LatticeVector& v, HPoint z, double kappa);

// the positive definite majorant (lambda,lambda)_z = 2 q_pos - 2 q_neg
double majorant_norm(const LatticeVector& v, HPoint z, double kappa);

// all lattice vectors in the coset with majorant norm <= bound,
// deterministic order (l1, then l2, then l3 ascending)
std::vector<LatticeVector> lattice_enum(CosetId c, HPoint z, double bound,
                                        double kappa,
                                        long max_count = 4'000'000);

}  // namespace swb

#endif
