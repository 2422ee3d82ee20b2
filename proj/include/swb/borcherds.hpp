#ifndef SWB_BORCHERDS_HPP
#define SWB_BORCHERDS_HPP

#include <string>
#include <utility>
#include <vector>

#include "swb/qspace.hpp"

namespace swb {

struct PeterssonValue {
    double log_abs;  // log|Delta(z)|
    double log_pet;  // log(|Delta(z)| y^(w/2)), w = 12
};

// log|Delta| = -2 pi y + 24 sum_{n>=1} log|1 - e^(2 pi i n z)|
PeterssonValue delta_log(HPoint z);

// q-series with rational exponents, one list per coset, exponents ascending
struct WeaklyHolomorphicInput {
    Rational weight{-1, 2};
    std::vector<std::pair<Rational, cplx>> mu0;
    std::vector<std::pair<Rational, cplx>> mu1;

    const std::vector<std::pair<Rational, cplx>>& comp(CosetId c) const {
        return c == CosetId::mu0 ? mu0 : mu1;
    }
    cplx coeff(CosetId c, const Rational& n) const;
    cplx c0_mu0() const { return coeff(CosetId::mu0, {0, 1}); }
    // value of the coset component at tau (converges for y large enough
    // past the principal part)
    cplx value(CosetId c, HPoint tau) const;
    // throws std::invalid_argument on malformed exponent structure:
    // mu0 exponents integral, mu1 exponents in (1/4)+Z or (-1/4)+Z,
    // finitely many negative, mu0 constant term present
    void validate() const;
};

WeaklyHolomorphicInput load_input_form(const std::string& path);
void save_input_form(const WeaklyHolomorphicInput& f,
                     const std::string& path);

// -Phi/4 - (c0(0)/2)(log y + Gamma'(1)/2 + log sqrt(2 pi))
double borcherds_relation_rhs(const WeaklyHolomorphicInput& f,
                              double phi_value, double y);

}  // namespace swb

#endif
