#ifndef SWB_EISENSTEIN_HPP
#define SWB_EISENSTEIN_HPP

#include "swb/hdomain.hpp"
#include "swb/specfun.hpp"

namespace swb {

struct EisensteinConfig {
    int n_fourier = 64;          // Fourier modes kept
    double direct_sum_bound = 400.0;  // |cz+d| radius for the direct orbit sum
};

// phi(s) = zetastar(2s-1)/zetastar(2s)
cplx phi_scattering(cplx s);

enum class EisMode { fourier, direct };

// E(z,s) = sum over Gamma_infty \ SL2(Z) of Im(gamma z)^s.
// fourier mode: K-Bessel expansion, valid off the poles.  direct mode:
// coprime orbit sum over |cz+d| <= direct_sum_bound plus the mean-density
// tail; requires Re s > 1.
cplx eisenstein_zagier(HPoint z, cplx s, EisMode mode,
                       const EisensteinConfig& cfg = {});

// int_{F^That} E(z,s) dmu = That^(s-1)/(s-1) - phi(s) That^(-s)/s
cplx truncated_rs_closed(cplx s, double That);

enum class CtKind {
    ct_s0,      // constant term of the closed form at s = 0
    ct_s1,      // constant term at s = 1
    ct_s0_log,  // constant term of the s-derivative at s = 0
};

// Laurent data of truncated_rs_closed, never the printed final constants
double ct_powerint(CtKind kind, double That);

// 3(-12 zeta'(2) + 2 gamma pi^2 + pi^2(-gamma - log 8))/pi^3
double weight32_A0_constant();

// A0(v) = v + sqrt(v) * weight32_A0_constant()
double weight32_A0(double v);

}  // namespace swb

#endif
