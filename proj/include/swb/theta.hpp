#ifndef SWB_THETA_HPP
#define SWB_THETA_HPP

#include "swb/qspace.hpp"

namespace swb {

struct ThetaComponents {
    cplx c00;  // lambda = 0 term of vartheta (= v on mu0, 0 on mu1)
    cplx c0;   // q(lambda) = 0, lambda != 0
    cplx c1;   // q(lambda) > 0
    cplx c2;   // q(lambda) < 0
};

// theta^Jac_mu(tau) = sum over n in Z (mu0) or 1/2+Z (mu1) of e^(2 pi i n^2 tau)
cplx jacobi_theta(HPoint tau, CosetId c);

// sum over the coset of e^(2 pi i q(lambda) u) e^(-2 pi v (q_pos - q_neg))
cplx siegel_theta(HPoint tau, HPoint z, CosetId c, double kappa);

// vartheta = v * siegel_theta
cplx vartheta(HPoint tau, HPoint z, CosetId c, double kappa);

ThetaComponents theta_components(HPoint tau, HPoint z, CosetId c,
                                 double kappa);

enum class DivMode { closed, integral };

// slowly-decaying part: closed mode y sqrt(v) theta^Jac; integral mode the
// defining Gaussian integral sum, evaluated by quadrature
cplx div_part(HPoint tau, HPoint z, CosetId c, DivMode mode);

// vartheta - div_part (the paper-consistent normalization is kappa = 1;
// under kappa = 4 the subtracted profile misses a factor 1/sqrt(kappa),
// which the verify layer reports)
cplx conv_part(HPoint tau, HPoint z, CosetId c, double kappa);

// average of a 1-periodic function over u in [-1/2, 1/2], panel-doubling
// until 1e-11 stable; throws if the endpoints disagree beyond 1e-9
cplx constant_u_term(const std::function<cplx(double)>& F);

}  // namespace swb

#endif
