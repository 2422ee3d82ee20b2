#ifndef SWB_SPECFUN_HPP
#define SWB_SPECFUN_HPP

#include <complex>
#include <functional>
#include <stdexcept>

namespace swb {

using cplx = std::complex<double>;

// Euler-Mascheroni constant, gamma = -Gamma'(1)
inline constexpr double gamma_em = 0.57721566490153286;

struct LaurentData {
    cplx s0;
    cplx c_m2;   // coefficient of (s-s0)^-2
    cplx c_m1;   // residue
    cplx c_0;    // constant term (CT)
    cplx c_1;    // first-order term (FT)
    double radius;
};

double erf_(double x);

// upper incomplete gamma Gamma(a,x) = int_x^inf t^(a-1) e^-t dt, x > 0
double gamma_upper(double a, double x);
cplx   gamma_upper(cplx a, double x);

// exponential integral E1(x) = Gamma(0,x)
double exp_e1(double x);

// d/da Gamma(a,x), by adaptive quadrature of t^(a-1) log(t) e^-t
double gamma_upper_da(double a, double x);

// Riemann zeta by alternating-series (eta) acceleration with binomial weights
cplx zeta(cplx s);
cplx zeta_prime(cplx s);

// completed zeta pi^(-s/2) Gamma(s/2) zeta(s)
cplx zeta_star(cplx s);
cplx zeta_star_prime(cplx s);

// log Gamma and Gamma for complex argument (principal branch, Lanczos)
cplx log_gamma(cplx s);
cplx cgamma(cplx s);

// modified Bessel K_nu(x), x > 0; complex order supported
double bessel_k(double nu, double x);
cplx   bessel_k(cplx nu, double x);

// the constant of the limit-case closed form:
// 2 erf(sqrt(pi/2)) (-4(gamma+1) + log 2 + pi log(pi/2)) + 2 pi log(2/pi)
//   + sqrt(pi) dGamma/da(-1/2, pi/2)
double constant_A();
// sqrt(pi/2) (dGamma/da(-1/2,pi/2) - Gamma(-1/2,pi/2) log(pi/2))
double constant_Btilde();
// alternative assembly sqrt(2) Btilde + (8(-gamma-1) + log 4) erf(sqrt(pi/2)),
// reported against constant_A, never asserted equal
double constant_A_alt();

// Laurent coefficients c_-2..c_1 of F at s0 by trapezoidal contour quadrature
// on a circle of the given radius with n samples.  With check=true the count
// is doubled and non-convergence beyond conv_tol throws.
LaurentData laurent_extract(const std::function<cplx(cplx)>& F, cplx s0,
                            double radius, int n, bool check = true,
                            double conv_tol = 1e-9);

// adaptive Gauss-Kronrod 7-15 on [a,b]
cplx quad_gk(const std::function<cplx(double)>& f, double a, double b,
             double tol, double* err_out = nullptr, long* evals = nullptr);

struct KahanSum {
    double s = 0.0, c = 0.0;
    void add(double x) {
        double y = x - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    double get() const { return s; }
};

}  // namespace swb

#endif
