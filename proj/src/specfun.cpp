#include "swb/specfun.hpp"

#include <cmath>
#include <vector>

namespace swb {

double erf_(double x) { return std::erf(x); }

// ---------------------------------------------------------------- quadrature

namespace {

// Gauss-Kronrod 7-15 nodes (positive half) and weights
const double xgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
const double wgk[8] = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278};
const double wg[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694};

struct GKPanel {
    cplx val;
    double err;
};

GKPanel gk15(const std::function<cplx(double)>& f, double a, double b,
             long* evals) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    cplx sk = wgk[7] * f(c);
    cplx sg = wg[3] * f(c);
    for (int i = 0; i < 7; ++i) {
        cplx f1 = f(c - h * xgk[i]);
        cplx f2 = f(c + h * xgk[i]);
        sk += wgk[i] * (f1 + f2);
        if (i % 2 == 1) sg += wg[i / 2] * (f1 + f2);
    }
    if (evals) *evals += 15;
    return {h * sk, std::abs(h * (sk - sg))};
}

void gk_adapt(const std::function<cplx(double)>& f, double a, double b,
              double tol, int depth, cplx& acc, double& errAcc, long* evals) {
    GKPanel p = gk15(f, a, b, evals);
    if (p.err <= tol || depth >= 48 || b - a < 1e-15 * (std::abs(a) + 1.0)) {
        acc += p.val;
        errAcc += p.err;
        return;
    }
    double m = 0.5 * (a + b);
    gk_adapt(f, a, m, 0.5 * tol, depth + 1, acc, errAcc, evals);
    gk_adapt(f, m, b, 0.5 * tol, depth + 1, acc, errAcc, evals);
}

}  // namespace

cplx quad_gk(const std::function<cplx(double)>& f, double a, double b,
             double tol, double* err_out, long* evals) {
    cplx acc = 0.0;
    double errAcc = 0.0;
    gk_adapt(f, a, b, tol, 0, acc, errAcc, evals);
    if (err_out) *err_out = errAcc;
    return acc;
}

// -------------------------------------------------------------- log Gamma

cplx log_gamma(cplx z) {
    static const double lg[9] = {
        0.99999999999980993,     676.5203681218851,   -1259.1392167224028,
        771.32342877765313,      -176.61502916214059, 12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6,
        1.5056327351493116e-7};
    if (z.real() < 0.5) {
        // reflection; adjust by the lattice of log branches only through exp()
        return std::log(M_PI) - std::log(std::sin(M_PI * z)) -
               log_gamma(1.0 - z);
    }
    z -= 1.0;
    cplx x = lg[0];
    for (int i = 1; i < 9; ++i) x += lg[i] / (z + cplx(i, 0));
    cplx t = z + 7.5;
    return 0.5 * std::log(2.0 * M_PI) + (z + 0.5) * std::log(t) - t +
           std::log(x);
}

cplx cgamma(cplx z) { return std::exp(log_gamma(z)); }

// ------------------------------------------------------- incomplete gamma

namespace {

// Lentz continued fraction, valid for x not too small
cplx gamma_upper_cf(cplx a, double x) {
    const double tiny = 1e-300;
    cplx b = x + 1.0 - a;
    cplx c = 1.0 / tiny;
    cplx d = 1.0 / b;
    cplx h = d;
    for (int i = 1; i <= 400; ++i) {
        cplx an = -double(i) * (double(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        cplx del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    return std::exp(-x + a * std::log(x)) * h;
}

// lower incomplete gamma series, Re a > 0
cplx gamma_lower_series(cplx a, double x) {
    cplx ap = a;
    cplx sum = 1.0 / a;
    cplx del = sum;
    for (int i = 0; i < 500; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < 1e-17 * std::abs(sum)) break;
    }
    return std::exp(-x + a * std::log(x)) * sum;
}

}  // namespace

double exp_e1(double x) {
    if (x <= 0.0) throw std::domain_error("exp_e1: x <= 0");
    if (x > 1.5) return gamma_upper_cf(cplx(0.0), x).real();
    // E1(x) = -gamma - log x + sum (-1)^(k+1) x^k / (k k!)
    double s = 0.0, term = 1.0;
    for (int k = 1; k <= 60; ++k) {
        term *= -x / k;
        s -= term / k;
        if (std::abs(term) < 1e-18) break;
    }
    return -gamma_em - std::log(x) + s;
}

cplx gamma_upper(cplx a, double x) {
    if (x <= 0.0) throw std::domain_error("gamma_upper: x <= 0");
    if (x > std::abs(a) + 1.5) return gamma_upper_cf(a, x);
    // nonpositive-integer order: recurse down from E1 to avoid Gamma poles
    double ar = a.real();
    double nearest = std::round(ar);
    if (std::abs(a - cplx(nearest, 0.0)) < 1e-13 && nearest <= 0.0) {
        int m = int(-nearest);
        double g = exp_e1(x);
        double p = 1.0 / x;  // x^(a) e^-x ladder, a = -1, -2, ...
        double ex = std::exp(-x);
        for (int k = 1; k <= m; ++k) {
            g = (g - p * ex) / double(-k);
            p /= x;
        }
        return g;
    }
    // lift order into (0.5, 1.5], evaluate there, descend by the recurrence
    int m = 0;
    while (ar + m <= 0.5) ++m;
    cplx b = a + double(m);
    cplx g = cgamma(b) - gamma_lower_series(b, x);
    for (int k = m; k >= 1; --k) {
        cplx ak = a + double(k - 1);
        g = (g - std::exp(ak * std::log(x) - x)) / ak;
    }
    return g;
}

double gamma_upper(double a, double x) {
    return gamma_upper(cplx(a, 0.0), x).real();
}

double gamma_upper_da(double a, double x) {
    if (x <= 0.0) throw std::domain_error("gamma_upper_da: x <= 0");
    // tail cut where t^(a-1) log(t) e^-t is below 1e-18 of unit scale
    double upper = std::max(x, 3.0) + 60.0 + 12.0 * std::max(0.0, a);
    auto f = [a](double t) -> cplx {
        return std::exp((a - 1.0) * std::log(t) - t) * std::log(t);
    };
    return quad_gk(f, x, upper, 1e-15).real();
}

// ------------------------------------------------------------------- zeta

namespace {

// Borwein alternating-series weights d_k for fixed n
const int kZetaN = 64;
const std::vector<double>& borwein_d() {
    static std::vector<double> d = [] {
        std::vector<double> v(kZetaN + 1);
        double t = 1.0 / kZetaN;  // term i=0 of the binomial sum
        double acc = t;
        v[0] = kZetaN * acc;
        for (int i = 1; i <= kZetaN; ++i) {
            t *= 4.0 * (kZetaN + i - 1) * (kZetaN - i + 1) /
                 (2.0 * i * (2.0 * i - 1));
            acc += t;
            v[i] = kZetaN * acc;
        }
        return v;
    }();
    return d;
}

}  // namespace

cplx zeta(cplx s) {
    if (std::abs(s - 1.0) < 1e-8) throw std::domain_error("zeta: pole at s=1");
    if (s.real() < -0.3) {
        // reflect: the alternating-series acceleration loses accuracy as the
        // powers (k+1)^(-s) grow for Re s < 0
        return std::exp(s * std::log(2.0) + (s - 1.0) * std::log(M_PI)) *
               std::sin(0.5 * M_PI * s) * cgamma(1.0 - s) * zeta(1.0 - s);
    }
    const std::vector<double>& d = borwein_d();
    cplx eta = 0.0;
    double sign = 1.0;
    for (int k = 0; k < kZetaN; ++k) {
        eta += sign * (d[kZetaN] - d[k]) * std::exp(-s * std::log(k + 1.0));
        sign = -sign;
    }
    eta /= d[kZetaN];
    return eta / (1.0 - std::exp((1.0 - s) * std::log(2.0)));
}

cplx zeta_prime(cplx s) {
    if (std::abs(s - 1.0) < 0.3)
        throw std::domain_error("zeta_prime: too close to s=1");
    LaurentData L =
        laurent_extract([](cplx w) { return zeta(w); }, s, 0.25, 32);
    return L.c_1;
}

cplx zeta_star(cplx s) {
    if (std::abs(s) < 1e-8 || std::abs(s - 1.0) < 1e-8)
        throw std::domain_error("zeta_star: pole at s in {0,1}");
    if (s.real() < -1.0) {
        // trivial zeros of zeta cancel Gamma poles; step around them
        double ne = -2.0 * std::round(-s.real() / 2.0);
        if (std::abs(s - cplx(ne, 0.0)) < 0.05) return zeta_star(1.0 - s);
    }
    return std::exp(-0.5 * s * std::log(M_PI) + log_gamma(0.5 * s)) * zeta(s);
}

cplx zeta_star_prime(cplx s) {
    LaurentData L =
        laurent_extract([](cplx w) { return zeta_star(w); }, s, 0.25, 32);
    return L.c_1;
}

// --------------------------------------------------------------- Bessel K

cplx bessel_k(cplx nu, double x) {
    if (x <= 0.0) throw std::domain_error("bessel_k: x <= 0");
    // K_nu(x) = int_0^inf e^(-x cosh t) cosh(nu t) dt; the integrand is even
    // and analytic, so the trapezoid rule converges geometrically in 1/h
    double anu = std::abs(nu);
    auto sum_h = [&](double h) {
        cplx s = 0.5 * std::exp(cplx(-x, 0.0));
        double maxexp = -x;
        for (int k = 1;; ++k) {
            double t = k * h;
            double decay = -x * std::cosh(t) + anu * t;
            if (decay > maxexp) maxexp = decay;
            if (decay < maxexp - 46.0 && k >= 4) break;
            s += std::exp(-x * std::cosh(t)) * std::cosh(nu * t);
            if (k > 2000000) break;
        }
        return h * s;
    };
    double h = 0.5;
    cplx prev = sum_h(h);
    for (int it = 0; it < 8; ++it) {
        h *= 0.5;
        cplx cur = sum_h(h);
        if (std::abs(cur - prev) <= 1e-14 * (std::abs(cur) + 1e-300) &&
            it >= 2)
            return cur;
        prev = cur;
    }
    return prev;
}

double bessel_k(double nu, double x) {
    return bessel_k(cplx(nu, 0.0), x).real();
}

// -------------------------------------------------------------- constants

double constant_Btilde() {
    return std::sqrt(M_PI / 2.0) *
           (gamma_upper_da(-0.5, M_PI / 2.0) -
            gamma_upper(-0.5, M_PI / 2.0) * std::log(M_PI / 2.0));
}

double constant_A() {
    double e = erf_(std::sqrt(M_PI / 2.0));
    return 2.0 * e *
               (-4.0 * (gamma_em + 1.0) + std::log(2.0) +
                M_PI * std::log(M_PI / 2.0)) +
           2.0 * M_PI * std::log(2.0 / M_PI) +
           std::sqrt(M_PI) * gamma_upper_da(-0.5, M_PI / 2.0);
}

double constant_A_alt() {
    double e = erf_(std::sqrt(M_PI / 2.0));
    return std::sqrt(2.0) * constant_Btilde() +
           (8.0 * (-gamma_em - 1.0) + std::log(4.0)) * e;
}

// ------------------------------------------------------ Laurent extraction

namespace {

void contour_coeffs(const std::function<cplx(cplx)>& F, cplx s0, double r,
                    int n, cplx out[4]) {
    for (int k = 0; k < 4; ++k) out[k] = 0.0;
    for (int j = 0; j < n; ++j) {
        double th = 2.0 * M_PI * j / n;
        cplx w = std::polar(r, th);
        cplx Fv = F(s0 + w);
        // out[k] holds the coefficient of (s-s0)^(k-2)
        out[0] += Fv * w * w;
        out[1] += Fv * w;
        out[2] += Fv;
        out[3] += Fv / w;
    }
    for (int k = 0; k < 4; ++k) out[k] /= double(n);
}

}  // namespace

LaurentData laurent_extract(const std::function<cplx(cplx)>& F, cplx s0,
                            double radius, int n, bool check,
                            double conv_tol) {
    if (n < 16) throw std::invalid_argument("laurent_extract: n < 16");
    cplx c1[4];
    contour_coeffs(F, s0, radius, n, c1);
    if (check) {
        cplx c2[4];
        contour_coeffs(F, s0, radius, 2 * n, c2);
        for (int k = 0; k < 4; ++k) {
            if (std::abs(c1[k] - c2[k]) > conv_tol)
                throw std::runtime_error(
                    "laurent_extract: contour quadrature did not converge");
            c1[k] = c2[k];
        }
    }
    return {s0, c1[0], c1[1], c1[2], c1[3], radius};
}

}  // namespace swb
