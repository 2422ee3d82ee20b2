#include "swb/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace swb {

namespace {

const double kVolX = M_PI / 3.0;  // hyperbolic area of the modular curve

std::string fmt(double x) {
    char b[48];
    std::snprintf(b, sizeof b, "%.12g", x);
    return b;
}

double erf_half_pi() { return erf_(std::sqrt(M_PI / 2.0)); }

// d/ds of the truncated integral closed form
cplx truncated_rs_closed_ds(cplx s, double That) {
    double L = std::log(That);
    cplx sm1 = s - 1.0;
    cplx t1 = std::exp(sm1 * L) * (L / sm1 - 1.0 / (sm1 * sm1));
    cplx phi = phi_scattering(s);
    cplx phip = 2.0 * (zeta_star_prime(2.0 * s - 1.0) * zeta_star(2.0 * s) -
                       zeta_star(2.0 * s - 1.0) * zeta_star_prime(2.0 * s)) /
                (zeta_star(2.0 * s) * zeta_star(2.0 * s));
    cplx e = std::exp(-s * L);
    cplx t2 = -phip * e / s + phi * e * L / s + phi * e / (s * s);
    return t1 + t2;
}

}  // namespace

// ---------------------------------------------------------------- report

void VerificationReport::add_config(const std::string& k, double v) {
    config.emplace_back(k, fmt(v));
}

void VerificationReport::add_config(const std::string& k,
                                    const std::string& v) {
    config.emplace_back(k, v);
}

void VerificationReport::finish(double tol, bool absolute) {
    if (lhs_path == rhs_path)
        throw std::logic_error(identity_id +
                               ": lhs and rhs share an evaluation route");
    abs_err = std::abs(lhs - rhs);
    double scale = std::max(std::abs(lhs), std::abs(rhs));
    rel_err = scale > 0.0 ? abs_err / scale : 0.0;
    tolerance = tol;
    absolute_mode = absolute;
    pass = absolute ? abs_err <= tol : rel_err <= tol;
}

// ------------------------------------------------------- printed constants

double printed_lemma221(double That) {
    double L = std::log(That);
    double zs2 = zeta_star(cplx(2.0, 0.0)).real();
    double zsp2 = zeta_star_prime(cplx(2.0, 0.0)).real();
    return (3.0 / M_PI) *
               (gamma_em + std::log(M_PI / 4.0) + zsp2 / zs2) / That -
           (1.0 / (2.0 * zs2)) * (L + 1.0) / That + L;
}

double printed_derivadaeis(double That) {
    double L = std::log(That);
    double zsp_m1 = zeta_star_prime(cplx(-1.0, 0.0)).real();
    double zp_m1 = zeta_prime(cplx(-1.0, 0.0)).real();
    double l2pi = std::log(2.0 * M_PI);
    return -(L + 1.0) / That + gamma_em + 1.5 * zsp_m1 +
           zp_m1 * (std::log(M_PI) + 2.0 * gamma_em -
                    2.0 * l2pi * (3.0 * l2pi + std::log(2.0)) - 2.0 * L);
}

double printed_cor213(double That) {
    return constant_A() * (M_PI / 3.0 - 1.0 / That) -
           8.0 * erf_half_pi() * printed_derivadaeis(That) +
           printed_lemma221(That);
}

double printed_lemma184_constant() {
    double s7 = std::sqrt(7.0) / 4.0;
    return -std::atanh(s7) + s7 + 0.5 * std::log(0.75);
}

double corrected_lemma184_constant() {
    double s7 = std::sqrt(7.0) / 4.0;
    return -std::atanh(s7) + s7 - 0.5 * std::log(0.75);
}

double printed_main_log_coefficient(double c0) {
    double zp_m1 = zeta_prime(cplx(-1.0, 0.0)).real();
    return -c0 * (4.0 * zp_m1 * erf_half_pi() + 0.25);
}

// ------------------------------------------------------------ strip profile

double iso_profile_e1(double y, double kappa) {
    KahanSum s;
    for (long t = 1;; ++t) {
        double arg = kappa * M_PI * double(t) * double(t) / (y * y);
        if (arg > 45.0) break;
        s.add(2.0 * exp_e1(arg));
    }
    return s.get() - (2.0 / std::sqrt(kappa)) * y;
}

double iso_profile_wsum(double y, double kappa) {
    // CT_{sigma=0} of the nonzero-frequency part after Poisson summation:
    // (2y/sqrt(kappa)) (pi y^2/kappa)^(-sigma-1/2)
    //   [Gamma(sigma+1/2) zeta(2 sigma+1)
    //    - sum_w w^(-2 sigma-1) Gamma(sigma+1/2, pi w^2 y^2/kappa)]
    auto F = [y, kappa](cplx sig) -> cplx {
        cplx head = cgamma(sig + 0.5) * zeta(2.0 * sig + 1.0);
        cplx tail = 0.0;
        for (long w = 1;; ++w) {
            double a = M_PI * double(w) * double(w) * y * y / kappa;
            if (a > 42.0) break;
            tail += std::exp(-(2.0 * sig + 1.0) * std::log(double(w))) *
                    gamma_upper(sig + 0.5, a);
        }
        cplx pref = (2.0 * y / std::sqrt(kappa)) *
                    std::exp(-(sig + 0.5) * std::log(M_PI * y * y / kappa));
        return pref * (head - tail);
    };
    LaurentData d = laurent_extract(F, cplx(0.0, 0.0), 0.1, 16, false);
    return d.c_0.real();
}

double iso_sum_folded(HPoint z, double kappa) {
    // lambda = t(a^2, -ac, -c^2), gcd(a,c) = 1, gives
    // 4 pi q(lambda_z) = pi kappa t^2 |a - c z|^4 / y^2
    double y = z.y, x = z.x;
    double B = y * std::sqrt(45.0 / (M_PI * kappa));  // |a-cz|^2 cutoff, t=1
    KahanSum s;
    auto add_pair = [&](double d2) {
        for (long t = 1;; ++t) {
            double arg =
                M_PI * kappa * double(t) * double(t) * d2 * d2 / (y * y);
            if (arg > 45.0) break;
            s.add(2.0 * exp_e1(arg));
        }
    };
    if (1.0 <= B) add_pair(1.0);  // the cusp at infinity, (a,c) = (1,0)
    for (long c = 1; double(c) * double(c) * y * y <= B; ++c) {
        double rad2 = B - double(c) * double(c) * y * y;
        if (rad2 < 0.0) continue;
        double r = std::sqrt(rad2);
        long a_lo = (long)std::ceil(double(c) * x - r);
        long a_hi = (long)std::floor(double(c) * x + r);
        for (long a = a_lo; a <= a_hi; ++a) {
            if (std::gcd(std::llabs(a), c) != 1) continue;
            double dx = double(a) - double(c) * x;
            double d2 = dx * dx + double(c) * double(c) * y * y;
            if (d2 <= B) add_pair(d2);
        }
    }
    return s.get();
}

double modularity_defect(const WeaklyHolomorphicInput& f, HPoint tau) {
    auto M = [&f](HPoint t) -> cplx {
        cplx v = f.value(CosetId::mu0, t) * jacobi_theta(t, CosetId::mu0) +
                 f.value(CosetId::mu1, t) * jacobi_theta(t, CosetId::mu1);
        return v * std::pow(t.y, -0.25);
    };
    double n2 = tau.x * tau.x + tau.y * tau.y;
    HPoint stau{-tau.x / n2, tau.y / n2};
    cplx a = M(tau), b = M(stau);
    return std::abs(a - b) / std::max(1e-300, std::abs(a));
}

// --------------------------------------------------------------- verifiers

VerificationReport verify_zagier(cplx s, double That) {
    VerificationReport r;
    r.identity_id = "zagier";
    r.lhs_path = "2d-quadrature of the Fourier-mode series";
    r.rhs_path = "closed form";
    r.add_config("s_re", s.real());
    r.add_config("s_im", s.imag());
    r.add_config("That", That);
    r.add_config("quad_tol", 1e-8);
    Region reg{RegionKind::FundamentalTruncated, That};
    QuadratureResult q = integrate(
        [s](HPoint z) { return eisenstein_zagier(z, s, EisMode::fourier); },
        reg, 1e-8);
    r.lhs = q.value;
    r.rhs = truncated_rs_closed(s, That);
    r.note("quadrature error estimate " + fmt(q.abs_error_estimate) + ", " +
           fmt(double(q.cells_used)) + " cells");
    r.finish(1e-6);
    return r;
}

VerificationReport verify_lemma212(double That, bool end_to_end) {
    VerificationReport r;
    r.identity_id = "lemma212";
    r.lhs_path = end_to_end ? "contour CT over quadrature samples"
                            : "contour CT of the closed form";
    r.rhs_path = "printed constant pi/3 - 1/That";
    r.add_config("That", That);
    r.add_config("end_to_end", end_to_end ? "true" : "false");
    if (end_to_end) {
        Region reg{RegionKind::FundamentalTruncated, That};
        auto F = [&reg](cplx s) -> cplx {
            return integrate(
                       [s](HPoint z) {
                           return eisenstein_zagier(z, s, EisMode::fourier);
                       },
                       reg, 1e-9)
                .value;
        };
        LaurentData d = laurent_extract(F, cplx(0.0, 0.0), 0.2, 16, false);
        r.lhs = d.c_0;
    } else {
        r.lhs = ct_powerint(CtKind::ct_s0, That);
    }
    r.rhs = M_PI / 3.0 - 1.0 / That;
    r.finish(end_to_end ? 1e-5 : 1e-8);
    return r;
}

VerificationReport verify_lemma221(double That) {
    VerificationReport r;
    r.identity_id = "lemma221";
    r.hard = false;
    r.lhs_path = "contour CT at s = 1 of the closed form";
    r.rhs_path = "printed closed form";
    r.add_config("That", That);
    r.lhs = ct_powerint(CtKind::ct_s1, That);
    r.rhs = printed_lemma221(That);
    r.finish(1e-8);
    double L = std::log(That);
    r.note("lhs - log(That) = " + fmt(r.lhs.real() - L) +
           " (bounded as That grows)");
    if (!r.pass) {
        r.note("printed form differs from the contour value by " +
               fmt(r.lhs.real() - r.rhs.real()));
        // contour expansion: log That + (3/pi)(log That + 1)/That
        //                    - phi0(1)/That, phi0 = CT of phi at s = 1
        LaurentData dphi = laurent_extract(
            [](cplx s) { return phi_scattering(s); }, cplx(1.0, 0.0), 0.2,
            24, false);
        double phi0 = dphi.c_0.real();
        double expanded = L + (3.0 / M_PI) * (L + 1.0) / That - phi0 / That;
        r.note("contour expansion log(That) + (3/pi)(log(That)+1)/That - "
               "phi0/That with phi0 = " + fmt(phi0) + " gives " +
               fmt(expanded) +
               "; the printed form carries both 1/That corrections with "
               "the opposite sign and a different constant");
    }
    return r;
}

VerificationReport verify_derivadaeis(double That) {
    VerificationReport r;
    r.identity_id = "derivadaeis";
    r.hard = false;
    r.lhs_path = "contour first-order term at s = 0 of the closed form";
    r.rhs_path = "printed closed form";
    r.add_config("That", That);
    r.lhs = ct_powerint(CtKind::ct_s0_log, That);
    r.rhs = printed_derivadaeis(That);
    r.finish(1e-8);
    // internal consistency: subtracting the cutoff-dependent terms
    // -(log That + 1)/That + phi'(0) log That leaves a constant
    double phip0 = -2.0 * zeta_star(cplx(2.0, 0.0)).real();  // = -pi/3
    auto residue_free = [phip0](double T) {
        double L = std::log(T);
        return ct_powerint(CtKind::ct_s0_log, T) + (L + 1.0) / T -
               phip0 * L;
    };
    double k1 = residue_free(That), k2 = residue_free(2.0 * That + 3.0);
    r.note("cutoff-independent remainder " + fmt(k1) + ", at second cutoff " +
           fmt(k2) + " (drift " + fmt(k1 - k2) + ")");
    if (!r.pass) {
        double zp_m1 = zeta_prime(cplx(-1.0, 0.0)).real();
        r.note("printed log(That) coefficient -2 zeta'(-1) = " +
               fmt(-2.0 * zp_m1) + " vs contour coefficient phi'(0) = " +
               fmt(phip0));
    }
    return r;
}

VerificationReport verify_prop185(HPoint tau) {
    VerificationReport r;
    r.identity_id = "prop185";
    r.lhs_path = "Gaussian integral mode (quadrature)";
    r.rhs_path = "closed mode y sqrt(v) theta";
    r.add_config("tau_re", tau.x);
    r.add_config("tau_im", tau.y);
    HPoint z0{0.0, 1.0};
    r.lhs = div_part(tau, z0, CosetId::mu0, DivMode::integral) +
            div_part(tau, z0, CosetId::mu1, DivMode::integral);
    r.rhs = div_part(tau, z0, CosetId::mu0, DivMode::closed) +
            div_part(tau, z0, CosetId::mu1, DivMode::closed);
    r.finish(1e-10, true);
    return r;
}

VerificationReport verify_lemma115(double That, HPoint tau) {
    VerificationReport r;
    r.identity_id = "lemma115";
    r.lhs_path = "2d quadrature over the cusp box";
    r.rhs_path = "log(That) times the closed value at z0";
    r.add_config("That", That);
    r.add_config("tau_re", tau.x);
    r.add_config("tau_im", tau.y);
    Region reg{RegionKind::CuspBox, That};
    QuadratureResult q = integrate(
        [tau](HPoint z) {
            return div_part(tau, z, CosetId::mu0, DivMode::closed) +
                   div_part(tau, z, CosetId::mu1, DivMode::closed);
        },
        reg, 1e-11);
    r.lhs = q.value;
    HPoint z0{0.0, 1.0};
    r.rhs = std::log(That) *
            (div_part(tau, z0, CosetId::mu0, DivMode::closed) +
             div_part(tau, z0, CosetId::mu1, DivMode::closed));
    r.finish(1e-8);
    return r;
}

VerificationReport verify_lemma184() {
    VerificationReport r;
    r.identity_id = "lemma184";
    r.lhs_path = "1d quadrature over the literal proof region";
    r.rhs_path = "arctanh antiderivative evaluation";
    HPoint tau{0.0, 1.0}, z0{0.0, 1.0};
    double d0 = div_part(tau, z0, CosetId::mu0, DivMode::closed).real();
    r.add_config("tau", "i");
    // region: y in (3/4, 1), x-width 1/2 - sqrt(1-y^2), both halves
    cplx I = quad_gk(
        [](double y) {
            return cplx((0.5 - std::sqrt(1.0 - y * y)) / y, 0.0);
        },
        0.75, 1.0, 1e-13);
    r.lhs = 2.0 * d0 * I;
    r.rhs = 2.0 * d0 * corrected_lemma184_constant();
    r.finish(1e-8);
    r.note("printed constant " + fmt(printed_lemma184_constant()) +
           " carries the opposite sign on the log(3/4)/2 term; the "
           "antiderivative evaluates to " + fmt(corrected_lemma184_constant()));
    // the proof region's lower bound 3/4 differs from the geometric
    // boundary sqrt(3)/2 of the compact part of the fundamental domain
    cplx J = quad_gk(
        [](double y) {
            return cplx((0.5 - std::sqrt(1.0 - y * y)) / y, 0.0);
        },
        std::sqrt(3.0) / 2.0, 1.0, 1e-13);
    r.note("integral over the geometric region y in (sqrt(3)/2, 1) = " +
           fmt(2.0 * d0 * J.real()) + " (proof region uses y > 3/4)");
    return r;
}

VerificationReport verify_lemma224(cplx s, double That) {
    VerificationReport r;
    r.identity_id = "lemma224";
    r.lhs_path = "contour CT of the inner power integral, strip profile";
    r.rhs_path = "closed power integral";
    r.add_config("s_re", s.real());
    r.add_config("s_im", s.imag());
    r.add_config("That", That);
    if (s.real() <= 1.0)
        throw std::domain_error("verify_lemma224: Re s <= 1");
    auto inner_ct = [](double y) {
        // int_1^inf v^(-sigma-3/2) dv = 1/(sigma+1/2)
        LaurentData d = laurent_extract(
            [y](cplx sig) { return cplx(y / 2.0, 0.0) / (sig + 0.5); },
            cplx(0.0, 0.0), 0.2, 32, false);
        return d.c_0;
    };
    r.note("inner CT at y = 1.37: " + fmt(inner_ct(1.37).real()) +
           " (continuation value equals y)");
    Region reg{RegionKind::ZagierStrip, That, 3000};
    QuadratureResult q = strip_profile_integrate(
        [&inner_ct, s](double y) {
            return inner_ct(y) * std::exp(s * std::log(y));
        },
        reg, 1e-9);
    r.lhs = q.value;
    r.rhs = truncated_rs_closed(s + 1.0, That);
    r.finish(1e-6);
    return r;
}

VerificationReport verify_lemma225(const std::vector<double>& s_list,
                                   double That) {
    VerificationReport r;
    r.identity_id = "lemma225";
    r.hard = false;
    r.lhs_path = "frequency-sum strip integrals";
    r.rhs_path = "fitted combination of closed power integrals";
    r.add_config("That", That);
    if (s_list.size() < 3)
        throw std::invalid_argument("verify_lemma225: need >= 3 s values");
    for (size_t i = 0; i < s_list.size(); ++i)
        r.add_config("s" + std::to_string(i), s_list[i]);
    const double kappa = 4.0;  // the source's Gaussian normalization
    // profile S(y); the incomplete-gamma route converges quickly for
    // moderate y, the E1 route is exact where its terms survive (the two
    // agree to 1e-9, see the test suite)
    auto S = [kappa](double y) {
        return y >= 0.6 ? iso_profile_wsum(y, kappa)
                        : iso_profile_e1(y, kappa);
    };
    Region reg{RegionKind::ZagierStrip, That, 2000};
    std::vector<double> L(s_list.size()), I0(s_list.size()),
        I1(s_list.size());
    for (size_t i = 0; i < s_list.size(); ++i) {
        double s = s_list[i];
        if (s <= 1.0)
            throw std::domain_error("verify_lemma225: Re s <= 1");
        L[i] = strip_profile_integrate(
                   [&S, s](double y) {
                       return cplx(S(y) * std::pow(y, s), 0.0);
                   },
                   reg, 1e-8)
                   .value.real();
        I0[i] = truncated_rs_closed(cplx(s, 0.0), That).real();
        I1[i] = truncated_rs_closed_ds(cplx(s, 0.0), That).real();
    }
    // least squares L ~= c1 I0 + c2 I1
    double a11 = 0, a12 = 0, a22 = 0, b1 = 0, b2 = 0;
    for (size_t i = 0; i < L.size(); ++i) {
        a11 += I0[i] * I0[i];
        a12 += I0[i] * I1[i];
        a22 += I1[i] * I1[i];
        b1 += I0[i] * L[i];
        b2 += I1[i] * L[i];
    }
    double det = a11 * a22 - a12 * a12;
    if (std::abs(det) < 1e-12 * a11 * a22)
        throw std::runtime_error("verify_lemma225: ill-conditioned s grid");
    double c1 = (b1 * a22 - b2 * a12) / det;
    double c2 = (a11 * b2 - a12 * b1) / det;
    double res2 = 0, norm2 = 0;
    for (size_t i = 0; i < L.size(); ++i) {
        double d = L[i] - c1 * I0[i] - c2 * I1[i];
        res2 += d * d;
        norm2 += L[i] * L[i];
    }
    double rel_res = std::sqrt(res2 / std::max(norm2, 1e-300));
    r.lhs = L[0];
    r.rhs = c1 * I0[0] + c2 * I1[0];
    r.finish(0.05);
    double erf_c = erf_half_pi();
    r.note("fitted (c1, c2) = (" + fmt(c1) + ", " + fmt(c2) +
           "), relative fit residual " + fmt(rel_res));
    r.note("printed pair (A, -8 erf) = (" + fmt(constant_A()) + ", " +
           fmt(-8.0 * erf_c) + ")");
    r.note("proof-step pair (A_alt, -4 erf) = (" + fmt(constant_A_alt()) +
           ", " + fmt(-4.0 * erf_c) + ")");
    r.note("large-y asymptotic pair (gamma - log pi, -2) = (" +
           fmt(gamma_em - std::log(M_PI)) + ", -2)");
    return r;
}

VerificationReport verify_lemma243() {
    VerificationReport r;
    r.identity_id = "lemma243";
    r.lhs_path = "Laurent structure of the limit (pure simple pole)";
    r.rhs_path = "printed value 0";
    // lim_T int_1^T v^(-sigma-1) dv = 1/sigma for Re sigma > 0; the
    // constant term of a pure simple pole vanishes identically
    r.lhs = 0.0;
    r.rhs = 0.0;
    LaurentData d = laurent_extract(
        [](cplx sig) { return 1.0 / sig; }, cplx(0.0, 0.0), 0.5, 32, false);
    r.note("contour cross-check: |CT| = " + fmt(std::abs(d.c_0)) +
           ", residue = " + fmt(d.c_m1.real()));
    r.finish(1e-14, true);
    if (std::abs(d.c_0) > 1e-14 || std::abs(d.c_m1 - 1.0) > 1e-12) {
        r.pass = false;
        r.note("contour cross-check failed");
    }
    return r;
}

VerificationReport verify_limit_case(double That, double kappa) {
    VerificationReport r;
    r.identity_id = "limit_case";
    r.hard = false;
    r.lhs_path = "folded 2d quadrature of the E1 sum";
    r.rhs_path = "constant-term decomposition (contour + strip profile)";
    r.add_config("That", That);
    r.add_config("kappa", kappa);
    const double rk = 2.0 / std::sqrt(kappa);
    // below y0 every E1 term is beyond the truncation threshold
    const double y0 = 0.9 * std::sqrt(kappa * M_PI / 45.0);

    Region fund{RegionKind::FundamentalTruncated, That};
    QuadratureResult qd = integrate(
        [kappa](HPoint z) { return cplx(iso_sum_folded(z, kappa), 0.0); },
        fund, 1e-8);
    r.lhs = qd.value.real();

    Region strip{RegionKind::ZagierStrip, That, 500};
    // piece 1: the zero-frequency Gaussian gives (2/sqrt(kappa)) y, whose
    // regularized strip integral is the CT at s = 1
    double I1 = rk * ct_powerint(CtKind::ct_s1, That);
    // piece 2: CT at s = 0 of the nonzero-frequency strip integral; its
    // pole comes from the closed power integral, the E1 remainder is
    // integrated numerically at each contour sample
    auto Lfun = [&](cplx s) -> cplx {
        cplx Q = strip_profile_integrate(
                     [s, kappa](double y) {
                         return cplx(iso_profile_e1(y, kappa) +
                                     (2.0 / std::sqrt(kappa)) * y, 0.0) *
                                std::exp(s * std::log(y));
                     },
                     strip, 1e-10, y0)
                     .value;
        return Q - rk * truncated_rs_closed(s + 1.0, That);
    };
    LaurentData dl = laurent_extract(Lfun, cplx(0.0, 0.0), 0.15, 24, false);
    double I2 = dl.c_0.real();
    double I3 = 0.0;  // pure pole, CT vanishes (see lemma243)
    r.rhs = I1 + I2 + I3;
    r.finish(1e-4);
    r.note("pieces: zero-frequency " + fmt(I1) + ", nonzero-frequency " +
           fmt(I2) + ", boundary term " + fmt(I3));
    double res_expect = -rk * (1.0 - 3.0 / (M_PI * That));
    r.note("pole cancellation: nonzero-frequency residue " +
           fmt(dl.c_m1.real()) + " vs -(2/sqrt(kappa))(1 - 3/(pi That)) = " +
           fmt(res_expect));
    if (std::abs(dl.c_m1.real() - res_expect) > 1e-6) {
        r.pass = false;
        r.note("pole cancellation check failed");
    }
    // unfolding cross-check: the strip integral of the full E1 sum
    double t_strip = strip_profile_integrate(
                         [kappa, rk](double y) {
                             return cplx(iso_profile_e1(y, kappa) + rk * y,
                                         0.0);
                         },
                         strip, 1e-10, y0)
                         .value.real();
    r.note("strip-route value " + fmt(t_strip) + " vs folded " +
           fmt(r.lhs.real()));
    // printed assemblies, reported only
    double s0 = ct_powerint(CtKind::ct_s0, That);
    double s0l = ct_powerint(CtKind::ct_s0_log, That);
    double s1 = ct_powerint(CtKind::ct_s1, That);
    double erf_c = erf_half_pi();
    struct Cand {
        const char* name;
        double v;
    } cands[] = {
        {"contour assembly with A", constant_A() * s0 - 8.0 * erf_c * s0l + s1},
        {"contour assembly with A_alt",
         constant_A_alt() * s0 - 8.0 * erf_c * s0l + s1},
        {"contour assembly with A, -4 erf",
         constant_A() * s0 - 4.0 * erf_c * s0l + s1},
        {"contour assembly with A_alt, -4 erf",
         constant_A_alt() * s0 - 4.0 * erf_c * s0l + s1},
        {"printed closed form", printed_cor213(That)},
    };
    const Cand* best = nullptr;
    for (const Cand& c : cands) {
        double rel = std::abs(c.v - r.lhs.real()) /
                     std::max(std::abs(r.lhs.real()), 1e-300);
        r.note(std::string(c.name) + " = " + fmt(c.v) +
               " (relative deviation " + fmt(rel) + ")");
        if (!best || std::abs(c.v - r.lhs.real()) <
                         std::abs(best->v - r.lhs.real()))
            best = &c;
    }
    double best_rel = std::abs(best->v - r.lhs.real()) /
                      std::max(std::abs(r.lhs.real()), 1e-300);
    r.note(best_rel <= 0.01
               ? std::string("matching configuration: ") + best->name
               : std::string("no printed assembly within 1% (closest: ") +
                     best->name + ")");
    return r;
}

VerificationReport verify_prop215(const WeaklyHolomorphicInput& f, double T) {
    VerificationReport r;
    r.identity_id = "prop215";
    r.hard = false;
    r.lhs_path = "2d quadrature over the truncated fundamental domain";
    r.rhs_path = "Stokes closed form";
    r.add_config("T", T);
    double defect = modularity_defect(f, {0.23, 0.9});
    r.add_config("modularity_defect", defect);
    if (defect > 1e-6)
        r.note("modularity precondition failed (defect " + fmt(defect) +
               "): the input q-series does not pair with the theta vector "
               "into a modular function, the closed form need not apply");
    Region reg{RegionKind::FundamentalTruncated, T};
    QuadratureResult q = integrate(
        [&f](HPoint tau) {
            return std::sqrt(tau.y) *
                   (f.value(CosetId::mu0, tau) *
                        jacobi_theta(tau, CosetId::mu0) +
                    f.value(CosetId::mu1, tau) *
                        jacobi_theta(tau, CosetId::mu1));
        },
        reg, 1e-9);
    r.lhs = q.value;
    cplx c0 = f.coeff(CosetId::mu0, {0, 1}) + f.coeff(CosetId::mu1, {0, 1});
    r.rhs = -2.0 * c0 / std::sqrt(T);
    r.finish(1e-6);
    return r;
}

VerificationReport verify_integralsola(const WeaklyHolomorphicInput& f,
                                       double T) {
    VerificationReport r;
    r.identity_id = "integralsola";
    r.lhs_path = "2d quadrature over the cusp box";
    r.rhs_path = "Stokes closed form";
    r.add_config("T", T);
    Region reg{RegionKind::CuspBox, T};
    QuadratureResult q = integrate(
        [&f](HPoint tau) {
            return std::sqrt(tau.y) * (f.value(CosetId::mu0, tau) +
                                       f.value(CosetId::mu1, tau));
        },
        reg, 1e-11);
    r.lhs = q.value;
    cplx c0 = f.coeff(CosetId::mu0, {0, 1}) + f.coeff(CosetId::mu1, {0, 1});
    r.rhs = 2.0 * c0 * (1.0 - 1.0 / std::sqrt(T));
    r.finish(1e-9);
    // the closed form drops every nonconstant q-term via the u-average;
    // that step is exact for integer exponents only
    bool quarter = false;
    for (const auto& [e, c] : f.comp(CosetId::mu1))
        if (c != cplx(0.0, 0.0)) quarter = true;
    if (quarter)
        r.note("input has quarter-integer exponents on the second coset; "
               "their u-averages do not vanish and the closed form omits "
               "their contribution");
    return r;
}

namespace {

// int_{X^{mod,That}} y dmu, the factor shared by the two double integrals
double div_region_factor(double That) {
    Region reg{RegionKind::FundamentalTruncated, That};
    return integrate([](HPoint z) { return cplx(z.y, 0.0); }, reg, 1e-11)
        .value.real();
}

}  // namespace

VerificationReport verify_prop226(const WeaklyHolomorphicInput& f, double T,
                                  double That) {
    VerificationReport r;
    r.identity_id = "prop226";
    r.hard = false;
    r.lhs_path = "quadrature (region factor times theta pairing)";
    r.rhs_path = "printed closed form";
    r.add_config("T", T);
    r.add_config("That", That);
    double defect = modularity_defect(f, {0.23, 0.9});
    r.add_config("modularity_defect", defect);
    if (defect > 1e-6)
        r.note("modularity precondition failed (defect " + fmt(defect) + ")");
    double K = div_region_factor(That);
    Region reg{RegionKind::FundamentalTruncated, T};
    cplx pair_int = integrate(
                        [&f](HPoint tau) {
                            return std::sqrt(tau.y) *
                                   (f.value(CosetId::mu0, tau) *
                                        jacobi_theta(tau, CosetId::mu0) +
                                    f.value(CosetId::mu1, tau) *
                                        jacobi_theta(tau, CosetId::mu1));
                        },
                        reg, 1e-9)
                        .value;
    r.lhs = K * pair_int;
    cplx c0 = f.coeff(CosetId::mu0, {0, 1}) + f.coeff(CosetId::mu1, {0, 1});
    double printed_k = std::log(That) + 2.0 * printed_lemma184_constant();
    r.rhs = -(1.0 / std::sqrt(T)) * 2.0 * c0 * printed_k;
    r.finish(1e-6);
    r.note("quadrature region factor " + fmt(K) +
           " vs printed log(That) + 2(-arctanh...) = " + fmt(printed_k));
    return r;
}

VerificationReport verify_lemma232(const WeaklyHolomorphicInput& f, double T,
                                   double That) {
    VerificationReport r;
    r.identity_id = "lemma232";
    r.hard = false;
    r.lhs_path = "quadrature (region factor times cusp-box integral)";
    r.rhs_path = "printed closed form";
    r.add_config("T", T);
    r.add_config("That", That);
    double K = div_region_factor(That);
    Region reg{RegionKind::CuspBox, T};
    cplx box = integrate(
                   [&f](HPoint tau) {
                       return std::sqrt(tau.y) * f.value(CosetId::mu0, tau);
                   },
                   reg, 1e-11)
                   .value;
    r.lhs = K * box;
    cplx c0 = f.coeff(CosetId::mu0, {0, 1});
    double printed_k = std::log(That) + 2.0 * printed_lemma184_constant();
    r.rhs = -2.0 * c0 * (1.0 - 1.0 / std::sqrt(T)) * printed_k;
    r.finish(1e-6);
    cplx truth = 2.0 * c0 * (1.0 - 1.0 / std::sqrt(T)) * K;
    r.note("positive-sign assembly with the quadrature region factor = " +
           fmt(truth.real()) + " (matches lhs to " +
           fmt(std::abs(truth - r.lhs)) + ")");
    if (!r.pass)
        r.note("printed form enters with the opposite overall sign and the "
               "printed compact-part constant; see lemma184");
    return r;
}

namespace {

// one-period trapezoid; vartheta is 1-periodic and effectively bandlimited
// (u-modes past the truncation threshold are already dropped), so 32 nodes
// reach quadrature-noise level for heights >= sqrt(3)/2
cplx period_avg(const std::function<cplx(double)>& g) {
    const int n = 32;
    cplx s{0.0, 0.0};
    for (int i = 0; i < n; ++i) s += g(-0.5 + (i + 0.5) / n);
    return s / double(n);
}

// integral over the truncated modular fundamental domain with dx dy / y^2,
// nested 1d Gauss-Kronrod; the y > 1 box uses the periodic trapezoid in x.
// Cheaper than the cell-based 2d integrator when used as an inner integral.
cplx fund_quad(const std::function<cplx(HPoint)>& f, double That,
               double tol) {
    cplx compact = quad_gk(
        [&f, tol](double y) -> cplx {
            double x0 = std::sqrt(std::max(0.0, 1.0 - y * y));
            cplx inner = quad_gk(
                [&f, y](double x) -> cplx {
                    return f({x, y}) + f({-x, y});
                },
                x0, 0.5, tol);
            return inner / (y * y);
        },
        std::sqrt(3.0) / 2.0, 1.0, tol);
    cplx box = quad_gk(
        [&f](double y) -> cplx {
            return period_avg([&f, y](double x) { return f({x, y}); }) /
                   (y * y);
        },
        1.0, That, tol);
    return compact + box;
}

}  // namespace

VerificationReport verify_splitting(double That, double T) {
    VerificationReport r;
    r.identity_id = "splitting";
    r.lhs_path = "direct double quadrature, z outer";
    r.rhs_path = "three-block decomposition, tau outer";
    r.add_config("That", That);
    r.add_config("T", T);
    const double kappa = 1.0;
    const double tol_inner = 1e-5, tol_outer = 3e-4;
    // f is the constant input: <f, Theta> = vartheta(tau, z, mu0)
    cplx D = fund_quad(
        [=](HPoint z) {
            return fund_quad(
                [=](HPoint tau) {
                    return vartheta(tau, z, CosetId::mu0, kappa);
                },
                T, tol_inner);
        },
        That, tol_outer);
    r.lhs = D;
    // block 1: tau outer, z inner
    cplx B1 = fund_quad(
        [=](HPoint tau) {
            return fund_quad(
                [=](HPoint z) {
                    return vartheta(tau, z, CosetId::mu0, kappa);
                },
                That, tol_inner);
        },
        T, tol_outer);
    // blocks 2 and 3: the u-constant part of the pairing over the cusp
    // region, in both integration orders
    auto zero_part = [kappa](double v, HPoint z) -> cplx {
        ThetaComponents tc =
            theta_components({0.0, v}, z, CosetId::mu0, kappa);
        return tc.c00 + tc.c0;
    };
    cplx B2 = quad_gk(
        [&](double v) -> cplx {
            return fund_quad(
                       [&zero_part, v](HPoint z) {
                           return zero_part(v, z);
                       },
                       That, tol_inner) /
                   (v * v);
        },
        1.0, T, tol_outer);
    cplx B3 = fund_quad(
        [&](HPoint z) {
            return quad_gk(
                [&zero_part, z](double v) -> cplx {
                    return zero_part(v, z) / (v * v);
                },
                1.0, T, tol_inner);
        },
        That, tol_outer);
    r.rhs = B1 - B2 + B3;
    r.finish(1e-3);
    r.note("blocks: full pairing " + fmt(B1.real()) +
           ", u-constant part (v outer) " + fmt(B2.real()) +
           ", u-constant part (z outer) " + fmt(B3.real()));
    return r;
}

// ---------------------------------------------------------------- assembly

MainTheoremBreakdown assemble_main_theorem(const OrdinaryCaseInputs& in) {
    MainTheoremBreakdown out;
    out.That = in.That;
    double That = in.That;
    double c0 = in.f.c0_mu0().real();
    double erf_c = erf_half_pi();
    double zs2 = zeta_star(cplx(2.0, 0.0)).real();
    double zsp2 = zeta_star_prime(cplx(2.0, 0.0)).real();
    double zsp_m1 = zeta_star_prime(cplx(-1.0, 0.0)).real();
    double zp_m1 = zeta_prime(cplx(-1.0, 0.0)).real();
    double gp1 = -gamma_em;  // Gamma'(1)
    double l2pi = std::log(2.0 * M_PI);

    auto b_lookup = [&in](const Rational& m, double* v) {
        for (const auto& [e, b] : in.b_values)
            if (e == m) {
                *v = b;
                return true;
            }
        return false;
    };
    // ordinary block: -(vol/2) sum c(-m) kappa(m)
    for (CosetId c : {CosetId::mu0, CosetId::mu1}) {
        for (const auto& [e, coef] : in.f.comp(c)) {
            if (e.value() >= 0.0 || coef == cplx(0.0, 0.0)) continue;
            Rational m{-e.num, e.den};
            AssembledTerm t;
            t.label = "ordinary coefficient block, m = " +
                      std::to_string(m.num) +
                      (m.den == 1 ? "" : "/" + std::to_string(m.den)) +
                      (c == CosetId::mu0 ? ", mu0" : ", mu1");
            t.coefficient = -(kVolX / 2.0) * coef.real();
            double bv;
            if (b_lookup(m, &bv)) {
                t.coefficient *= bv;
                t.provenance = "input";
            } else {
                t.symbol = std::string("b(") + std::to_string(m.num) +
                           (m.den == 1 ? "" : "/" + std::to_string(m.den)) +
                           ")";
                t.provenance = "input (symbolic)";
            }
            out.terms.push_back(t);
        }
    }
    // m = 0 block: only the mu0 coset contributes
    double Cconst =
        constant_A() / 2.0 -
        (12.0 / M_PI) * erf_c *
            (gamma_em + 1.5 * zsp_m1 +
             zp_m1 * (std::log(M_PI) + 2.0 * gamma_em -
                      2.0 * l2pi * (3.0 * l2pi + std::log(2.0)))) +
        (6.0 / M_PI) * printed_lemma184_constant();
    double kappa00 = Cconst + weight32_A0(1.0) -
                     (gp1 / 2.0 + 1.0 + 0.5 * std::log(2.0 * M_PI));
    out.terms.push_back({"constant-coefficient block, m = 0, mu0",
                         -(kVolX / 2.0) * c0 * kappa00, "",
                         "special-function closed forms"});
    // log(That) block
    out.log_that_coefficient = printed_main_log_coefficient(c0);
    out.terms.push_back({"log(That) block",
                         out.log_that_coefficient * std::log(That), "",
                         "closed-form"});
    // decaying blocks
    double d1 = c0 * ((std::log(That) + 1.0) / That) *
                (-2.0 * erf_c + 1.0 / (8.0 * zs2));
    double bracket =
        (1.0 / (std::sqrt(M_PI) * zs2)) *
        (gamma_em * std::sqrt(M_PI) +
         0.5 * (std::log(M_PI) * std::sqrt(M_PI) +
                std::sqrt(M_PI) * (-gamma_em - 2.0 * std::log(2.0))) +
         zsp2 * std::sqrt(M_PI) / (2.0 * zs2));
    double d2 = -(c0 / That) *
                ((1.0 / (4.0 * That)) * (bracket - constant_A()) +
                 (3.0 / M_PI) * (gp1 / 2.0 + 0.5 * std::log(2.0 * M_PI)));
    out.terms.push_back(
        {"(log(That)+1)/That block", d1, "", "closed-form"});
    out.terms.push_back({"1/That block", d2, "", "closed-form"});
    out.decaying_block = d1 + d2;
    double cblock = 0.0;
    for (const AssembledTerm& t : out.terms)
        if (t.symbol.empty() && t.label.find("log(That) block") ==
                                    std::string::npos &&
            t.label.find("/That") == std::string::npos)
            cblock += t.coefficient;
    out.constant_block = cblock;
    // the two log(T) coefficients: the ordinary block consumes
    // b(0, T) ~ (1/2) log T with weight 2 vol c0, the zero-coefficient
    // subtraction carries vol c0 log T
    double a1 = 2.0 * kVolX * c0 * 0.5;
    double a2 = kVolX * c0;
    out.log_T_cancels = std::abs(a1 - a2) < 1e-12 * std::abs(a2);
    out.notes.push_back("log(T) coefficients " + fmt(a1) + " and " + fmt(a2) +
                        " cancel in the difference");
    out.notes.push_back(
        "printed limit-case closed form times -1/4 at this cutoff: " +
        fmt(-0.25 * c0 * printed_cor213(That)));
    return out;
}

// -------------------------------------------------------------- divergence

DivergenceFit divergence_fit(const std::vector<double>& that_list,
                             const WeaklyHolomorphicInput& f,
                             double quad_tol) {
    if (that_list.size() < 4)
        throw std::invalid_argument("divergence_fit: need >= 4 cutoffs");
    DivergenceFit out;
    for (double That : that_list) {
        Region reg{RegionKind::FundamentalTruncated, That};
        double I = integrate(
                       [](HPoint z) {
                           return cplx(delta_log(z).log_pet, 0.0);
                       },
                       reg, quad_tol)
                       .value.real();
        out.samples.emplace_back(That, I);
    }
    // The metric factor contributes int_1^That 6 log y dy/y^2 =
    // 6 (1 - (log That + 1)/That) over the cusp region: exact, but its
    // decaying part is still 2.3 at That = 8 and would bias an affine fit
    // by 14%.  Remove the exact term, fit the remainder, report both fits.
    auto metric_term = [](double That) {
        return 6.0 * (1.0 - (std::log(That) + 1.0) / That);
    };
    auto lsq = [&](bool corrected, double* slope, double* intercept,
                   double* resid) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        double n = double(out.samples.size());
        for (const auto& [That, I] : out.samples) {
            double x = std::log(That);
            double v = corrected ? I - metric_term(That) : I;
            sx += x;
            sy += v;
            sxx += x * x;
            sxy += x * v;
        }
        double det = n * sxx - sx * sx;
        *slope = (n * sxy - sx * sy) / det;
        *intercept = (sy * sxx - sx * sxy) / det;
        double res2 = 0;
        for (const auto& [That, I] : out.samples) {
            double v = corrected ? I - metric_term(That) : I;
            double d = v - *intercept - *slope * std::log(That);
            res2 += d * d;
        }
        *resid = std::sqrt(res2 / n);
    };
    lsq(true, &out.slope, &out.intercept, &out.residual);
    double raw_slope, raw_intercept, raw_resid;
    lsq(false, &raw_slope, &raw_intercept, &raw_resid);
    out.theorem_coefficient =
        printed_main_log_coefficient(f.c0_mu0().real());
    out.ratio = out.slope / out.theorem_coefficient;

    VerificationReport& r = out.report;
    r.identity_id = "divergence";
    r.lhs_path = "least-squares slope of the metric-corrected samples";
    r.rhs_path = "forced slope -2 pi";
    r.note("raw affine fit (no metric-term removal): slope " +
           fmt(raw_slope) + ", rms residual " + fmt(raw_resid) +
           "; the deviation from -2 pi equals the decaying part of the "
           "exact metric term at these cutoffs");
    for (const auto& [That, I] : out.samples)
        r.add_config("I(" + fmt(That) + ")", I);
    r.lhs = out.slope;
    r.rhs = -2.0 * M_PI;
    r.finish(0.02);
    if (out.residual >= 0.01 * std::abs(out.slope)) {
        r.pass = false;
        r.note("affine-fit residual " + fmt(out.residual) +
               " exceeds 1% of |slope|");
    } else {
        r.note("affine-fit rms residual " + fmt(out.residual));
    }
    r.note("printed log(That) coefficient for this input: " +
           fmt(out.theorem_coefficient) + ", slope ratio " + fmt(out.ratio));
    return out;
}

}  // namespace swb
