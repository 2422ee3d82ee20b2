#include "swb/eisenstein.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace swb {

cplx phi_scattering(cplx s) {
    return zeta_star(2.0 * s - 1.0) / zeta_star(2.0 * s);
}

namespace {

// sum of d^(1-2s) over divisors of n, by trial division
cplx divisor_power(long n, cplx expo) {
    cplx sum(0.0, 0.0);
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) sum += std::exp(expo * std::log(double(d)));
    return sum;
}

cplx eisenstein_fourier(HPoint z, cplx s, const EisensteinConfig& cfg) {
    double x = z.x, y = z.y;
    cplx zs2 = zeta_star(2.0 * s);
    cplx num = zs2 * std::pow(cplx(y, 0.0), s) +
               zeta_star(2.0 - 2.0 * s) * std::pow(cplx(y, 0.0), 1.0 - s);
    cplx nu = s - 0.5;
    cplx expo = 1.0 - 2.0 * s;
    KahanSum re, im;
    for (long n = 1; n <= cfg.n_fourier; ++n) {
        if (2.0 * M_PI * n * y > 50.0) break;
        cplx term = std::exp((s - 0.5) * std::log(double(n))) *
                    divisor_power(n, expo) *
                    bessel_k(nu, 2.0 * M_PI * n * y) *
                    std::cos(2.0 * M_PI * n * x);
        re.add(term.real());
        im.add(term.imag());
    }
    num += 4.0 * std::sqrt(y) * cplx(re.get(), im.get());
    return num / zs2;
}

cplx eisenstein_direct(HPoint z, cplx s, const EisensteinConfig& cfg) {
    if (!(s.real() > 1.0))
        throw std::domain_error("eisenstein_zagier: direct mode needs Re s > 1");
    double x = z.x, y = z.y, R = cfg.direct_sum_bound;
    cplx ys = std::pow(cplx(y, 0.0), s);
    KahanSum re, im;
    for (long c = 1; double(c) * y <= R; ++c) {
        double half = std::sqrt(R * R - double(c) * y * double(c) * y);
        long dlo = long(std::ceil(-double(c) * x - half));
        long dhi = long(std::floor(-double(c) * x + half));
        for (long d = dlo; d <= dhi; ++d) {
            if (std::gcd(c, std::labs(d)) != 1) continue;
            double rx = double(c) * x + double(d), ry = double(c) * y;
            double r2 = rx * rx + ry * ry;
            if (r2 > R * R) continue;
            cplx term = std::exp(-s * std::log(r2));
            re.add(term.real());
            im.add(term.imag());
        }
    }
    cplx orbit = cplx(re.get(), im.get());
    // mean-density tail: coprime points cz+d with c >= 1 have density
    // 1/(2 zeta(2) y) per unit area, so the truncated mass beyond R is
    // approximately pi R^(2-2s) / (zeta(2) y (2s-2))
    cplx tail = M_PI * std::exp((2.0 - 2.0 * s) * std::log(R)) /
                (zeta(cplx(2.0, 0.0)) * y * (2.0 * s - 2.0));
    return ys * (1.0 + orbit + tail);
}

}  // namespace

cplx eisenstein_zagier(HPoint z, cplx s, EisMode mode,
                       const EisensteinConfig& cfg) {
    if (!(z.y > 0.0)) throw std::domain_error("eisenstein_zagier: y <= 0");
    return (mode == EisMode::fourier) ? eisenstein_fourier(z, s, cfg)
                                      : eisenstein_direct(z, s, cfg);
}

cplx truncated_rs_closed(cplx s, double That) {
    return std::exp((s - 1.0) * std::log(That)) / (s - 1.0) -
           phi_scattering(s) * std::exp(-s * std::log(That)) / s;
}

double ct_powerint(CtKind kind, double That) {
    auto F = [That](cplx s) { return truncated_rs_closed(s, That); };
    if (kind == CtKind::ct_s1)
        return laurent_extract(F, cplx(1.0, 0.0), 0.2, 64).c_0.real();
    LaurentData d = laurent_extract(F, cplx(0.0, 0.0), 0.2, 64);
    return (kind == CtKind::ct_s0) ? d.c_0.real() : d.c_1.real();
}

double weight32_A0_constant() {
    double g = gamma_em;
    return 3.0 *
           (-12.0 * zeta_prime(cplx(2.0, 0.0)).real() + 2.0 * g * M_PI * M_PI +
            M_PI * M_PI * (-g - std::log(8.0))) /
           (M_PI * M_PI * M_PI);
}

double weight32_A0(double v) {
    return v + std::sqrt(v) * weight32_A0_constant();
}

}  // namespace swb
