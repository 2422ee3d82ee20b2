#include "swb/theta.hpp"

#include <cmath>
#include <stdexcept>

#include "swb/specfun.hpp"

namespace swb {

namespace {

constexpr double two_pi = 2.0 * M_PI;

// norm bound so that e^(-pi v bound) clears 1e-20, with entropy margin
double tail_bound(double v) { return 50.0 / (M_PI * v) + 4.0; }

// enumeration cost explodes near the real axis; far from the standard
// fundamental domain, replace z by its reduced representative (an exact
// reindexing of the lattice sum)
HPoint working_point(HPoint z) {
    if (z.y >= 0.3 && std::abs(z.x) <= 1.6) return z;
    return reduce(z).first;
}

}  // namespace

cplx jacobi_theta(HPoint tau, CosetId c) {
    if (!(tau.y > 0.0)) throw std::domain_error("jacobi_theta: v <= 0");
    cplx two_pi_i_tau(-two_pi * tau.y, two_pi * tau.x);
    double half = (c == CosetId::mu0) ? 0.0 : 0.5;
    cplx sum = (c == CosetId::mu0) ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
    for (long m = (c == CosetId::mu0) ? 1 : 0;; ++m) {
        double n = double(m) + half;
        if (two_pi * tau.y * n * n > 18.0 * std::log(10.0) + 5.0) break;
        sum += 2.0 * std::exp(two_pi_i_tau * (n * n));
    }
    return sum;
}

cplx siegel_theta(HPoint tau, HPoint z, CosetId c, double kappa) {
    if (!(tau.y > 0.0) || !(z.y > 0.0))
        throw std::domain_error("siegel_theta: v <= 0 or y <= 0");
    HPoint zw = working_point(z);
    double v = tau.y, u = tau.x;
    std::vector<LatticeVector> pts =
        lattice_enum(c, zw, tail_bound(v), kappa);
    KahanSum re, im;
    for (const LatticeVector& lam : pts) {
        MajorantSplit m = majorant_split(lam, zw, kappa);
        double mag = std::exp(-two_pi * v * (m.q_pos - m.q_neg));
        double phase = two_pi * m.q_total.value() * u;
        re.add(mag * std::cos(phase));
        im.add(mag * std::sin(phase));
    }
    return {re.get(), im.get()};
}

cplx vartheta(HPoint tau, HPoint z, CosetId c, double kappa) {
    return tau.y * siegel_theta(tau, z, c, kappa);
}

ThetaComponents theta_components(HPoint tau, HPoint z, CosetId c,
                                 double kappa) {
    if (!(tau.y > 0.0) || !(z.y > 0.0))
        throw std::domain_error("theta_components: v <= 0 or y <= 0");
    HPoint zw = working_point(z);
    double v = tau.y, u = tau.x;
    std::vector<LatticeVector> pts =
        lattice_enum(c, zw, tail_bound(v), kappa);
    KahanSum re00, re0, re1, re2, im0, im1, im2;
    for (const LatticeVector& lam : pts) {
        if (lam == LatticeVector{0, 0, 0}) {
            re00.add(1.0);
            continue;
        }
        MajorantSplit m = majorant_split(lam, zw, kappa);
        double mag = std::exp(-two_pi * v * (m.q_pos - m.q_neg));
        double phase = two_pi * m.q_total.value() * u;
        double tr = mag * std::cos(phase), ti = mag * std::sin(phase);
        if (m.q_total.num == 0) {
            re0.add(tr);
            im0.add(ti);
        } else if (m.q_total.num > 0) {
            re1.add(tr);
            im1.add(ti);
        } else {
            re2.add(tr);
            im2.add(ti);
        }
    }
    return {cplx(v * re00.get(), 0.0),
            v * cplx(re0.get(), im0.get()),
            v * cplx(re1.get(), im1.get()),
            v * cplx(re2.get(), im2.get())};
}

cplx div_part(HPoint tau, HPoint z, CosetId c, DivMode mode) {
    if (!(tau.y > 0.0) || !(z.y > 0.0))
        throw std::domain_error("div_part: v <= 0 or y <= 0");
    double v = tau.y, u = tau.x, y = z.y;
    if (mode == DivMode::closed)
        return y * std::sqrt(v) * jacobi_theta(tau, c);
    // sum over x0 in Z (mu0) or 1/2+Z (mu1) of the Gaussian line integral
    // e^(2 pi i u x0^2) int e^(-pi v (xR^2 + 2 x0^2)) dxR, weighted y v
    double L = std::sqrt(46.0 / (M_PI * v));
    double half = (c == CosetId::mu0) ? 0.0 : 0.5;
    cplx sum(0.0, 0.0);
    for (long m = 0;; ++m) {
        double x0 = double(m) + half;
        if (two_pi * v * x0 * x0 > 18.0 * std::log(10.0) + 5.0) break;
        cplx line = quad_gk(
            [v, x0](double xr) {
                return cplx(
                    std::exp(-M_PI * v * (xr * xr + 2.0 * x0 * x0)), 0.0);
            },
            -L, L, 1e-13);
        cplx phase = std::exp(cplx(0.0, two_pi * u * x0 * x0));
        double mult = (c == CosetId::mu0 && m == 0) ? 1.0 : 2.0;
        sum += mult * phase * line;
    }
    return y * v * sum;
}

cplx conv_part(HPoint tau, HPoint z, CosetId c, double kappa) {
    return vartheta(tau, z, c, kappa) - div_part(tau, z, c, DivMode::closed);
}

cplx constant_u_term(const std::function<cplx(double)>& F) {
    cplx left = F(-0.5), right = F(0.5);
    if (std::abs(left - right) > 1e-9 * (1.0 + std::abs(left)))
        throw std::domain_error("constant_u_term: F is not 1-periodic");
    // composite Gauss quadrature with panel doubling; the integrand is
    // smooth and periodic, so convergence is fast
    cplx prev(0.0, 0.0);
    for (int panels = 4; panels <= 1024; panels *= 2) {
        KahanSum re, im;
        double h = 1.0 / double(panels);
        for (int p = 0; p < panels; ++p) {
            double a = -0.5 + p * h, b = a + h;
            cplx part = quad_gk(F, a, b, 1e-13);
            re.add(part.real());
            im.add(part.imag());
        }
        cplx cur(re.get(), im.get());
        if (panels > 4 && std::abs(cur - prev) < 1e-11) return cur;
        prev = cur;
    }
    throw std::runtime_error("constant_u_term: no convergence");
}

}  // namespace swb
