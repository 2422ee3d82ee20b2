#include "swb/hdomain.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace swb {

// ----------------------------------------------------------------- reduce

HPoint apply_mat(const Mat2& g, HPoint z) {
    cplx w(z.x, z.y);
    cplx num = double(g[0]) * w + double(g[1]);
    cplx den = double(g[2]) * w + double(g[3]);
    cplx r = num / den;
    return {r.real(), r.imag()};
}

std::pair<HPoint, Mat2> reduce(HPoint z) {
    if (!(z.y > 0.0)) throw std::domain_error("reduce: y <= 0");
    Mat2 g = {1, 0, 0, 1};
    for (int it = 0; it < 10000; ++it) {
        double n = std::round(z.x);
        if (n != 0.0) {
            z.x -= n;
            int64_t k = int64_t(n);
            g = {g[0] - k * g[2], g[1] - k * g[3], g[2], g[3]};
        }
        double nsq = z.x * z.x + z.y * z.y;
        if (nsq >= 1.0 - 1e-15) break;
        // invert: z -> -1/z
        z = {-z.x / nsq, z.y / nsq};
        g = {-g[2], -g[3], g[0], g[1]};
    }
    return {z, g};
}

// ------------------------------------------------------------- membership

namespace {

int64_t gcd64(int64_t a, int64_t b) { return std::gcd(a, b); }

bool in_ford_disc(double x, double y, double That, int c_max) {
    for (int c = 1; c <= c_max; ++c) {
        double r = 1.0 / (2.0 * double(c) * double(c) * That);
        if (y >= 2.0 * r) break;  // discs only shrink as c grows
        double xc = x * c;
        for (int64_t a = int64_t(std::floor(xc)) - 1;
             a <= int64_t(std::floor(xc)) + 2; ++a) {
            if (gcd64(std::llabs(a), c) != 1) continue;
            double dx = x - double(a) / c;
            double dy = y - r;
            if (dx * dx + dy * dy < r * r) return true;
        }
    }
    return false;
}

}  // namespace

bool region_contains(const Region& r, HPoint z) {
    double x = z.x, y = z.y;
    switch (r.kind) {
        case RegionKind::FundamentalTruncated:
            return std::abs(x) <= 0.5 && x * x + y * y >= 1.0 && y < r.T;
        case RegionKind::CuspBox:
            return std::abs(x) <= 0.5 && y > 1.0 && y < r.T;
        case RegionKind::FundCompactPart:
            return std::abs(x) <= 0.5 && x * x + y * y >= 1.0 && y <= 1.0;
        case RegionKind::ZagierStrip:
            if (!(std::abs(x) <= 0.5 && y > 0.0 && y <= r.T)) return false;
            return !in_ford_disc(x, y, r.T, r.c_max);
    }
    return false;
}

// ----------------------------------------------------- Euler phi (sieve)

namespace {

const std::vector<int>& phi_table() {
    static const std::vector<int> tab = [] {
        const int N = 10000;
        std::vector<int> p(N + 1);
        std::iota(p.begin(), p.end(), 0);
        for (int i = 2; i <= N; ++i)
            if (p[i] == i)
                for (int j = i; j <= N; j += i) p[j] -= p[j] / i;
        return p;
    }();
    return tab;
}

}  // namespace

double strip_free_measure(double y, double That, int c_max) {
    if (!(y > 0.0)) throw std::domain_error("strip_free_measure: y <= 0");
    const std::vector<int>& phi = phi_table();
    KahanSum chords;
    for (int c = 1; c <= c_max; ++c) {
        double twor = 1.0 / (double(c) * double(c) * That);
        if (y >= twor) break;
        if (c >= int(phi.size()))
            throw std::runtime_error("strip_free_measure: phi table too small");
        chords.add(phi[c] * 2.0 * std::sqrt(y * (twor - y)));
    }
    double m = 1.0 - chords.get();
    return m > 0.0 ? m : 0.0;
}

// ------------------------------------------------------------- quadrature

namespace {

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

struct Budget {
    long cells = 0;
    long max_cells;
};

void adapt1(const std::function<cplx(double)>& f, double a, double b,
            double tol, int depth, cplx& acc, double& err, Budget& bud) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    cplx sk = wgk[7] * f(c);
    cplx sg = wg[3] * f(c);
    for (int i = 0; i < 7; ++i) {
        cplx f1 = f(c - h * xgk[i]);
        cplx f2 = f(c + h * xgk[i]);
        sk += wgk[i] * (f1 + f2);
        if (i % 2 == 1) sg += wg[i / 2] * (f1 + f2);
    }
    double e = std::abs(h * (sk - sg));
    if (++bud.cells > bud.max_cells)
        throw std::runtime_error("integrate: cell budget exceeded");
    if (e <= tol || depth >= 40 || b - a < 1e-14 * (std::abs(b) + 1.0)) {
        acc += h * sk;
        err += e;
        return;
    }
    double m = 0.5 * (a + b);
    adapt1(f, a, m, 0.5 * tol, depth + 1, acc, err, bud);
    adapt1(f, m, b, 0.5 * tol, depth + 1, acc, err, bud);
}

struct YSeg {
    double lo, hi;
};

std::vector<YSeg> y_segments(const Region& r, double x, double y_floor) {
    std::vector<YSeg> out;
    switch (r.kind) {
        case RegionKind::FundamentalTruncated: {
            double lo = std::sqrt(std::max(0.0, 1.0 - x * x));
            if (r.T > lo) out.push_back({lo, r.T});
            return out;
        }
        case RegionKind::CuspBox:
            if (r.T > 1.0) out.push_back({1.0, r.T});
            return out;
        case RegionKind::FundCompactPart: {
            double lo = std::sqrt(std::max(0.0, 1.0 - x * x));
            if (1.0 > lo) out.push_back({lo, 1.0});
            return out;
        }
        case RegionKind::ZagierStrip: break;
    }
    // ZagierStrip: excise Ford-disc y-intervals at this x, then grade the
    // remaining segments geometrically toward y = 0
    std::vector<YSeg> excl;
    for (int c = 1; c <= r.c_max; ++c) {
        double rad = 1.0 / (2.0 * double(c) * double(c) * r.T);
        if (2.0 * rad <= y_floor) break;
        double xc = x * c;
        for (int64_t a = int64_t(std::floor(xc)) - 1;
             a <= int64_t(std::floor(xc)) + 2; ++a) {
            if (gcd64(std::llabs(a), c) != 1) continue;
            double dx = x - double(a) / c;
            double h2 = rad * rad - dx * dx;
            if (h2 <= 0.0) continue;
            double h = std::sqrt(h2);
            excl.push_back({rad - h, rad + h});
        }
    }
    std::sort(excl.begin(), excl.end(),
              [](const YSeg& p, const YSeg& q) { return p.lo < q.lo; });
    std::vector<YSeg> merged;
    for (const YSeg& e : excl) {
        if (!merged.empty() && e.lo <= merged.back().hi)
            merged.back().hi = std::max(merged.back().hi, e.hi);
        else
            merged.push_back(e);
    }
    std::vector<YSeg> free_;
    double cur = y_floor;
    for (const YSeg& e : merged) {
        if (e.hi <= y_floor) continue;
        if (e.lo > cur) free_.push_back({cur, std::min(e.lo, r.T)});
        cur = std::max(cur, e.hi);
        if (cur >= r.T) break;
    }
    if (cur < r.T) free_.push_back({cur, r.T});
    // grade: split at That * 2^-k so cells shrink with y
    std::vector<double> brk;
    for (double b = 0.5 * r.T; b > y_floor; b *= 0.5) brk.push_back(b);
    for (const YSeg& s : free_) {
        double lo = s.lo;
        for (auto it = brk.rbegin(); it != brk.rend(); ++it) {
            if (*it > lo && *it < s.hi) {
                out.push_back({lo, *it});
                lo = *it;
            }
        }
        if (s.hi > lo) out.push_back({lo, s.hi});
    }
    return out;
}

struct PanelOut {
    cplx val = 0.0;
    double err = 0.0;
    long cells = 0;
};

PanelOut do_panel(const std::function<cplx(HPoint)>& f, const Region& r,
                  double xa, double xb, double tol_x, double tol_y,
                  long max_cells, double y_floor) {
    Budget bud{0, max_cells};
    double inner_err_max = 0.0;
    auto F = [&](double x) -> cplx {
        cplx acc = 0.0;
        double err = 0.0;
        std::vector<YSeg> segs = y_segments(r, x, y_floor);
        if (segs.empty()) return 0.0;
        double tseg = tol_y / double(segs.size());
        for (const YSeg& s : segs) {
            auto g = [&](double y) -> cplx {
                return f({x, y}) / (y * y);
            };
            adapt1(g, s.lo, s.hi, tseg, 0, acc, err, bud);
        }
        if (err > inner_err_max) inner_err_max = err;
        return acc;
    };
    PanelOut out;
    adapt1(F, xa, xb, tol_x, 0, out.val, out.err, bud);
    out.err += inner_err_max * (xb - xa);
    out.cells = bud.cells;
    return out;
}

cplx pairwise_sum(std::vector<cplx> v) {
    size_t n = v.size();
    while (n > 1) {
        size_t m = (n + 1) / 2;
        for (size_t i = 0; i < n / 2; ++i) v[i] = v[2 * i] + v[2 * i + 1];
        if (n % 2) v[n / 2] = v[n - 1];
        n = m;
    }
    return v.empty() ? cplx(0.0) : v[0];
}

QuadratureResult integrate_impl(const std::function<cplx(HPoint)>& f,
                                const Region& r, double tol,
                                const IntegrateOptions& opts, bool parallel) {
    const double y_floor = 1e-8;
    int K = opts.panels;
    double xa = -0.5, xb = 0.5;
    double tol_x = 0.45 * tol / K;
    double tol_y = 0.4 * tol;
    std::vector<PanelOut> res(K);
    std::exception_ptr eptr = nullptr;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
#endif
    for (int k = 0; k < K; ++k) {
        try {
            double pa = xa + (xb - xa) * k / K;
            double pb = xa + (xb - xa) * (k + 1) / K;
            res[k] = do_panel(f, r, pa, pb, tol_x, tol_y,
                              opts.max_cells / K + 1, y_floor);
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
            if (!eptr) eptr = std::current_exception();
        }
    }
    if (eptr) std::rethrow_exception(eptr);
    std::vector<cplx> vals(K);
    double err = 0.0;
    long cells = 0;
    for (int k = 0; k < K; ++k) {
        vals[k] = res[k].val;
        err += res[k].err;
        cells += res[k].cells;
    }
    return {pairwise_sum(std::move(vals)), err, cells};
}

}  // namespace

QuadratureResult integrate(const std::function<cplx(HPoint)>& f,
                           const Region& r, double tol,
                           const IntegrateOptions& opts) {
    return integrate_impl(f, r, tol, opts, !opts.serial);
}

QuadratureResult integrate_serial(const std::function<cplx(HPoint)>& f,
                                  const Region& r, double tol,
                                  const IntegrateOptions& opts) {
    return integrate_impl(f, r, tol, opts, false);
}

QuadratureResult strip_profile_integrate(const std::function<cplx(double)>& g,
                                         const Region& r, double tol,
                                         double y_floor) {
    if (r.kind != RegionKind::ZagierStrip)
        throw std::invalid_argument("strip_profile_integrate: wrong region");
    // breakpoints at disc tops 1/(c^2 That) where the active-c set changes
    std::vector<double> brk{r.T};
    for (int c = 1; c <= r.c_max; ++c) {
        double top = 1.0 / (double(c) * double(c) * r.T);
        if (top <= y_floor) break;
        if (top < r.T) brk.push_back(top);
    }
    brk.push_back(y_floor);
    std::sort(brk.begin(), brk.end());
    Budget bud{0, 40'000'000};
    cplx acc = 0.0;
    double err = 0.0;
    double tseg = tol / double(brk.size());
    auto integrand = [&](double y) -> cplx {
        return g(y) * strip_free_measure(y, r.T, r.c_max) / (y * y);
    };
    for (size_t i = 0; i + 1 < brk.size(); ++i)
        adapt1(integrand, brk[i], brk[i + 1], tseg, 0, acc, err, bud);
    return {acc, err, bud.cells};
}

double volume(const Region& r) {
    switch (r.kind) {
        case RegionKind::FundamentalTruncated:
            return M_PI / 3.0 - 1.0 / r.T;
        case RegionKind::CuspBox:
            return 1.0 - 1.0 / r.T;
        case RegionKind::FundCompactPart:
            return M_PI / 3.0 - 1.0;
        case RegionKind::ZagierStrip:
            if (r.c_max < 1)
                throw std::domain_error(
                    "volume: ZagierStrip with no discs has infinite area");
            return M_PI / 3.0 - 1.0 / r.T;
    }
    throw std::logic_error("volume: bad region");
}

}  // namespace swb
