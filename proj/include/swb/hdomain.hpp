#ifndef SWB_HDOMAIN_HPP
#define SWB_HDOMAIN_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "swb/specfun.hpp"

namespace swb {

struct HPoint {
    double x;
    double y;  // > 0
};

enum class RegionKind {
    FundamentalTruncated,  // |x| <= 1/2, x^2+y^2 >= 1, y < That
    CuspBox,               // |x| <= 1/2, 1 < y < T
    FundCompactPart,       // fundamental domain with y <= 1
    ZagierStrip            // |x| <= 1/2, 0 < y <= That, Ford discs excised
};

struct Region {
    RegionKind kind;
    double T = 1.0;      // That or T depending on kind
    int c_max = 500;     // Ford-disc denominator cutoff (ZagierStrip)
};

// integer 2x2 matrix (a b; c d)
using Mat2 = std::array<int64_t, 4>;

struct QuadratureResult {
    cplx value;
    double abs_error_estimate;
    long cells_used;
};

// SL2(Z) reduction: returns z* in the closed fundamental domain and g with
// g z = z*
std::pair<HPoint, Mat2> reduce(HPoint z);

HPoint apply_mat(const Mat2& g, HPoint z);

bool region_contains(const Region& r, HPoint z);

struct IntegrateOptions {
    bool serial = false;
    long max_cells = 40'000'000;
    int panels = 32;  // fixed outer x-panel count (parallel granularity)
};

// integral of f dx dy / y^2 over the region, adaptive Gauss-Kronrod nested
// in y then x.  The parallel path distributes the fixed x-panels over OpenMP
// threads; each panel's computation is independent and identical to the
// serial one, and the reduction is a fixed-order pairwise tree, so parallel
// and serial results agree bit for bit.
QuadratureResult integrate(const std::function<cplx(HPoint)>& f,
                           const Region& r, double tol,
                           const IntegrateOptions& opts = {});
QuadratureResult integrate_serial(const std::function<cplx(HPoint)>& f,
                                  const Region& r, double tol,
                                  const IntegrateOptions& opts = {});

double volume(const Region& r);

// Lebesgue measure of the Ford-free part of the horizontal section at height
// y: 1 minus the chord lengths of all discs S_(a/c), c <= c_max, reaching y.
// Discs are pairwise disjoint so the chords never overlap.
double strip_free_measure(double y, double That, int c_max);

// fast path for x-independent integrands on ZagierStrip:
// int_0^That g(y) strip_free_measure(y) dy / y^2, with graded panels near 0
QuadratureResult strip_profile_integrate(const std::function<cplx(double)>& g,
                                         const Region& r, double tol,
                                         double y_floor = 1e-8);

}  // namespace swb

#endif
