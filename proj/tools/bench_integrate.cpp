#include <chrono>
#include <cstdio>

#include "swb/eisenstein.hpp"
#include "swb/theta.hpp"

using namespace swb;

namespace {

double seconds(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         t0)
        .count();
}

void bench(const char* name, const std::function<cplx(HPoint)>& f,
           const Region& r, double tol) {
    auto t0 = std::chrono::steady_clock::now();
    QuadratureResult serial = integrate_serial(f, r, tol);
    double ts = seconds(t0);
    t0 = std::chrono::steady_clock::now();
    QuadratureResult parallel = integrate(f, r, tol);
    double tp = seconds(t0);
    bool same = serial.value == parallel.value &&
                serial.cells_used == parallel.cells_used;
    std::printf("%-28s serial %8.3fs  parallel %8.3fs  speedup %5.2fx  "
                "cells %8ld  bitwise %s\n",
                name, ts, tp, ts / tp, parallel.cells_used,
                same ? "equal" : "DIFFER");
    if (!same)
        std::printf("  serial %.17g  parallel %.17g\n", serial.value.real(),
                    parallel.value.real());
}

}  // namespace

int main() {
    Region fund{RegionKind::FundamentalTruncated, 4.0};
    bench("eisenstein s=2.5+0.5i",
          [](HPoint z) {
              return eisenstein_zagier(z, cplx(2.5, 0.5), EisMode::fourier);
          },
          fund, 1e-9);
    Region fund2{RegionKind::FundamentalTruncated, 2.0};
    bench("theta pairing",
          [](HPoint tau) {
              return std::sqrt(tau.y) * jacobi_theta(tau, CosetId::mu0) *
                     jacobi_theta(tau, CosetId::mu0);
          },
          fund2, 1e-10);
    Region box{RegionKind::CuspBox, 100.0};
    bench("cusp box sqrt(v)",
          [](HPoint tau) { return cplx(std::sqrt(tau.y), 0.0); }, box,
          1e-11);
    return 0;
}
