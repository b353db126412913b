#include "mcshane/verify.hpp"

#include <chrono>
#include <cstdio>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace mcshane;

namespace {

template <class F>
double time_ms(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

bool same_records(const std::vector<GeodesicRecord>& a, const std::vector<GeodesicRecord>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i].slope == b[i].slope) || a[i].trace != b[i].trace) return false;
    return true;
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP build, max threads %d\n\n", omp_get_max_threads());
#else
    std::printf("serial build (no OpenMP)\n\n");
#endif

    std::printf("geodesic enumeration (cusp torus)\n");
    std::printf("%8s %10s %12s %12s %9s %s\n", "cutoff", "records", "serial(ms)", "parallel(ms)",
                "speedup", "identical");
    for (double cutoff : {20.0, 24.0, 27.0}) {
        const BoundarySpec b = make_cusp();
        std::vector<GeodesicRecord> serial, parallel;
        const double ts = time_ms([&] { serial = enumerate_geodesics_serial(b, cutoff); });
        const double tp = time_ms([&] { parallel = enumerate_geodesics(b, cutoff); });
        std::printf("%8.1f %10zu %12.2f %12.2f %8.2fx %s\n", cutoff, serial.size(), ts, tp,
                    ts / tp, same_records(serial, parallel) ? "yes" : "NO");
    }

    std::printf("\ncompensated summation (random positive terms)\n");
    std::printf("%10s %12s %12s %9s %s\n", "terms", "serial(ms)", "parallel(ms)", "speedup",
                "max diff");
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> dist(0.0, 1e-6);
    for (std::size_t n : {std::size_t{1} << 20, std::size_t{1} << 23}) {
        std::vector<double> terms(n);
        for (double& t : terms) t = dist(rng);
        double a = 0.0, b = 0.0;
        const double ts = time_ms([&] { a = sum_terms_serial(terms); });
        const double tp = time_ms([&] { b = sum_terms(terms); });
        std::printf("%10zu %12.2f %12.2f %8.2fx %.3g\n", n, ts, tp, ts / tp, std::abs(a - b));
    }
    return 0;
}
