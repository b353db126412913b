#include "mcshane/markoff.hpp"
#include "mcshane/errors.hpp"
#include "mcshane/kernel.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mcshane {

namespace {

Slope canonical(long long p, long long q) {
    if (q < 0) { p = -p; q = -q; }
    if (q == 0) p = 1;
    return {p, q};
}

// the two Farey neighbors across the edge {s1, s2} are the mediant and the
// difference; the flip moves to whichever is not the current third slope
Slope farey_partner(const Slope& s1, const Slope& s2, const Slope& current) {
    Slope sum = canonical(s1.p + s2.p, s1.q + s2.q);
    if (!(sum == current)) return sum;
    return canonical(s1.p - s2.p, s1.q - s2.q);
}

void check_seed(const TraceTriple& seed, double mu) {
    for (int i = 0; i < 3; ++i) {
        const Slope& s = seed.slopes[i];
        if (s.q < 0 || (s.q == 0 && s.p != 1) || std::gcd(std::abs(s.p), s.q) != 1)
            throw std::invalid_argument("enumerate_geodesics: seed slope not in canonical form");
        if (!(seed.traces[i] > 2.0))
            throw invalid_structure("enumerate_geodesics: seed trace <= 2");
    }
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            long long det = seed.slopes[i].p * seed.slopes[j].q -
                            seed.slopes[j].p * seed.slopes[i].q;
            if (det != 1 && det != -1)
                throw std::invalid_argument("enumerate_geodesics: seed slopes are not a Farey triangle");
        }
    if (std::abs(seed.mu() - mu) > 1e-9)
        throw seed_mismatch("enumerate_geodesics: seed does not match the boundary invariant");
}

struct RawRecord {
    Slope slope;
    double trace;
};

// Depth-first expansion with monotone-growth pruning.  The triple graph is a
// tree, so every node reached this way carries a previously unseen slope.
class Expander {
public:
    Expander(double trace_cap, std::vector<std::vector<RawRecord>>& sinks)
        : trace_cap_(trace_cap), sinks_(sinks) {}

    void expand(const std::array<double, 3>& tr, const std::array<Slope, 3>& sl,
                int slot, int depth) {
        const int i = (slot + 1) % 3, j = (slot + 2) % 3;
        const double z2 = tr[i] * tr[j] - tr[slot];
        if (!(z2 > 2.0)) {
            failed_.store(true, std::memory_order_relaxed);
            return;
        }
        if (z2 > trace_cap_ && z2 > tr[i] && z2 > tr[j])
            return;  // every descendant is longer still
        std::array<double, 3> ntr = tr;
        std::array<Slope, 3> nsl = sl;
        ntr[slot] = z2;
        nsl[slot] = farey_partner(sl[i], sl[j], sl[slot]);
        if (z2 <= trace_cap_)
            sink().push_back({nsl[slot], z2});
        for (int s = 0; s < 3; ++s) {
            if (s == slot) continue;
            if (failed_.load(std::memory_order_relaxed)) return;
#ifdef _OPENMP
            if (depth < kTaskDepth) {
#pragma omp task firstprivate(ntr, nsl, s, depth)
                expand(ntr, nsl, s, depth + 1);
                continue;
            }
#endif
            expand(ntr, nsl, s, depth + 1);
        }
    }

    bool failed() const { return failed_.load(); }

private:
    static constexpr int kTaskDepth = 6;

    std::vector<RawRecord>& sink() {
#ifdef _OPENMP
        return sinks_[static_cast<std::size_t>(omp_get_thread_num())];
#else
        return sinks_[0];
#endif
    }

    double trace_cap_;
    std::vector<std::vector<RawRecord>>& sinks_;
    std::atomic<bool> failed_{false};
};

std::vector<GeodesicRecord> enumerate_impl(const BoundarySpec& b, double cutoff,
                                           const std::optional<TraceTriple>& override_seed,
                                           bool parallel) {
    const double mu = boundary_invariant(b);
    TraceTriple seed = override_seed ? *override_seed : symmetric_seed(mu);
    if (override_seed) check_seed(seed, mu);
    if (!(cutoff > 0.0))
        throw std::domain_error("enumerate_geodesics: cutoff must be positive");

    const double trace_cap = 2.0 * std::cosh(cutoff / 2.0);

    int nsinks = 1;
#ifdef _OPENMP
    if (parallel) nsinks = omp_get_max_threads();
#endif
    std::vector<std::vector<RawRecord>> sinks(static_cast<std::size_t>(nsinks));
    Expander ex(trace_cap, sinks);

    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel
#pragma omp single nowait
        {
            for (int s = 0; s < 3; ++s)
#pragma omp task firstprivate(s)
                ex.expand(seed.traces, seed.slopes, s, 0);
        }
#else
        for (int s = 0; s < 3; ++s) ex.expand(seed.traces, seed.slopes, s, 0);
#endif
    } else {
        for (int s = 0; s < 3; ++s) ex.expand(seed.traces, seed.slopes, s, 0);
    }
    if (ex.failed())
        throw invalid_structure("enumerate_geodesics: trace <= 2 in the triple tree");

    std::vector<RawRecord> raw;
    for (int s = 0; s < 3; ++s)
        if (seed.traces[s] <= trace_cap) raw.push_back({seed.slopes[s], seed.traces[s]});
    for (const auto& sink : sinks) raw.insert(raw.end(), sink.begin(), sink.end());

    std::vector<GeodesicRecord> out;
    out.reserve(raw.size());
    for (const auto& r : raw)
        out.push_back({r.slope, r.trace, length_from_trace(r.trace),
                       weierstrass_class(r.slope)});
    std::sort(out.begin(), out.end(), [](const GeodesicRecord& a, const GeodesicRecord& c) {
        if (a.length != c.length) return a.length < c.length;
        if (a.slope.p != c.slope.p) return a.slope.p < c.slope.p;
        return a.slope.q < c.slope.q;
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const GeodesicRecord& a, const GeodesicRecord& c) {
                              return a.slope == c.slope;
                          }),
              out.end());
    return out;
}

} // namespace

double TraceTriple::mu() const {
    const double x = traces[0], y = traces[1], z = traces[2];
    return x * x + y * y + z * z - x * y * z;
}

double boundary_invariant(const BoundarySpec& b) {
    switch (b.kind) {
    case BoundaryKind::cusp:
        if (b.magnitude != 0.0)
            throw std::domain_error("boundary_invariant: cusp must have magnitude 0");
        return 0.0;
    case BoundaryKind::cone_point:
        if (!(b.magnitude > 0.0 && b.magnitude < 2.0 * 3.14159265358979323846))
            throw std::domain_error("boundary_invariant: cone angle must lie in (0, 2pi)");
        return 2.0 - 2.0 * std::cos(b.magnitude / 2.0);
    case BoundaryKind::boundary_geodesic:
        if (!(b.magnitude > 0.0))
            throw std::domain_error("boundary_invariant: boundary length must be positive");
        return 2.0 - 2.0 * std::cosh(b.magnitude / 2.0);
    }
    throw std::domain_error("boundary_invariant: unknown boundary kind");
}

TraceTriple symmetric_seed(double mu) {
    if (!(mu < 4.0))
        throw degenerate_structure("symmetric_seed: no hyperbolic structure for mu >= 4");
    // largest root of t^3 - 3t^2 + mu: substitute t = u + 1 and solve
    // u^3 - 3u + (mu - 2) = 0 by the trigonometric method
    double t;
    if (mu <= 0.0)
        t = 1.0 + 2.0 * std::cosh(std::acosh((2.0 - mu) / 2.0) / 3.0);
    else
        t = 1.0 + 2.0 * std::cos(std::acos((2.0 - mu) / 2.0) / 3.0);
    if (!(t > 2.0))
        throw degenerate_structure("symmetric_seed: largest root <= 2");
    TraceTriple seed;
    seed.traces = {t, t, t};
    seed.slopes = {Slope{0, 1}, Slope{1, 1}, Slope{1, 0}};
    return seed;
}

TraceTriple vieta_flip(const TraceTriple& t, int slot) {
    if (slot < 0 || slot > 2)
        throw std::out_of_range("vieta_flip: slot must be 0, 1 or 2");
    const int i = (slot + 1) % 3, j = (slot + 2) % 3;
    TraceTriple r = t;
    r.traces[slot] = t.traces[i] * t.traces[j] - t.traces[slot];
    r.slopes[slot] = farey_partner(t.slopes[i], t.slopes[j], t.slopes[slot]);
    return r;
}

WeierstrassClass weierstrass_class(const Slope& s) {
    const int p = static_cast<int>(((s.p % 2) + 2) % 2);
    const int q = static_cast<int>(((s.q % 2) + 2) % 2);
    if (p == 1 && q == 1) return WeierstrassClass::A;
    if (p == 0 && q == 1) return WeierstrassClass::B;
    if (p == 1 && q == 0) return WeierstrassClass::C;
    throw std::invalid_argument("weierstrass_class: slope is not reduced");
}

std::vector<GeodesicRecord> enumerate_geodesics(
    const BoundarySpec& b, double cutoff,
    const std::optional<TraceTriple>& override_seed) {
    return enumerate_impl(b, cutoff, override_seed, true);
}

std::vector<GeodesicRecord> enumerate_geodesics_serial(
    const BoundarySpec& b, double cutoff,
    const std::optional<TraceTriple>& override_seed) {
    return enumerate_impl(b, cutoff, override_seed, false);
}

} // namespace mcshane
