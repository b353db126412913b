// Acceptance gate: one [PASS]/[FAIL] line per criterion, nonzero exit if any
// criterion fails.  Run by ctest after the unit suites.

#include "mcshane/errors.hpp"
#include "mcshane/kernel.hpp"
#include "mcshane/markoff.hpp"
#include "mcshane/pants.hpp"
#include "mcshane/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

using namespace mcshane;
using std::numbers::pi;

namespace {

int failures = 0;

void report(int n, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", n, detail.c_str());
    if (!ok) ++failures;
}

std::string strf(const char* format, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, format);
    std::vsnprintf(buf, sizeof buf, format, ap);
    va_end(ap);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

EndDescriptor interior(double l) { return {EndKind::interior_geodesic, l}; }
EndDescriptor cone_end(double phi) { return {EndKind::cone_point, phi}; }
EndDescriptor boundary_end(double m) { return {EndKind::boundary_geodesic, m}; }
EndDescriptor cusp_end() { return {EndKind::cusp, 0.0}; }

// ---- criteria 1-3: full identities -----------------------------------------

void criterion_full(int n, const char* label, const std::vector<BoundarySpec>& bs,
                    const std::vector<double>& cutoffs, const std::vector<double>& tols,
                    bool timed) {
    const auto t0 = std::chrono::steady_clock::now();
    double worst_ratio = 0.0;
    double worst_resid = 0.0;
    std::size_t terms = 0;
    for (std::size_t i = 0; i < bs.size(); ++i) {
        const VerificationReport rep = verify_full_identity(bs[i], cutoffs[i]);
        terms += rep.term_count;
        if (std::abs(rep.residual) / tols[i] > worst_ratio) {
            worst_ratio = std::abs(rep.residual) / tols[i];
            worst_resid = std::abs(rep.residual);
        }
    }
    const double secs = seconds_since(t0);
    bool ok = worst_ratio <= 1.0;
    std::string detail = strf("%s: worst |residual| = %.3e (within tolerance: %s), %zu terms",
                              label, worst_resid, worst_ratio <= 1.0 ? "yes" : "no", terms);
    if (timed) {
        ok = ok && secs < 1.0;
        detail += strf(", %.3f s (limit 1 s)", secs);
    }
    report(n, ok, detail);
}

// ---- criterion 10 helpers ---------------------------------------------------

bool oracle_valid = true;

void brute_expand(const TraceTriple& t, int slot, int depth, double cap,
                  std::vector<GeodesicRecord>& out) {
    const TraceTriple f = vieta_flip(t, slot);
    const double z2 = f.traces[slot];
    if (!(z2 > 2.0)) {
        oracle_valid = false;
        return;
    }
    if (z2 <= cap)
        out.push_back({f.slopes[slot], z2, length_from_trace(z2),
                       weierstrass_class(f.slopes[slot])});
    if (depth >= 8) return;
    for (int s = 0; s < 3; ++s)
        if (s != slot) brute_expand(f, s, depth + 1, cap, out);
}

std::vector<GeodesicRecord> brute_force(const BoundarySpec& b, double cutoff) {
    const TraceTriple seed = symmetric_seed(boundary_invariant(b));
    const double cap = 2.0 * std::cosh(cutoff / 2.0);
    std::vector<GeodesicRecord> out;
    for (int s = 0; s < 3; ++s)
        if (seed.traces[s] <= cap)
            out.push_back({seed.slopes[s], seed.traces[s], length_from_trace(seed.traces[s]),
                           weierstrass_class(seed.slopes[s])});
    for (int s = 0; s < 3; ++s) brute_expand(seed, s, 0, cap, out);
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

// Random walk through the flip tree, preferring moves that keep the largest
// trace below `bound`; records the path so it can be replayed backwards.
TraceTriple bounded_walk(const TraceTriple& seed, int steps, double bound,
                         std::mt19937_64& rng, std::vector<int>& path) {
    TraceTriple cur = seed;
    for (int step = 0; step < steps; ++step) {
        std::array<double, 3> peak{};
        int slots[3];
        int n_ok = 0;
        for (int s = 0; s < 3; ++s) {
            const TraceTriple f = vieta_flip(cur, s);
            peak[s] = *std::max_element(f.traces.begin(), f.traces.end());
            if (peak[s] <= bound) slots[n_ok++] = s;
        }
        int slot;
        if (n_ok > 0) {
            slot = slots[rng() % static_cast<unsigned>(n_ok)];
        } else {
            slot = static_cast<int>(std::min_element(peak.begin(), peak.end()) - peak.begin());
        }
        cur = vieta_flip(cur, slot);
        path.push_back(slot);
    }
    return cur;
}

} // namespace

int main() {
    // 1-3: full identities per boundary kind
    criterion_full(1, "cusp full identity at cutoff 25, tolerance 1e-06", {make_cusp()}, {25.0},
                   {1e-6}, true);
    criterion_full(2, "hole l0=2 full identity at cutoff 25, tolerance 1e-06", {make_hole(2.0)},
                   {25.0}, {1e-6}, false);
    criterion_full(3, "cone pi at cutoff 25 (1e-06) and cone 3pi/2 at cutoff 30 (1e-05)",
                   {make_cone(pi), make_cone(1.5 * pi)}, {25.0, 30.0}, {1e-6, 1e-5}, false);

    // 4: one-class identities and their combined form
    {
        bool ok = true;
        double worst_cls = 0.0, worst_comb = 0.0;
        for (const BoundarySpec& b : {make_cusp(), make_cone(pi), make_hole(2.0)}) {
            const auto records = enumerate_geodesics(b, 30.0);
            for (WeierstrassClass c :
                 {WeierstrassClass::A, WeierstrassClass::B, WeierstrassClass::C}) {
                const auto rep =
                    report_from_records(b, IdentityKind::weierstrass, c, 30.0, records);
                worst_cls = std::max(worst_cls, std::abs(rep.residual));
            }
            const auto comb = combined_from_records(b, 30.0, records);
            worst_comb = std::max(worst_comb, std::abs(comb.residual));
        }
        ok = worst_cls <= 5e-3 && worst_comb <= 1.5e-2;
        report(4, ok,
               strf("one-class sums at cutoff 30 for cusp/cone pi/hole 2: worst class "
                    "|residual| = %.3e (tol 5e-03), worst combined = %.3e (tol 1.5e-02)",
                    worst_cls, worst_comb));
    }

    // 5: boundary partition identity on random pants
    {
        const auto t0 = std::chrono::steady_clock::now();
        std::mt19937_64 rng(501);
        std::uniform_real_distribution<double> len(0.1, 5.0);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const double l0 = len(rng), a = len(rng), b = len(rng);
            const PartitionWidths w =
                partition_widths({make_hole(l0), interior(a), interior(b)});
            worst = std::max(worst, std::abs(w.gap_total + w.proj_a + w.proj_b - l0));
        }
        const double secs = seconds_since(t0);
        report(5, worst <= 1e-12 && secs < 1.0,
               strf("partition gap_total+proj_a+proj_b = l0 on 1000 draws in [0.1,5]^3: worst "
                    "|error| = %.3e (tol 1e-12), %.3f s (limit 1 s)",
                    worst, secs));
    }

    // 6: closed forms for one and two imaginary arguments
    {
        double worst1 = 0.0;
        for (int i = 1; i <= 50; ++i)
            for (int k = 1; k <= 50; ++k)
                for (int j = 0; j < 50; ++j) {
                    const double x = 0.1 * i, z = 0.1 * k, y = (pi / 2.0) * j / 49.0;
                    const complex_t lhs = g_func({x, 0.0}, {0.0, y}, {z, 0.0}) +
                                          s_func({x, 0.0}, {0.0, y}, {z, 0.0});
                    const double rhs =
                        x - 0.5 * std::log((std::cos(y) + std::cosh(x + z)) /
                                           (std::cos(y) + std::cosh(x - z)));
                    worst1 = std::max(worst1, std::abs(lhs - complex_t{rhs, 0.0}));
                }
        // both first arguments imaginary: angles stay within [0, pi/2], where the
        // principal branches agree with the closed form
        double worst2 = 0.0;
        for (int i = 0; i < 50; ++i)
            for (int j = 0; j < 50; ++j)
                for (int k = 1; k <= 50; ++k) {
                    const double x = (pi / 2.0) * i / 49.0, y = (pi / 2.0) * j / 49.0,
                                 z = 0.1 * k;
                    const complex_t lhs = g_func({0.0, x}, {0.0, y}, {z, 0.0}) +
                                          s_func({0.0, x}, {0.0, y}, {z, 0.0});
                    const double rhs =
                        x - std::atan2(std::sin(x) * std::sinh(z),
                                       std::cos(y) + std::cos(x) * std::cosh(z));
                    worst2 = std::max(worst2, std::abs(lhs - complex_t{0.0, rhs}));
                }
        report(6, worst1 <= 1e-12 && worst2 <= 1e-12,
               strf("closed forms on 125000-point grids: one imaginary argument worst = %.3e, "
                    "two imaginary arguments worst = %.3e (tol 1e-12; angle grid [0,pi/2])",
                    worst1, worst2));
    }

    // 7: atanh form vs log form of G and S
    {
        std::mt19937_64 rng(701);
        std::uniform_real_distribution<double> re(-5.0, 5.0), im(-pi / 2.0, pi / 2.0);
        const auto draw = [&]() { return complex_t{re(rng), im(rng)}; };
        double worst = 0.0;
        int done = 0, rejected = 0;
        while (done < 10000) {
            const complex_t x = draw(), y = draw(), z = draw();
            try {
                const complex_t ga = g_func(x, y, z, GsForm::atanh_form);
                const complex_t gl = g_func(x, y, z, GsForm::log_form);
                const complex_t sa = s_func(x, y, z, GsForm::atanh_form);
                const complex_t sl = s_func(x, y, z, GsForm::log_form);
                worst = std::max({worst, std::abs(ga - gl), std::abs(sa - sl)});
                ++done;
            } catch (const singular_configuration&) {
                ++rejected;  // redraw away from branch points
            }
        }
        report(7, worst <= 1e-12,
               strf("dual forms on 10000 random complex triples: worst |difference| = %.3e "
                    "(tol 1e-12), %d singular draws resampled",
                    worst, rejected));
    }

    // 8: gap catalog vs its G/S reformulation, every defined subcase
    {
        std::mt19937_64 rng(801);
        std::uniform_real_distribution<double> hole_len(0.3, 4.0), cone_ang(0.2, pi),
            wide_ang(pi + 0.05, 2.0 * pi - 0.1), int_len(0.4, 4.0), bnd_len(0.3, 3.0);
        using Draw = std::function<std::tuple<BoundarySpec, EndDescriptor, EndDescriptor>()>;
        const auto ends = [&](int pair) -> std::pair<EndDescriptor, EndDescriptor> {
            switch (pair) {
            case 0: return {interior(int_len(rng)), interior(int_len(rng))};
            case 1: return {cusp_end(), interior(int_len(rng))};
            case 2: return {cusp_end(), cusp_end()};
            case 3: return {cone_end(cone_ang(rng)), interior(int_len(rng))};
            case 4: return {cone_end(cone_ang(rng)), cusp_end()};
            case 5: return {boundary_end(bnd_len(rng)), interior(int_len(rng))};
            default: return {boundary_end(bnd_len(rng)), cusp_end()};
            }
        };
        std::vector<Draw> subcases;
        for (int pair = 0; pair < 7; ++pair) {
            subcases.push_back([&, pair] {
                auto [a, b] = ends(pair);
                return std::make_tuple(make_hole(hole_len(rng)), a, b);
            });
            subcases.push_back([&, pair] {
                auto [a, b] = ends(pair);
                return std::make_tuple(make_cone(cone_ang(rng)), a, b);
            });
        }
        for (int pair = 0; pair < 3; ++pair) {  // wide cones admit interior-like ends only
            subcases.push_back([&, pair] {
                auto [a, b] = ends(pair);
                return std::make_tuple(make_cone(wide_ang(rng)), a, b);
            });
        }
        double worst = 0.0;
        for (const Draw& d : subcases)
            for (int i = 0; i < 1000; ++i) {
                const auto [d0, a, b] = d();
                const double direct = gap(d0, a, b);
                const complex_t via = gap_via_gs(d0, a, b);
                const double comp =
                    (d0.kind == BoundaryKind::cone_point) ? via.imag() : via.real();
                worst = std::max(worst, std::abs(direct - comp));
            }
        report(8, worst <= 1e-12,
               strf("gap vs G/S reformulation, %zu subcases x 1000 draws: worst |difference| = "
                    "%.3e (tol 1e-12)",
                    subcases.size(), worst));
    }

    // 9: infinitesimal boundary limit against the normalized cusp catalog
    {
        std::mt19937_64 rng(901);
        std::uniform_real_distribution<double> int_len(0.5, 4.0), cone_ang(0.2, pi),
            bnd_len(0.3, 3.0);
        const double eps = 1e-4;
        double worst = 0.0;
        for (int pair = 0; pair < 7; ++pair)
            for (int i = 0; i < 200; ++i) {
                EndDescriptor a, b;
                switch (pair) {
                case 0: a = interior(int_len(rng)); b = interior(int_len(rng)); break;
                case 1: a = cusp_end(); b = interior(int_len(rng)); break;
                case 2: a = cusp_end(); b = cusp_end(); break;
                case 3: a = cone_end(cone_ang(rng)); b = interior(int_len(rng)); break;
                case 4: a = cone_end(cone_ang(rng)); b = cusp_end(); break;
                case 5: a = boundary_end(bnd_len(rng)); b = interior(int_len(rng)); break;
                default: a = boundary_end(bnd_len(rng)); b = cusp_end(); break;
                }
                const double gp = gap_prime(a, b);
                for (const BoundarySpec& d0 : {make_cone(eps), make_hole(eps)}) {
                    const double scaled = gap(d0, a, b) / eps;
                    worst = std::max(worst, std::abs(scaled - gp) / gp);
                }
            }
        report(9, worst <= 1e-3,
               strf("gap(cone eps)/eps and gap(hole eps)/eps vs gap_prime at eps = 1e-04, "
                    "7 subcases x 200 draws: worst relative error = %.3e (tol 1e-03)",
                    worst));
    }

    // 10: structural properties of the enumeration
    {
        // (a) flip involution, checked exactly along an integer-orbit walk
        bool involution_exact = true;
        {
            std::mt19937_64 rng(1001);
            TraceTriple cur = symmetric_seed(0.0);
            std::vector<int> path;
            for (int step = 0; step < 1000; ++step) {
                for (int s = 0; s < 3; ++s) {
                    const TraceTriple ff = vieta_flip(vieta_flip(cur, s), s);
                    if (ff.traces != cur.traces || ff.slopes != cur.slopes)
                        involution_exact = false;
                }
                std::vector<int> dummy;
                cur = bounded_walk(cur, 1, 40.0, rng, dummy);
            }
        }

        // (b) mu drift over 1e4 bounded flips, plus walk reversal
        double worst_drift = 0.0, worst_return = 0.0;
        for (const BoundarySpec& b :
             {make_cusp(), make_cone(pi), make_hole(2.0), make_cone(1.5 * pi)}) {
            std::mt19937_64 rng(1002);
            const TraceTriple seed = symmetric_seed(boundary_invariant(b));
            std::vector<int> path;
            TraceTriple cur = bounded_walk(seed, 10000, 40.0, rng, path);
            worst_drift = std::max(worst_drift, std::abs(cur.mu() - seed.mu()));
            for (auto it = path.rbegin(); it != path.rend(); ++it)
                cur = vieta_flip(cur, *it);
            for (int s = 0; s < 3; ++s)
                worst_return = std::max(worst_return, std::abs(cur.traces[s] - seed.traces[s]));
        }

        // (c) prefix partial sums stay at or below the identity target
        double worst_overshoot = -1.0;
        for (const BoundarySpec& b : {make_cusp(), make_cone(pi), make_hole(2.0)}) {
            const auto records = enumerate_geodesics(b, 20.0);
            double acc = 0.0;
            const double target = identity_target(b, IdentityKind::full);
            for (const GeodesicRecord& r : records) {
                acc += full_summand(b, r.length);
                worst_overshoot = std::max(worst_overshoot, acc - target);
            }
            for (WeierstrassClass c :
                 {WeierstrassClass::A, WeierstrassClass::B, WeierstrassClass::C}) {
                double wacc = 0.0;
                for (const GeodesicRecord& r : records)
                    if (r.wclass == c) {
                        wacc += weierstrass_summand(b, r.length);
                        worst_overshoot = std::max(worst_overshoot, wacc - pi / 2.0);
                    }
            }
        }

        // (d) pruned enumeration at cutoff 5 vs the unpruned oracle
        bool enum_exact = true;
        std::size_t record_total = 0;
        for (const BoundarySpec& b :
             {make_cusp(), make_cone(pi), make_hole(2.0 * std::acosh(2.0))}) {
            const auto got = enumerate_geodesics(b, 5.0);
            const auto want = brute_force(b, 5.0);
            record_total += want.size();
            if (got.size() != want.size()) {
                enum_exact = false;
                continue;
            }
            for (std::size_t i = 0; i < got.size(); ++i)
                if (got[i].slope != want[i].slope || got[i].trace != want[i].trace ||
                    got[i].length != want[i].length || got[i].wclass != want[i].wclass)
                    enum_exact = false;
        }
        enum_exact = enum_exact && oracle_valid;

        const bool ok = involution_exact && worst_drift <= 1e-9 && worst_return <= 1e-6 &&
                        worst_overshoot <= 1e-12 && enum_exact;
        report(10, ok,
               strf("flip involution %s; mu drift %.3e over 1e4 flips (tol 1e-09), walk "
                    "reversal %.3e (tol 1e-06); prefix overshoot %.3e (tol 1e-12); cutoff-5 "
                    "enumeration vs unpruned oracle (%zu records): %s",
                    involution_exact ? "exact" : "NOT exact", worst_drift, worst_return,
                    worst_overshoot, record_total, enum_exact ? "identical" : "MISMATCH"));
    }

    std::printf("%d of 10 criteria passed\n", 10 - failures);
    return failures == 0 ? 0 : 1;
}
