#pragma once

#include "mcshane/gap_catalog.hpp"

#include <array>
#include <optional>
#include <vector>

namespace mcshane {

// Isotopy class of a simple closed curve on the torus, as a reduced fraction
// p/q.  Canonical form: q > 0, or (1, 0) for the infinite slope.
struct Slope {
    long long p = 0;
    long long q = 1;
    friend bool operator==(const Slope&, const Slope&) = default;
};

// Parity class of a slope: A = (1,1), B = (0,1), C = (1,0) mod 2.
enum class WeierstrassClass { A, B, C };

// A triple of traces sitting on a Farey triangle of slopes.
struct TraceTriple {
    std::array<double, 3> traces{};
    std::array<Slope, 3> slopes{};

    // x^2 + y^2 + z^2 - xyz, constant under Vieta flips
    double mu() const;
};

struct GeodesicRecord {
    Slope slope;
    double trace = 0.0;
    double length = 0.0;
    WeierstrassClass wclass = WeierstrassClass::A;
};

// Markoff-equation constant 2 + tr(commutator) fixed by the boundary:
// 0 for a cusp, 2 - 2cos(theta0/2) for a cone point, 2 - 2cosh(l0/2) for a
// boundary geodesic.
double boundary_invariant(const BoundarySpec& b);

// Equal-trace triple on the root Farey triangle (0/1, 1/1, 1/0): the largest
// root of t^3 - 3t^2 + mu = 0.  Throws degenerate_structure when that root
// is <= 2 (mu >= 4).
TraceTriple symmetric_seed(double mu);

// Replace trace z at `slot` (0..2) by xy - z and the slope by the other
// Farey neighbor across the retained edge.  Involutive in exact arithmetic.
TraceTriple vieta_flip(const TraceTriple& t, int slot);

WeierstrassClass weierstrass_class(const Slope& s);

// All simple closed geodesics of length <= cutoff, one record per slope,
// sorted by (length, p, q).  Expands the triple tree from the seed, pruning
// a subtree only when its frontier trace exceeds both the cutoff trace and
// the traces on the retained edge.  An override seed must match the boundary
// invariant to 1e-9 (seed_mismatch otherwise).
//
// enumerate_geodesics expands independent subtrees in parallel when OpenMP
// is available; enumerate_geodesics_serial is the single-threaded reference.
// Both produce identical output.
std::vector<GeodesicRecord> enumerate_geodesics(
    const BoundarySpec& b, double cutoff,
    const std::optional<TraceTriple>& override_seed = std::nullopt);

std::vector<GeodesicRecord> enumerate_geodesics_serial(
    const BoundarySpec& b, double cutoff,
    const std::optional<TraceTriple>& override_seed = std::nullopt);

} // namespace mcshane
