#pragma once

#include "mcshane/gap_catalog.hpp"

#include <utility>

namespace mcshane {

// An embedded pair of pants: the distinguished boundary plus two ends.
struct PantsSpec {
    BoundarySpec delta0;
    EndDescriptor end_a;
    EndDescriptor end_b;
};

// How the pants meets delta0: feet of the two perpendiculars and the induced
// decomposition of half the boundary measure.
struct FootLayout {
    double perp_a = 0.0;       // distance from delta0 to end_a (+inf for a cusp end)
    double perp_b = 0.0;
    double width_a = 0.0;      // half-width of the projection of end_a (0 for cone/cusp)
    double width_b = 0.0;
    double main_gap = 0.0;     // the gap term cut out on delta0
    double full_measure = 0.0; // theta0 or l0
};

// Decomposition of a boundary geodesic delta0 into the two main gaps and the
// full projections of the two ends: gap_total + proj_a + proj_b = l0.
struct PartitionWidths {
    double gap_total = 0.0;  // 2 G(l0/2, |a|/2, |b|/2)
    double proj_a = 0.0;     // 2 S(l0/2, |a|/2, |b|/2)
    double proj_b = 0.0;     // 2 S(l0/2, |b|/2, |a|/2)
};

// Lengths of the perpendiculars from delta0 to each end (to the cone point
// for cone ends).  Requires ends of positive length or cone ends, and a
// non-cusp delta0; throws std::domain_error otherwise or when the pants is
// not realizable.
std::pair<double, double> perpendicular_lengths(const PantsSpec& p);

// Foot widths and the main gap on delta0.  Cusp ends get width 0 and an
// infinite perpendicular.
FootLayout foot_widths(const PantsSpec& p);

// Partition of a boundary-geodesic delta0; ends must be geodesic-like
// (interior, boundary, or cusp as length 0).
PartitionWidths partition_widths(const PantsSpec& p);

} // namespace mcshane
