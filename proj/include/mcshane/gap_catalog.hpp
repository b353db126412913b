#pragma once

#include "mcshane/kernel.hpp"

namespace mcshane {

// One end of an embedded pair of pants (other than the distinguished boundary).
enum class EndKind { cusp, cone_point, boundary_geodesic, interior_geodesic };

struct EndDescriptor {
    EndKind kind = EndKind::interior_geodesic;
    double magnitude = 0.0;  // cone angle in (0, pi], geodesic length > 0, 0 for a cusp
};

// The distinguished boundary of the torus the identity is summed against.
enum class BoundaryKind { cusp, cone_point, boundary_geodesic };

struct BoundarySpec {
    BoundaryKind kind = BoundaryKind::cusp;
    double magnitude = 0.0;  // cone angle in (0, 2pi) or boundary length > 0

    // 0 for a cusp, i*theta0 for a cone point, l0 for a boundary geodesic
    complex_t complex_length() const;
};

inline BoundarySpec make_cusp() { return {BoundaryKind::cusp, 0.0}; }
inline BoundarySpec make_cone(double theta) { return {BoundaryKind::cone_point, theta}; }
inline BoundarySpec make_hole(double l) { return {BoundaryKind::boundary_geodesic, l}; }

// Measure of the gap cut out on delta0 by the pants spanned by ends (a, b):
// an angle in (0, theta0/2] for a cone point, a length in (0, l0/2] for a
// boundary geodesic.  Cusp ends enter as interior geodesics of length 0.
// Throws invalid_combination when both ends are cone points / boundary
// geodesics, std::invalid_argument for a cusp delta0 (use gap_prime),
// std::domain_error for out-of-range magnitudes.
double gap(const BoundarySpec& delta0, const EndDescriptor& a, const EndDescriptor& b);

// Horocyclic gap measure for a cusp delta0, normalized to total 1/2.
double gap_prime(const EndDescriptor& a, const EndDescriptor& b);

// Same gap evaluated through G and S at the complex half-lengths.  Real and
// equal to gap() for a boundary-geodesic delta0; equal to gap() * i for a
// cone-point delta0.
complex_t gap_via_gs(const BoundarySpec& delta0, const EndDescriptor& a, const EndDescriptor& b);

} // namespace mcshane
