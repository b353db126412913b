#include "mcshane/pants.hpp"
#include "mcshane/errors.hpp"

#include <cmath>
#include <limits>

namespace mcshane {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool interior_like(const EndDescriptor& e) {
    return e.kind == EndKind::interior_geodesic || e.kind == EndKind::cusp;
}

// cosh(|o|/2) for geodesic-like ends, cos(phi/2) for cone ends
double opposite_factor(const EndDescriptor& o) {
    if (o.kind == EndKind::cone_point) return std::cos(o.magnitude / 2.0);
    return std::cosh(o.magnitude / 2.0);
}

void check_spec(const PantsSpec& p) {
    if (p.delta0.kind == BoundaryKind::cusp)
        throw std::invalid_argument("pants: delta0 must be a cone point or boundary geodesic");
    if (p.delta0.kind == BoundaryKind::cone_point) {
        if (!(p.delta0.magnitude > 0.0 && p.delta0.magnitude < 2.0 * kPi))
            throw std::domain_error("pants: cone angle must lie in (0, 2pi)");
        if (p.delta0.magnitude > kPi &&
            !(interior_like(p.end_a) && interior_like(p.end_b)))
            throw std::domain_error("pants: cone delta0 above pi requires two interior ends");
    } else if (!(p.delta0.magnitude > 0.0)) {
        throw std::domain_error("pants: boundary length must be positive");
    }
}

// Distance from delta0 to end e, with o the opposite end.  Infinite for a
// cusp end.
double perp_to(const BoundarySpec& d0, const EndDescriptor& e, const EndDescriptor& o) {
    if (e.kind == EndKind::cusp)
        return std::numeric_limits<double>::infinity();
    const double n = opposite_factor(o);
    if (d0.kind == BoundaryKind::cone_point) {
        const double th = d0.magnitude;
        if (e.kind == EndKind::cone_point) {
            const double v = (n + std::cos(th / 2.0) * std::cos(e.magnitude / 2.0)) /
                             (std::sin(th / 2.0) * std::sin(e.magnitude / 2.0));
            if (!(v >= 1.0))
                throw std::domain_error("pants: spec is not realizable (cone-to-cone distance)");
            return std::acosh(v);
        }
        const double v = (n + std::cos(th / 2.0) * std::cosh(e.magnitude / 2.0)) /
                         (std::sin(th / 2.0) * std::sinh(e.magnitude / 2.0));
        if (!(v > 0.0))
            throw std::domain_error("pants: spec is not realizable (perpendicular undefined)");
        return std::asinh(v);
    }
    const double l = d0.magnitude;
    if (e.kind == EndKind::cone_point) {
        const double v = (n + std::cosh(l / 2.0) * std::cos(e.magnitude / 2.0)) /
                         (std::sinh(l / 2.0) * std::sin(e.magnitude / 2.0));
        if (!(v > 0.0))
            throw std::domain_error("pants: spec is not realizable (perpendicular undefined)");
        return std::asinh(v);
    }
    const double v = (n + std::cosh(l / 2.0) * std::cosh(e.magnitude / 2.0)) /
                     (std::sinh(l / 2.0) * std::sinh(e.magnitude / 2.0));
    if (!(v >= 1.0))
        throw std::domain_error("pants: spec is not realizable (perpendicular undefined)");
    return std::acosh(v);
}

// Half-width of the projection of end e onto delta0; satisfies
// tan(w) sinh(perp) = 1 on a cone delta0 and tanh(w) cosh(perp) = 1 on a
// boundary delta0.  Zero for cone and cusp ends.
double width_of(const BoundarySpec& d0, const EndDescriptor& e, const EndDescriptor& o) {
    if (e.kind == EndKind::cone_point || e.kind == EndKind::cusp)
        return 0.0;
    const double n = opposite_factor(o);
    if (d0.kind == BoundaryKind::cone_point) {
        const double th = d0.magnitude;
        return std::atan2(std::sin(th / 2.0) * std::sinh(e.magnitude / 2.0),
                          n + std::cos(th / 2.0) * std::cosh(e.magnitude / 2.0));
    }
    const double l = d0.magnitude;
    return std::atanh(std::sinh(l / 2.0) * std::sinh(e.magnitude / 2.0) /
                      (n + std::cosh(l / 2.0) * std::cosh(e.magnitude / 2.0)));
}

} // namespace

std::pair<double, double> perpendicular_lengths(const PantsSpec& p) {
    check_spec(p);
    if (p.end_a.kind == EndKind::cusp || p.end_b.kind == EndKind::cusp)
        throw std::domain_error("perpendicular_lengths: cusp ends have infinite perpendiculars");
    return {perp_to(p.delta0, p.end_a, p.end_b), perp_to(p.delta0, p.end_b, p.end_a)};
}

FootLayout foot_widths(const PantsSpec& p) {
    check_spec(p);
    if (!interior_like(p.end_a) && !interior_like(p.end_b))
        throw invalid_combination("foot_widths: at most one end may be a cone point or boundary geodesic");
    FootLayout f;
    f.full_measure = p.delta0.magnitude;
    f.perp_a = perp_to(p.delta0, p.end_a, p.end_b);
    f.perp_b = perp_to(p.delta0, p.end_b, p.end_a);
    f.width_a = width_of(p.delta0, p.end_a, p.end_b);
    f.width_b = width_of(p.delta0, p.end_b, p.end_a);
    // the projection of a boundary-geodesic end lies outside the gap
    f.main_gap = f.full_measure / 2.0;
    if (p.end_a.kind != EndKind::boundary_geodesic) f.main_gap -= f.width_a;
    if (p.end_b.kind != EndKind::boundary_geodesic) f.main_gap -= f.width_b;
    return f;
}

PartitionWidths partition_widths(const PantsSpec& p) {
    check_spec(p);
    if (p.delta0.kind != BoundaryKind::boundary_geodesic)
        throw std::invalid_argument("partition_widths: delta0 must be a boundary geodesic");
    if (p.end_a.kind == EndKind::cone_point || p.end_b.kind == EndKind::cone_point)
        throw std::invalid_argument("partition_widths: ends must carry geodesic lengths");
    const double x = p.delta0.magnitude / 2.0;
    const double a = p.end_a.magnitude / 2.0;
    const double b = p.end_b.magnitude / 2.0;
    PartitionWidths w;
    w.gap_total = 2.0 * g_func(x, a, b).real();
    w.proj_a = 2.0 * s_func(x, a, b).real();
    w.proj_b = 2.0 * s_func(x, b, a).real();
    return w;
}

} // namespace mcshane
