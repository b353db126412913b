#include "mcshane/gap_catalog.hpp"
#include "mcshane/errors.hpp"

#include <cmath>
#include <utility>

namespace mcshane {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_end(const EndDescriptor& e) {
    switch (e.kind) {
    case EndKind::cusp:
        if (e.magnitude != 0.0)
            throw std::domain_error("end: cusp must have magnitude 0");
        break;
    case EndKind::cone_point:
        if (!(e.magnitude > 0.0 && e.magnitude <= kPi))
            throw std::domain_error("end: cone angle must lie in (0, pi]");
        break;
    case EndKind::boundary_geodesic:
    case EndKind::interior_geodesic:
        if (!(e.magnitude > 0.0))
            throw std::domain_error("end: geodesic length must be positive");
        break;
    }
}

void check_boundary(const BoundarySpec& b) {
    switch (b.kind) {
    case BoundaryKind::cusp:
        if (b.magnitude != 0.0)
            throw std::domain_error("boundary: cusp must have magnitude 0");
        break;
    case BoundaryKind::cone_point:
        if (!(b.magnitude > 0.0 && b.magnitude < 2.0 * kPi))
            throw std::domain_error("boundary: cone angle must lie in (0, 2pi)");
        break;
    case BoundaryKind::boundary_geodesic:
        if (!(b.magnitude > 0.0))
            throw std::domain_error("boundary: geodesic length must be positive");
        break;
    }
}

// Catalog dispatch: cusp ends behave as interior geodesics of length 0, and
// at most one end may be a cone point or boundary geodesic.
struct EndPair {
    bool has_special = false;
    EndKind special_kind = EndKind::interior_geodesic;
    double special_mag = 0.0;   // angle phi or boundary length
    double interior_a = 0.0;    // lengths of the interior (or cusp) ends
    double interior_b = 0.0;
};

EndPair classify(const EndDescriptor& a, const EndDescriptor& b) {
    check_end(a);
    check_end(b);
    auto interior_like = [](const EndDescriptor& e) {
        return e.kind == EndKind::interior_geodesic || e.kind == EndKind::cusp;
    };
    EndPair p;
    if (interior_like(a) && interior_like(b)) {
        p.interior_a = a.magnitude;
        p.interior_b = b.magnitude;
        return p;
    }
    if (interior_like(a) || interior_like(b)) {
        const EndDescriptor& sp = interior_like(a) ? b : a;
        const EndDescriptor& in = interior_like(a) ? a : b;
        p.has_special = true;
        p.special_kind = sp.kind;
        p.special_mag = sp.magnitude;
        p.interior_b = in.magnitude;
        return p;
    }
    throw invalid_combination("gap: at most one end may be a cone point or boundary geodesic");
}

} // namespace

complex_t BoundarySpec::complex_length() const {
    switch (kind) {
    case BoundaryKind::cusp: return {0.0, 0.0};
    case BoundaryKind::cone_point: return {0.0, magnitude};
    case BoundaryKind::boundary_geodesic: return {magnitude, 0.0};
    }
    return {};
}

double gap(const BoundarySpec& delta0, const EndDescriptor& a, const EndDescriptor& b) {
    check_boundary(delta0);
    if (delta0.kind == BoundaryKind::cusp)
        throw std::invalid_argument("gap: cusp delta0 carries the horocyclic measure; use gap_prime");
    const EndPair p = classify(a, b);

    if (delta0.kind == BoundaryKind::cone_point) {
        const double th = delta0.magnitude;
        if (p.has_special && th > kPi)
            throw std::domain_error("gap: cone delta0 above pi requires two interior ends");
        if (!p.has_special) {
            const double s = (p.interior_a + p.interior_b) / 2.0;
            return 2.0 * std::atan2(std::sin(th / 2.0), std::cos(th / 2.0) + std::exp(s));
        }
        const double n = (p.special_kind == EndKind::cone_point)
                             ? std::cos(p.special_mag / 2.0)
                             : std::cosh(p.special_mag / 2.0);
        return th / 2.0 - std::atan2(std::sin(th / 2.0) * std::sinh(p.interior_b / 2.0),
                                     n + std::cos(th / 2.0) * std::cosh(p.interior_b / 2.0));
    }

    const double l = delta0.magnitude;
    if (!p.has_special) {
        const double s = (p.interior_a + p.interior_b) / 2.0;
        return 2.0 * std::atanh(std::sinh(l / 2.0) / (std::cosh(l / 2.0) + std::exp(s)));
    }
    const double n = (p.special_kind == EndKind::cone_point)
                         ? std::cos(p.special_mag / 2.0)
                         : std::cosh(p.special_mag / 2.0);
    return l / 2.0 - std::atanh(std::sinh(l / 2.0) * std::sinh(p.interior_b / 2.0) /
                                (n + std::cosh(l / 2.0) * std::cosh(p.interior_b / 2.0)));
}

double gap_prime(const EndDescriptor& a, const EndDescriptor& b) {
    const EndPair p = classify(a, b);
    if (!p.has_special) {
        const double s = (p.interior_a + p.interior_b) / 2.0;
        return 1.0 / (1.0 + std::exp(s));
    }
    const double n = (p.special_kind == EndKind::cone_point)
                         ? std::cos(p.special_mag / 2.0)
                         : std::cosh(p.special_mag / 2.0);
    return 0.5 - 0.5 * std::sinh(p.interior_b / 2.0) /
                     (n + std::cosh(p.interior_b / 2.0));
}

complex_t gap_via_gs(const BoundarySpec& delta0, const EndDescriptor& a, const EndDescriptor& b) {
    check_boundary(delta0);
    if (delta0.kind == BoundaryKind::cusp)
        throw std::invalid_argument("gap_via_gs: cusp delta0 carries the horocyclic measure");
    const EndPair p = classify(a, b);
    const complex_t x = delta0.complex_length() / 2.0;

    if (!p.has_special)
        return g_func(x, p.interior_a / 2.0, p.interior_b / 2.0);

    const complex_t y = (p.special_kind == EndKind::cone_point)
                            ? complex_t(0.0, p.special_mag / 2.0)
                            : complex_t(p.special_mag / 2.0, 0.0);
    const complex_t z(p.interior_b / 2.0, 0.0);
    return g_func(x, y, z) + s_func(x, y, z);
}

} // namespace mcshane
