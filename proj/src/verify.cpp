#include "mcshane/verify.hpp"
#include "mcshane/errors.hpp"

#include <algorithm>
#include <cmath>

namespace mcshane {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kMonotoneSlack = 1e-12;

double neumaier(const double* v, std::size_t n) {
    double sum = 0.0, comp = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double t = sum + v[i];
        if (std::abs(sum) >= std::abs(v[i]))
            comp += (sum - t) + v[i];
        else
            comp += (v[i] - t) + sum;
        sum = t;
    }
    return sum + comp;
}

bool prefix_monotone(const std::vector<double>& terms, double target) {
    double acc = 0.0;
    for (double t : terms) {
        acc += t;
        if (acc > target + kMonotoneSlack) return false;
    }
    return true;
}

} // namespace

VerificationReport report_from_records(const BoundarySpec& b, IdentityKind kind,
                                       std::optional<WeierstrassClass> cls, double cutoff,
                                       const std::vector<GeodesicRecord>& records) {
    if (kind == IdentityKind::combined)
        return combined_from_records(b, cutoff, records);
    std::vector<double> terms;
    terms.reserve(records.size());
    for (const auto& r : records) {
        if (cls && r.wclass != *cls) continue;
        terms.push_back(kind == IdentityKind::full ? full_summand(b, r.length)
                                                   : weierstrass_summand(b, r.length));
    }
    VerificationReport rep;
    rep.boundary = b;
    rep.identity = kind;
    rep.wclass = cls;
    rep.cutoff = cutoff;
    rep.term_count = terms.size();
    rep.partial_sum = sum_terms(terms);
    rep.target = identity_target(b, kind);
    rep.residual = rep.target - rep.partial_sum;
    rep.monotone_ok = prefix_monotone(terms, rep.target);
    if (cls) {
        std::vector<GeodesicRecord> mine;
        for (const auto& r : records)
            if (r.wclass == *cls) mine.push_back(r);
        rep.tail_estimate = tail_estimate(mine, b, kind, cutoff);
    } else {
        rep.tail_estimate = tail_estimate(records, b, kind, cutoff);
    }
    return rep;
}

double full_summand(const BoundarySpec& b, double length) {
    if (!(length > 0.0))
        throw std::domain_error("full_summand: length must be positive");
    const double e = std::exp(-length);
    switch (b.kind) {
    case BoundaryKind::cusp:
        return e / (1.0 + e);
    case BoundaryKind::cone_point:
        return 2.0 * std::atan2(std::sin(b.magnitude / 2.0) * e,
                                std::cos(b.magnitude / 2.0) * e + 1.0);
    case BoundaryKind::boundary_geodesic:
        return 2.0 * std::atanh(std::sinh(b.magnitude / 2.0) * e /
                                (std::cosh(b.magnitude / 2.0) * e + 1.0));
    }
    throw std::domain_error("full_summand: unknown boundary kind");
}

double weierstrass_summand(const BoundarySpec& b, double length) {
    if (!(length > 0.0))
        throw std::domain_error("weierstrass_summand: length must be positive");
    switch (b.kind) {
    case BoundaryKind::cusp:
        return std::asin(1.0 / std::cosh(length / 2.0));
    case BoundaryKind::cone_point:
        return std::atan(std::cos(b.magnitude / 4.0) / std::sinh(length / 2.0));
    case BoundaryKind::boundary_geodesic:
        return std::atan(std::cosh(b.magnitude / 4.0) / std::sinh(length / 2.0));
    }
    throw std::domain_error("weierstrass_summand: unknown boundary kind");
}

double identity_target(const BoundarySpec& b, IdentityKind k) {
    switch (k) {
    case IdentityKind::full:
        return b.kind == BoundaryKind::cusp ? 0.5 : b.magnitude / 2.0;
    case IdentityKind::weierstrass:
        return kPi / 2.0;
    case IdentityKind::combined:
        return 3.0 * kPi / 2.0;
    }
    throw std::domain_error("identity_target: unknown identity kind");
}

double sum_terms_serial(const std::vector<double>& terms) {
    double acc = 0.0;
    for (double t : terms) acc += t;
    return acc;
}

double sum_terms(const std::vector<double>& terms) {
    constexpr std::size_t kChunk = 4096;
    const std::size_t n = terms.size();
    if (n == 0) return 0.0;
    const std::size_t nchunks = (n + kChunk - 1) / kChunk;
    std::vector<double> partial(nchunks);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (nchunks > 1)
#endif
    for (long long c = 0; c < static_cast<long long>(nchunks); ++c) {
        const std::size_t lo = static_cast<std::size_t>(c) * kChunk;
        partial[static_cast<std::size_t>(c)] = neumaier(terms.data() + lo, std::min(kChunk, n - lo));
    }
    return neumaier(partial.data(), nchunks);
}

double tail_estimate(const std::vector<GeodesicRecord>& records, const BoundarySpec& b,
                     IdentityKind identity, double cutoff) {
    const double r = (identity == IdentityKind::full) ? 1.0 : 0.5;
    const double target = identity_target(b, identity);
    const double lo = cutoff - std::log(10.0) / r;
    double amp = 0.0;
    std::size_t n_window = 0;
    for (const auto& rec : records) {
        if (rec.length < lo) continue;
        const double term = identity == IdentityKind::full
                                ? full_summand(b, rec.length)
                                : weierstrass_summand(b, rec.length);
        amp += term * std::exp(r * rec.length);
        ++n_window;
    }
    if (n_window < 5) return target;  // too little data: fully unknown tail
    amp /= static_cast<double>(n_window);
    // term amplitude x quadratic count growth, integrated past the cutoff,
    // with a 5x margin; written as c (1+cutoff)^2 exp(-r cutoff)
    const double kappa = static_cast<double>(records.size()) / (cutoff * cutoff);
    const double c = 5.0 * (2.0 * kappa * amp / r) * (cutoff + 1.0 / r) /
                     ((1.0 + cutoff) * (1.0 + cutoff));
    return c * (1.0 + cutoff) * (1.0 + cutoff) * std::exp(-r * cutoff);
}

VerificationReport combined_from_records(const BoundarySpec& b, double cutoff,
                                         const std::vector<GeodesicRecord>& records) {
    const auto a = report_from_records(b, IdentityKind::weierstrass, WeierstrassClass::A, cutoff, records);
    const auto bb = report_from_records(b, IdentityKind::weierstrass, WeierstrassClass::B, cutoff, records);
    const auto c = report_from_records(b, IdentityKind::weierstrass, WeierstrassClass::C, cutoff, records);

    VerificationReport rep;
    rep.boundary = b;
    rep.identity = IdentityKind::combined;
    rep.cutoff = cutoff;
    rep.term_count = a.term_count + bb.term_count + c.term_count;
    rep.partial_sum = a.partial_sum + bb.partial_sum + c.partial_sum;
    rep.target = identity_target(b, IdentityKind::combined);
    rep.residual = rep.target - rep.partial_sum;
    rep.tail_estimate = tail_estimate(records, b, IdentityKind::combined, cutoff);
    std::vector<double> terms;
    terms.reserve(records.size());
    for (const auto& r : records) terms.push_back(weierstrass_summand(b, r.length));
    rep.monotone_ok = prefix_monotone(terms, rep.target);
    return rep;
}

VerificationReport verify_full_identity(const BoundarySpec& b, double cutoff,
                                        const std::optional<TraceTriple>& override_seed) {
    return report_from_records(b, IdentityKind::full, std::nullopt, cutoff,
                               enumerate_geodesics(b, cutoff, override_seed));
}

VerificationReport verify_weierstrass(const BoundarySpec& b, WeierstrassClass cls, double cutoff,
                                      const std::optional<TraceTriple>& override_seed) {
    return report_from_records(b, IdentityKind::weierstrass, cls, cutoff,
                               enumerate_geodesics(b, cutoff, override_seed));
}

VerificationReport verify_combined(const BoundarySpec& b, double cutoff,
                                   const std::optional<TraceTriple>& override_seed) {
    return combined_from_records(b, cutoff, enumerate_geodesics(b, cutoff, override_seed));
}

} // namespace mcshane
