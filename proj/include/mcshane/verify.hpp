#pragma once

#include "mcshane/markoff.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace mcshane {

enum class IdentityKind { full, weierstrass, combined };

struct VerificationReport {
    BoundarySpec boundary;
    IdentityKind identity = IdentityKind::full;
    std::optional<WeierstrassClass> wclass;  // set for per-class reports
    double cutoff = 0.0;
    std::size_t term_count = 0;
    double partial_sum = 0.0;
    double target = 0.0;
    double residual = 0.0;       // target - partial_sum
    double tail_estimate = 0.0;
    bool monotone_ok = false;    // prefix sums never exceeded target + 1e-12
};

// Per-geodesic term of the boundary identity (gap cut out by the pants on
// (gamma, gamma)), written with exp(-length) factors so large lengths stay
// finite.  Total over all simple closed geodesics: theta0/2, l0/2, or 1/2.
double full_summand(const BoundarySpec& b, double length);

// Per-geodesic term of the one-class identity on the quotient orbifold.
// Total over one parity class: pi/2; over all three classes: 3pi/2.
double weierstrass_summand(const BoundarySpec& b, double length);

double identity_target(const BoundarySpec& b, IdentityKind k);

// Left-to-right reference sum.
double sum_terms_serial(const std::vector<double>& terms);

// Compensated fixed-chunk sum; chunks are combined in index order, so the
// result does not depend on thread count.  OpenMP-parallel over chunks.
double sum_terms(const std::vector<double>& terms);

// Upper estimate c (1+cutoff)^2 exp(-r cutoff) for the dropped tail, with
// r = 1 for the full identity and 1/2 for the Weierstrass forms, and c
// fitted to the last decade of observed terms.  Falls back to the identity
// target when fewer than five terms land in the fitting window.
double tail_estimate(const std::vector<GeodesicRecord>& records, const BoundarySpec& b,
                     IdentityKind identity, double cutoff);

// Build a full or one-class report from an existing enumeration.
VerificationReport report_from_records(
    const BoundarySpec& b, IdentityKind kind, std::optional<WeierstrassClass> cls,
    double cutoff, const std::vector<GeodesicRecord>& records);

// Sum of the three per-class reports; partial_sum is exactly their total.
VerificationReport combined_from_records(
    const BoundarySpec& b, double cutoff, const std::vector<GeodesicRecord>& records);

VerificationReport verify_full_identity(
    const BoundarySpec& b, double cutoff,
    const std::optional<TraceTriple>& override_seed = std::nullopt);

VerificationReport verify_weierstrass(
    const BoundarySpec& b, WeierstrassClass cls, double cutoff,
    const std::optional<TraceTriple>& override_seed = std::nullopt);

VerificationReport verify_combined(
    const BoundarySpec& b, double cutoff,
    const std::optional<TraceTriple>& override_seed = std::nullopt);

} // namespace mcshane
