#pragma once

#include <stdexcept>

namespace mcshane {

// Evaluation exactly at a pole or branch point of principal_atanh / principal_log.
struct pole_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Input within 1e-3 of a pole or branch point of either closed form of G or S.
struct singular_configuration : std::domain_error {
    using std::domain_error::domain_error;
};

// Pair of ends not covered by the gap catalog (two non-interior ends).
struct invalid_combination : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Trace <= 2 encountered while expanding the triple tree.
struct invalid_structure : std::domain_error {
    using std::domain_error::domain_error;
};

// Override seed whose Markoff value disagrees with the boundary invariant.
struct seed_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Symmetric seed root <= 2: the boundary data admits no hyperbolic torus.
struct degenerate_structure : std::domain_error {
    using std::domain_error::domain_error;
};

} // namespace mcshane
