#pragma once

#include "mcshane/pants.hpp"
#include "mcshane/verify.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace mcshane::cli {

// Bad flags, grammar, or values; mapped to exit code 2.
struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when the user asked for --help; mapped to exit code 0.
struct help_requested {
    std::string text;
};

enum class Command { verify, weierstrass, combined, pants, gap, gs };
enum class Format { json, csv };

struct RunConfig {
    Command command = Command::verify;
    BoundarySpec boundary{};
    double cutoff = 25.0;
    std::optional<WeierstrassClass> class_filter;
    std::optional<TraceTriple> override_seed;
    Format format = Format::json;
    std::string output_path;          // empty: stdout
    std::optional<double> tolerance;  // default: the report's tail estimate
    EndDescriptor end_a{};
    EndDescriptor end_b{};
    complex_t gs_x{}, gs_y{}, gs_z{};
};

// Grammar helpers (also used by tests):
//   boundary: cusp | cone:<angle> | hole:<length>
//   end:      cusp | cone:<angle> | boundary:<length> | interior:<length>
BoundarySpec parse_boundary(const std::string& text, bool degrees);
EndDescriptor parse_end(const std::string& text, bool degrees);

// Shortest round-trip decimal rendering.
std::string format_double(double v);

RunConfig parse_args(const std::vector<std::string>& args);

std::string render_json(const VerificationReport& rep);
// One row per contributing record: slope_p,slope_q,trace,length,term,cumulative_sum
std::string render_csv(const VerificationReport& rep, const std::vector<GeodesicRecord>& records);

// Executes the configured command and writes the report.  Returns 0 when the
// identity is verified within tolerance (or the probe succeeded), 1 when the
// residual exceeds it.
int run(const RunConfig& cfg, std::ostream& out);

// Full entry point: MCSHANE_THREADS, argument parsing, exit-code mapping
// (0 verified / 1 residual too large / 2 usage or input error).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace mcshane::cli
