#include "mcshane/cli.hpp"
#include "mcshane/errors.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <variant>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mcshane::cli {

namespace {

constexpr double kPi = 3.14159265358979323846;

double parse_number(const std::string& text, const std::string& what) {
    double v = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [p, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || p != end)
        throw usage_error(what + ": expected a number, got '" + text + "'");
    return v;
}

std::pair<std::string, std::string> split_tag(const std::string& text) {
    auto pos = text.find(':');
    if (pos == std::string::npos) return {text, ""};
    return {text.substr(0, pos), text.substr(pos + 1)};
}

WeierstrassClass parse_class(const std::string& text) {
    if (text == "A") return WeierstrassClass::A;
    if (text == "B") return WeierstrassClass::B;
    if (text == "C") return WeierstrassClass::C;
    throw usage_error("--class: expected A, B or C, got '" + text + "'");
}

complex_t parse_complex(const std::string& text, const std::string& what) {
    auto pos = text.find(',');
    if (pos == std::string::npos) return {parse_number(text, what), 0.0};
    return {parse_number(text.substr(0, pos), what),
            parse_number(text.substr(pos + 1), what)};
}

TraceTriple parse_seed(const std::string& text) {
    auto p1 = text.find(',');
    auto p2 = (p1 == std::string::npos) ? std::string::npos : text.find(',', p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos)
        throw usage_error("--seed: expected x,y,z");
    TraceTriple t;
    t.traces = {parse_number(text.substr(0, p1), "--seed"),
                parse_number(text.substr(p1 + 1, p2 - p1 - 1), "--seed"),
                parse_number(text.substr(p2 + 1), "--seed")};
    t.slopes = {Slope{0, 1}, Slope{1, 1}, Slope{1, 0}};
    return t;
}

const char* kind_name(BoundaryKind k) {
    switch (k) {
    case BoundaryKind::cusp: return "cusp";
    case BoundaryKind::cone_point: return "cone";
    case BoundaryKind::boundary_geodesic: return "hole";
    }
    return "?";
}

const char* kind_name(EndKind k) {
    switch (k) {
    case EndKind::cusp: return "cusp";
    case EndKind::cone_point: return "cone";
    case EndKind::boundary_geodesic: return "boundary";
    case EndKind::interior_geodesic: return "interior";
    }
    return "?";
}

std::string identity_name(const VerificationReport& rep) {
    switch (rep.identity) {
    case IdentityKind::full: return "full";
    case IdentityKind::combined: return "combined";
    case IdentityKind::weierstrass:
        switch (rep.wclass.value_or(WeierstrassClass::A)) {
        case WeierstrassClass::A: return "weierstrass:A";
        case WeierstrassClass::B: return "weierstrass:B";
        case WeierstrassClass::C: return "weierstrass:C";
        }
    }
    return "?";
}

// flat key/value report for the probe subcommands
using KvValue = std::variant<std::string, double>;
using KvRows = std::vector<std::pair<std::string, KvValue>>;

std::string kv_to_json(const KvRows& rows) {
    nlohmann::ordered_json j;
    for (const auto& [k, v] : rows) {
        if (const double* d = std::get_if<double>(&v)) {
            if (std::isfinite(*d))
                j[k] = *d;
            else
                j[k] = format_double(*d);  // JSON has no inf/nan literal
        } else {
            j[k] = std::get<std::string>(v);
        }
    }
    return j.dump(2) + "\n";
}

std::string kv_to_csv(const KvRows& rows) {
    std::string header, values;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) { header += ','; values += ','; }
        header += rows[i].first;
        if (const double* d = std::get_if<double>(&rows[i].second))
            values += format_double(*d);
        else
            values += std::get<std::string>(rows[i].second);
    }
    return header + "\n" + values + "\n";
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
    if (cfg.output_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(cfg.output_path);
    if (!f)
        throw usage_error("--output: cannot open '" + cfg.output_path + "'");
    f << text;
}

int run_verification(const RunConfig& cfg, std::ostream& out) {
    const auto records = enumerate_geodesics(cfg.boundary, cfg.cutoff, cfg.override_seed);
    VerificationReport rep;
    switch (cfg.command) {
    case Command::verify:
        rep = report_from_records(cfg.boundary, IdentityKind::full, std::nullopt, cfg.cutoff, records);
        break;
    case Command::weierstrass:
        rep = report_from_records(cfg.boundary, IdentityKind::weierstrass,
                                  cfg.class_filter.value_or(WeierstrassClass::A), cfg.cutoff, records);
        break;
    default:
        rep = combined_from_records(cfg.boundary, cfg.cutoff, records);
        break;
    }
    emit(cfg, cfg.format == Format::json ? render_json(rep) : render_csv(rep, records), out);
    const double tol = cfg.tolerance.value_or(rep.tail_estimate);
    return std::abs(rep.residual) <= tol ? 0 : 1;
}

int run_gap(const RunConfig& cfg, std::ostream& out) {
    KvRows rows;
    rows.emplace_back("delta0_kind", kind_name(cfg.boundary.kind));
    rows.emplace_back("delta0_value", cfg.boundary.magnitude);
    rows.emplace_back("end_a_kind", kind_name(cfg.end_a.kind));
    rows.emplace_back("end_a_value", cfg.end_a.magnitude);
    rows.emplace_back("end_b_kind", kind_name(cfg.end_b.kind));
    rows.emplace_back("end_b_value", cfg.end_b.magnitude);
    if (cfg.boundary.kind == BoundaryKind::cusp) {
        rows.emplace_back("gap_prime", gap_prime(cfg.end_a, cfg.end_b));
    } else {
        rows.emplace_back("gap", gap(cfg.boundary, cfg.end_a, cfg.end_b));
        const complex_t v = gap_via_gs(cfg.boundary, cfg.end_a, cfg.end_b);
        rows.emplace_back("gap_via_gs_re", v.real());
        rows.emplace_back("gap_via_gs_im", v.imag());
    }
    emit(cfg, cfg.format == Format::json ? kv_to_json(rows) : kv_to_csv(rows), out);
    return 0;
}

int run_pants(const RunConfig& cfg, std::ostream& out) {
    const PantsSpec spec{cfg.boundary, cfg.end_a, cfg.end_b};
    const FootLayout f = foot_widths(spec);
    KvRows rows;
    rows.emplace_back("delta0_kind", kind_name(cfg.boundary.kind));
    rows.emplace_back("delta0_value", cfg.boundary.magnitude);
    rows.emplace_back("end_a_kind", kind_name(cfg.end_a.kind));
    rows.emplace_back("end_a_value", cfg.end_a.magnitude);
    rows.emplace_back("end_b_kind", kind_name(cfg.end_b.kind));
    rows.emplace_back("end_b_value", cfg.end_b.magnitude);
    rows.emplace_back("perp_a", f.perp_a);
    rows.emplace_back("perp_b", f.perp_b);
    rows.emplace_back("width_a", f.width_a);
    rows.emplace_back("width_b", f.width_b);
    rows.emplace_back("main_gap", f.main_gap);
    rows.emplace_back("full_measure", f.full_measure);
    if (cfg.boundary.kind == BoundaryKind::boundary_geodesic &&
        cfg.end_a.kind != EndKind::cone_point && cfg.end_b.kind != EndKind::cone_point) {
        const PartitionWidths w = partition_widths(spec);
        rows.emplace_back("partition_gap_total", w.gap_total);
        rows.emplace_back("partition_proj_a", w.proj_a);
        rows.emplace_back("partition_proj_b", w.proj_b);
    }
    emit(cfg, cfg.format == Format::json ? kv_to_json(rows) : kv_to_csv(rows), out);
    return 0;
}

int run_gs(const RunConfig& cfg, std::ostream& out) {
    const complex_t g = g_func(cfg.gs_x, cfg.gs_y, cfg.gs_z);
    const complex_t s = s_func(cfg.gs_x, cfg.gs_y, cfg.gs_z);
    const complex_t gl = g_func(cfg.gs_x, cfg.gs_y, cfg.gs_z, GsForm::log_form);
    const complex_t sl = s_func(cfg.gs_x, cfg.gs_y, cfg.gs_z, GsForm::log_form);
    KvRows rows;
    rows.emplace_back("x_re", cfg.gs_x.real());
    rows.emplace_back("x_im", cfg.gs_x.imag());
    rows.emplace_back("y_re", cfg.gs_y.real());
    rows.emplace_back("y_im", cfg.gs_y.imag());
    rows.emplace_back("z_re", cfg.gs_z.real());
    rows.emplace_back("z_im", cfg.gs_z.imag());
    rows.emplace_back("g_re", g.real());
    rows.emplace_back("g_im", g.imag());
    rows.emplace_back("s_re", s.real());
    rows.emplace_back("s_im", s.imag());
    rows.emplace_back("g_log_re", gl.real());
    rows.emplace_back("g_log_im", gl.imag());
    rows.emplace_back("s_log_re", sl.real());
    rows.emplace_back("s_log_im", sl.imag());
    emit(cfg, cfg.format == Format::json ? kv_to_json(rows) : kv_to_csv(rows), out);
    return 0;
}

} // namespace

BoundarySpec parse_boundary(const std::string& text, bool degrees) {
    auto [tag, val] = split_tag(text);
    if (tag == "cusp") {
        if (!val.empty()) throw usage_error("boundary: cusp takes no value");
        return make_cusp();
    }
    if (tag == "cone") {
        double v = parse_number(val, "boundary cone angle");
        if (degrees) v *= kPi / 180.0;
        if (!(v > 0.0 && v < 2.0 * kPi))
            throw usage_error("boundary: cone angle must lie in (0, 2pi)");
        return make_cone(v);
    }
    if (tag == "hole") {
        double v = parse_number(val, "boundary length");
        if (!(v > 0.0))
            throw usage_error("boundary: hole length must be positive");
        return make_hole(v);
    }
    throw usage_error("boundary: expected cusp, cone:<angle> or hole:<length>, got '" + text + "'");
}

EndDescriptor parse_end(const std::string& text, bool degrees) {
    auto [tag, val] = split_tag(text);
    if (tag == "cusp") {
        if (!val.empty()) throw usage_error("end: cusp takes no value");
        return {EndKind::cusp, 0.0};
    }
    if (tag == "cone") {
        double v = parse_number(val, "end cone angle");
        if (degrees) v *= kPi / 180.0;
        if (!(v > 0.0 && v <= kPi))
            throw usage_error("end: cone angle must lie in (0, pi]");
        return {EndKind::cone_point, v};
    }
    if (tag == "boundary" || tag == "interior") {
        double v = parse_number(val, "end length");
        if (!(v > 0.0))
            throw usage_error("end: geodesic length must be positive");
        return {tag == "boundary" ? EndKind::boundary_geodesic : EndKind::interior_geodesic, v};
    }
    throw usage_error("end: expected cusp, cone:<angle>, boundary:<length> or interior:<length>, got '" +
                      text + "'");
}

std::string format_double(double v) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, p);
}

RunConfig parse_args(const std::vector<std::string>& args) {
    CLI::App app{"numerical verification of McShane-type identities on hyperbolic tori"};
    app.require_subcommand(1);

    std::string boundary_text, class_text, seed_text, format_text = "json";
    std::string end_a_text, end_b_text, x_text, y_text, z_text, output_path;
    double cutoff = 0.0, tolerance = 0.0;
    bool degrees = false;
    std::vector<CLI::Option*> cutoff_opts, seed_opts, tolerance_opts;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format_text)->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--output", output_path);
        sub->add_flag("--degrees", degrees);
    };
    auto add_verify = [&](CLI::App* sub) {
        sub->add_option("--boundary", boundary_text)->required();
        cutoff_opts.push_back(sub->add_option("--cutoff", cutoff));
        seed_opts.push_back(sub->add_option("--seed", seed_text));
        tolerance_opts.push_back(sub->add_option("--tolerance", tolerance));
        add_common(sub);
    };
    auto add_probe = [&](CLI::App* sub) {
        sub->add_option("--delta0", boundary_text)->required();
        sub->add_option("--end-a", end_a_text)->required();
        sub->add_option("--end-b", end_b_text)->required();
        add_common(sub);
    };

    CLI::App* verify = app.add_subcommand("verify", "sum the full boundary identity");
    add_verify(verify);
    CLI::App* weier = app.add_subcommand("weierstrass", "sum one parity-class identity");
    add_verify(weier);
    weier->add_option("--class", class_text)->required();
    CLI::App* combined = app.add_subcommand("combined", "sum all three parity classes");
    add_verify(combined);
    CLI::App* pants = app.add_subcommand("pants", "foot layout of a single pair of pants");
    add_probe(pants);
    CLI::App* gap = app.add_subcommand("gap", "gap measure of a single pair of pants");
    add_probe(gap);
    CLI::App* gs = app.add_subcommand("gs", "evaluate G and S at complex arguments");
    gs->add_option("--x", x_text)->required();
    gs->add_option("--y", y_text)->required();
    gs->add_option("--z", z_text)->required();
    add_common(gs);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        throw help_requested{app.help()};
    } catch (const CLI::CallForAllHelp&) {
        throw help_requested{app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::ParseError& e) {
        throw usage_error(e.what());
    }

    RunConfig cfg;
    cfg.format = (format_text == "csv") ? Format::csv : Format::json;
    cfg.output_path = output_path;

    if (app.got_subcommand(gs)) {
        cfg.command = Command::gs;
        cfg.gs_x = parse_complex(x_text, "--x");
        cfg.gs_y = parse_complex(y_text, "--y");
        cfg.gs_z = parse_complex(z_text, "--z");
        return cfg;
    }
    if (app.got_subcommand(pants) || app.got_subcommand(gap)) {
        cfg.command = app.got_subcommand(pants) ? Command::pants : Command::gap;
        cfg.boundary = parse_boundary(boundary_text, degrees);
        cfg.end_a = parse_end(end_a_text, degrees);
        cfg.end_b = parse_end(end_b_text, degrees);
        return cfg;
    }

    cfg.command = app.got_subcommand(verify)  ? Command::verify
                  : app.got_subcommand(weier) ? Command::weierstrass
                                              : Command::combined;
    cfg.boundary = parse_boundary(boundary_text, degrees);
    const auto given = [](const std::vector<CLI::Option*>& opts) {
        return std::any_of(opts.begin(), opts.end(),
                           [](const CLI::Option* o) { return o->count() > 0; });
    };
    if (given(cutoff_opts)) {
        if (!(cutoff > 0.0)) throw usage_error("--cutoff: must be positive");
        cfg.cutoff = cutoff;
    } else {
        cfg.cutoff = (cfg.command == Command::verify) ? 25.0 : 30.0;
    }
    if (cfg.command == Command::weierstrass) cfg.class_filter = parse_class(class_text);
    if (given(seed_opts)) cfg.override_seed = parse_seed(seed_text);
    if (given(tolerance_opts)) {
        if (!(tolerance > 0.0)) throw usage_error("--tolerance: must be positive");
        cfg.tolerance = tolerance;
    }
    return cfg;
}

std::string render_json(const VerificationReport& rep) {
    nlohmann::ordered_json j;
    j["boundary_kind"] = kind_name(rep.boundary.kind);
    j["boundary_value"] = rep.boundary.magnitude;
    j["identity"] = identity_name(rep);
    j["cutoff"] = rep.cutoff;
    j["term_count"] = rep.term_count;
    j["partial_sum"] = rep.partial_sum;
    j["target"] = rep.target;
    j["residual"] = rep.residual;
    j["tail_estimate"] = rep.tail_estimate;
    j["monotone_ok"] = rep.monotone_ok;
    return j.dump(2) + "\n";
}

std::string render_csv(const VerificationReport& rep, const std::vector<GeodesicRecord>& records) {
    std::string out = "slope_p,slope_q,trace,length,term,cumulative_sum\n";
    double acc = 0.0;
    for (const auto& r : records) {
        if (rep.wclass && r.wclass != *rep.wclass) continue;
        const double term = rep.identity == IdentityKind::full
                                ? full_summand(rep.boundary, r.length)
                                : weierstrass_summand(rep.boundary, r.length);
        acc += term;
        out += std::to_string(r.slope.p);
        out += ',';
        out += std::to_string(r.slope.q);
        out += ',';
        out += format_double(r.trace);
        out += ',';
        out += format_double(r.length);
        out += ',';
        out += format_double(term);
        out += ',';
        out += format_double(acc);
        out += '\n';
    }
    return out;
}

int run(const RunConfig& cfg, std::ostream& out) {
    switch (cfg.command) {
    case Command::verify:
    case Command::weierstrass:
    case Command::combined:
        return run_verification(cfg, out);
    case Command::gap:
        return run_gap(cfg, out);
    case Command::pants:
        return run_pants(cfg, out);
    case Command::gs:
        return run_gs(cfg, out);
    }
    throw usage_error("unknown command");
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    try {
        if (const char* threads = std::getenv("MCSHANE_THREADS")) {
            int n = 0;
            std::string t(threads);
            auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), n);
            if (ec != std::errc() || p != t.data() + t.size() || n <= 0)
                throw usage_error("MCSHANE_THREADS: expected a positive integer");
#ifdef _OPENMP
            omp_set_num_threads(n);
#endif
        }
        std::vector<std::string> args;
        for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
        return run(parse_args(args), out);
    } catch (const help_requested& h) {
        out << h.text;
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace mcshane::cli
