// diskmap: convexity checks, level-set tracing and Herglotz generation for
// conformal maps of the unit disk.
//
// Exit codes: 0 ok / Convex, 1 malformed input, 2 evaluation error,
// 3 NotConvex, 4 level not on ray, 5 phi out of range.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "diskmap/errors.hpp"
#include "diskmap/export.hpp"
#include "diskmap/level_set.hpp"
#include "diskmap/map_spec_json.hpp"
#include "diskmap/map_zoo.hpp"
#include "diskmap/report.hpp"

namespace {

using namespace diskmap;

enum ExitCode : int {
    kOk = 0,
    kMalformed = 1,
    kEvaluation = 2,
    kNotConvex = 3,
    kLevelNotOnRay = 4,
    kPhiOutOfRange = 5,
};

struct MapOptions {
    std::string name;
    std::string file;
    double alpha = 0.5;
    int n = 5;
    std::string automorphism; // "re:im[,theta]"
};

struct GridOptions {
    std::size_t radial = 40;
    std::size_t angular = 40;
    double rmax = 0.0; // 0: min(0.9, evaluation radius)
};

void add_map_options(CLI::App* cmd, MapOptions& m)
{
    cmd->add_option("--map", m.name, "identity|half-plane|strip|sector|polygon|koebe");
    cmd->add_option("--map-file", m.file, "JSON map spec");
    cmd->add_option("--alpha", m.alpha, "sector opening, 0 < alpha <= 1");
    cmd->add_option("--n", m.n, "polygon sides, n >= 3");
    cmd->add_option("--automorphism", m.automorphism, "pre-compose with e^{i t}(z+a)/(1+conj(a)z): 're:im[,t]'");
}

void add_grid_options(CLI::App* cmd, GridOptions& g)
{
    cmd->add_option("--nr", g.radial, "radial grid count");
    cmd->add_option("--nt", g.angular, "angular grid count");
    cmd->add_option("--rmax", g.rmax, "grid radius (< 1)");
}

Complex parse_complex(const std::string& token)
{
    const auto colon = token.find(':');
    try {
        std::size_t used = 0;
        if (colon == std::string::npos) {
            const double re = std::stod(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            return {re, 0.0};
        }
        const std::string a = token.substr(0, colon), b = token.substr(colon + 1);
        std::size_t ua = 0, ub = 0;
        const double re = std::stod(a, &ua), im = std::stod(b, &ub);
        if (ua != a.size() || ub != b.size()) throw std::invalid_argument(token);
        return {re, im};
    } catch (const std::logic_error&) {
        throw Error(ErrorKind::InvalidArgument, "cannot parse complex number '" + token + "' (use re or re:im)");
    }
}

std::vector<Complex> parse_complex_list(const std::string& text)
{
    std::vector<Complex> out;
    std::stringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (!tok.empty()) out.push_back(parse_complex(tok));
    }
    return out;
}

MapSpec build_map(const MapOptions& m)
{
    if (m.name.empty() == m.file.empty()) {
        throw Error(ErrorKind::InvalidArgument, "give exactly one of --map or --map-file");
    }
    MapSpec map = [&] {
        if (!m.file.empty()) return load_map_spec(m.file);
        if (m.name == "identity") return MapSpec::identity();
        if (m.name == "half-plane" || m.name == "half_plane" || m.name == "halfplane") return MapSpec::half_plane();
        if (m.name == "strip") return MapSpec::strip();
        if (m.name == "sector") return MapSpec::sector(m.alpha);
        if (m.name == "polygon") return MapSpec::polygon(m.n);
        if (m.name == "koebe") return MapSpec::koebe();
        throw Error(ErrorKind::InvalidArgument, "unknown map '" + m.name + "'");
    }();
    if (!m.automorphism.empty()) {
        const auto comma = m.automorphism.find(',');
        const Complex a = parse_complex(m.automorphism.substr(0, comma));
        double theta = 0.0;
        if (comma != std::string::npos) theta = parse_complex(m.automorphism.substr(comma + 1)).real();
        map = map.with_automorphism({a, theta});
    }
    if (map.series_backed()) {
        const auto& v = map.variant();
        const PowerSeries& s = std::holds_alternative<maps::Series>(v) ? std::get<maps::Series>(v).series
                                                                       : std::get<maps::Herglotz>(v).series;
        if (s.tail_warning()) {
            std::cerr << "warning: series tail bound |c_M| rmax^M = " << s.tail_bound() << " exceeds "
                      << kTailWarningThreshold << "\n";
        }
    }
    return map;
}

GridSpec build_grid(const GridOptions& g, const MapSpec& map)
{
    GridSpec grid{g.radial, g.angular, g.rmax > 0.0 ? g.rmax : std::min(0.9, map.eval_radius())};
    grid.validate();
    return grid;
}

// Output goes to a file when a path is given, stdout otherwise.
class Sink {
public:
    explicit Sink(const std::string& path)
    {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw Error(ErrorKind::InvalidArgument, "cannot open output '" + path + "'");
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

int cmd_check(const MapOptions& mo, const GridOptions& go, const std::string& out_path)
{
    const MapSpec map = build_map(mo);
    const GridSpec grid = build_grid(go, map);
    ConvexityReport report;
    try {
        report = convexity_report(map, grid);
    } catch (const Error& e) {
        std::cerr << "evaluation error: " << e.what() << "\n";
        return kEvaluation;
    }
    nlohmann::json j = report_to_json(report);
    j["map"] = map.name();
    j["grid"] = {{"nr", grid.radial}, {"nt", grid.angular}, {"rmax", grid.rmax}};
    Sink sink(out_path);
    sink.stream() << j.dump(2) << "\n";
    return report.verdict == Verdict::Convex ? kOk : kNotConvex;
}

nlohmann::json curve_to_json(const LevelCurve& curve, const std::string& name)
{
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : curve.points) {
        pts.push_back({{"s", p.s},
                       {"z", {p.z.real(), p.z.imag()}},
                       {"w", {p.w.real(), p.w.imag()}},
                       {"absP", std::abs(p.p)},
                       {"k", p.k},
                       {"kappa", p.kappa},
                       {"residual", p.residual}});
    }
    nlohmann::json j{{"map", name}, {"c", curve.c}, {"closed", curve.closed},
                     {"forwardStop", std::string(to_string(curve.forward_stop))}, {"points", pts}};
    if (curve.backward_stop) j["backwardStop"] = std::string(to_string(*curve.backward_stop));
    return j;
}

int cmd_trace(const MapOptions& mo, double c, double theta, double step, std::size_t max_points,
              const std::string& format, const std::string& out_path, const std::string& svg_path)
{
    const MapSpec map = build_map(mo);
    const Complex z0 = find_level_start(map, c, theta);
    const LevelCurve curve = trace_level_set(map, z0, step, max_points, TraceOptions{c, std::nullopt, kNormalFloor});
    if (curve.stopped_on_normal()) {
        std::cerr << "warning: trace stopped near a critical point of lambda (|p| <= " << kNormalFloor
                  << "); the curve is partial\n";
    }
    {
        Sink sink(out_path);
        if (format == "json") {
            sink.stream() << curve_to_json(curve, map.name()).dump(2) << "\n";
        } else if (format == "svg") {
            write_level_curve_svg(sink.stream(), curve, map.name());
        } else {
            write_level_curve_csv(sink.stream(), curve);
        }
    }
    if (!svg_path.empty()) {
        std::ofstream svg(svg_path);
        if (!svg) throw Error(ErrorKind::InvalidArgument, "cannot open '" + svg_path + "'");
        write_level_curve_svg(svg, curve, map.name());
    }
    return kOk;
}

int cmd_curvature_map(const MapOptions& mo, const GridOptions& go, const std::string& format,
                      const std::string& out_path)
{
    const MapSpec map = build_map(mo);
    const GridSpec grid = build_grid(go, map);
    const auto rows = curvature_map(map, grid);
    Sink sink(out_path);
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows) {
            nlohmann::json row{{"z", {r.z.real(), r.z.imag()}}, {"slack1", r.slack1}, {"slack3", r.slack3}, {"km", r.km}};
            row["kappaProxy"] = r.kappa_proxy ? nlohmann::json(*r.kappa_proxy) : nlohmann::json(nullptr);
            arr.push_back(row);
        }
        sink.stream() << arr.dump(2) << "\n";
    } else {
        write_curvature_map_csv(sink.stream(), rows);
    }
    return kOk;
}

struct GenOptions {
    std::string phi_const;
    double phi_theta = 0.0;
    bool phi_theta_set = false;
    std::string phi_poly;
    std::string phi_blaschke;
    double phi_rotation = 0.0;
    int random_degree = -1;
    double random_scale = 1.0;
    std::uint64_t seed = 1;
    std::size_t order = kDefaultSeriesOrder;
    double rmax = kDefaultSeriesRadius;
};

int cmd_gen(const GenOptions& g, const std::string& out_path)
{
    const int sources = !g.phi_const.empty() + g.phi_theta_set + !g.phi_poly.empty() + !g.phi_blaschke.empty() +
                        (g.random_degree >= 0);
    if (sources != 1) {
        throw Error(ErrorKind::InvalidArgument,
                    "give exactly one of --phi-const, --phi-theta, --phi-poly, --phi-blaschke, --random-degree");
    }
    PhiSpec phi;
    if (!g.phi_const.empty()) {
        phi = PhiPolynomial{{parse_complex(g.phi_const)}};
    } else if (g.phi_theta_set) {
        phi = PhiUnimodular{g.phi_theta};
    } else if (!g.phi_poly.empty()) {
        phi = PhiPolynomial{parse_complex_list(g.phi_poly)};
    } else if (!g.phi_blaschke.empty()) {
        phi = PhiBlaschke{parse_complex_list(g.phi_blaschke), g.phi_rotation};
    } else {
        std::mt19937_64 rng(g.seed);
        phi = random_polynomial_phi(rng, g.random_degree, g.random_scale);
    }
    const MapSpec map = gen_herglotz(phi, g.order, g.rmax);
    nlohmann::json j = map_spec_to_json(map);
    j["source"] = {{"phi", phi_spec_to_json(phi)}, {"order", g.order}};
    Sink sink(out_path);
    sink.stream() << j.dump(1) << "\n";
    return kOk;
}

int exit_code_for(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidArgument: return kMalformed;
    case ErrorKind::LevelNotOnRay: return kLevelNotOnRay;
    case ErrorKind::PhiOutOfRange: return kPhiOutOfRange;
    default: return kEvaluation;
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Convexity functionals and Poincare-metric level sets for conformal maps of the unit disk"};
    app.require_subcommand(1);

    MapOptions map_opts;
    GridOptions grid_opts;
    std::string out_path;
    std::string format = "csv";

    auto* check = app.add_subcommand("check", "grid convexity report (JSON); exit 0 Convex, 3 NotConvex");
    add_map_options(check, map_opts);
    add_grid_options(check, grid_opts);
    check->add_option("--out", out_path, "write the report here instead of stdout");

    double level = 0.0;
    double theta = 0.0;
    double step = 0.005;
    std::size_t max_points = 20000;
    std::string svg_path;
    auto* trace = app.add_subcommand("trace", "trace the level set (1-|z|^2)|f'| = c");
    add_map_options(trace, map_opts);
    trace->add_option("--c", level, "level constant")->required();
    trace->add_option("--theta", theta, "start on the ray arg z = theta");
    trace->add_option("--step", step, "arclength step");
    trace->add_option("--max-points", max_points, "point budget");
    trace->add_option("--format", format, "csv|json|svg")->check(CLI::IsMember({"csv", "json", "svg"}));
    trace->add_option("--out", out_path, "output path (stdout if omitted)");
    trace->add_option("--svg", svg_path, "also write an SVG figure here");

    auto* cmap = app.add_subcommand("curvature-map", "per-grid-point slack, Kim-Minda value and image curvature");
    add_map_options(cmap, map_opts);
    add_grid_options(cmap, grid_opts);
    cmap->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    cmap->add_option("--out", out_path, "output path (stdout if omitted)");

    GenOptions gen_opts;
    auto* gen = app.add_subcommand("gen", "generate a convex map from a Schwarz function phi (JSON map spec)");
    gen->add_option("--phi-const", gen_opts.phi_const, "constant phi, 're' or 're:im'");
    gen->add_option("--phi-theta", gen_opts.phi_theta, "unimodular constant phi = e^{i theta}")
        ->each([&](const std::string&) { gen_opts.phi_theta_set = true; });
    gen->add_option("--phi-poly", gen_opts.phi_poly, "polynomial coefficients c0,c1,... (each 're' or 're:im')");
    gen->add_option("--phi-blaschke", gen_opts.phi_blaschke, "Blaschke zeros a1,a2,...");
    gen->add_option("--phi-rotation", gen_opts.phi_rotation, "rotation angle for --phi-blaschke");
    gen->add_option("--random-degree", gen_opts.random_degree, "random polynomial phi of this degree");
    gen->add_option("--random-scale", gen_opts.random_scale, "boundary sup of the random phi, in (0, 1]");
    gen->add_option("--seed", gen_opts.seed, "random seed");
    gen->add_option("--order", gen_opts.order, "series truncation order");
    gen->add_option("--rmax", gen_opts.rmax, "certified evaluation radius");
    gen->add_option("--out", out_path, "output path (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kMalformed;
    }

    try {
        if (*check) return cmd_check(map_opts, grid_opts, out_path);
        if (*trace) return cmd_trace(map_opts, level, theta, step, max_points, format, out_path, svg_path);
        if (*cmap) return cmd_curvature_map(map_opts, grid_opts, format, out_path);
        if (*gen) return cmd_gen(gen_opts, out_path);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kEvaluation;
    }
    return kMalformed;
}
