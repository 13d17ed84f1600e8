#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "diskmap/errors.hpp"
#include "diskmap/export.hpp"
#include "diskmap/functionals.hpp"
#include "diskmap/map_spec_json.hpp"
#include "diskmap/report.hpp"

using namespace diskmap;
using nlohmann::json;

namespace {

ErrorKind parse_error(const json& j)
{
    try {
        (void)map_spec_from_json(j);
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("spec was accepted: " << j.dump());
    return ErrorKind::InvalidArgument;
}

std::vector<std::string> lines(const std::string& s)
{
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

std::size_t count_fields(const std::string& line) { return static_cast<std::size_t>(std::count(line.begin(), line.end(), ',')) + 1; }

} // namespace

TEST_CASE("map specs parse")
{
    CHECK(map_spec_from_json(json::parse(R"({"type": "koebe"})")).name() == "koebe");
    CHECK(map_spec_from_json(json::parse(R"({"type": "sector", "params": {"alpha": 0.5}})")).name() ==
          "sector(alpha=0.5)");

    const MapSpec poly = map_spec_from_json(json::parse(R"({"type": "polygon", "params": {"n": 6}})"));
    CHECK(std::get<maps::RegularPolygon>(poly.variant()).n == 6);

    const MapSpec series =
        map_spec_from_json(json::parse(R"({"type": "series", "params": {"coeffs": [[0, 0], [1, 0], [0.5, -0.5]], "rmax": 0.7}})"));
    CHECK(series.eval_radius() == doctest::Approx(0.7));
    CHECK(std::abs(jet_of(series, 0.5).f0 - Complex(0.625, -0.125)) <= 1e-15);

    const MapSpec h = map_spec_from_json(json::parse(
        R"({"type": "herglotz", "params": {"phi": {"kind": "polynomial", "coeffs": [[0, 0], [1, 0]]}, "order": 256, "rmax": 0.85}})"));
    CHECK(h.series_backed());
    CHECK(std::abs(jet_of(h, 0.3).f1 - 1.0 / (1.0 - 0.09)) <= 1e-12);

    const MapSpec composed = map_spec_from_json(json::parse(
        R"({"type": "strip", "params": {"automorphism": {"a": [0.1, 0.2], "theta": 0.5}, "affine": {"scale": [2, 0], "offset": [0, 1]}}})"));
    REQUIRE(composed.automorphism().has_value());
    CHECK(composed.automorphism()->a == Complex(0.1, 0.2));
    REQUIRE(composed.affine().has_value());
    CHECK(composed.affine()->offset == Complex(0.0, 1.0));
}

TEST_CASE("map specs round trip through JSON")
{
    const std::vector<MapSpec> maps{
        MapSpec::identity(),
        MapSpec::half_plane(),
        MapSpec::sector(0.3),
        MapSpec::polygon(4).with_automorphism({{0.2, 0.1}, 1.0}),
        MapSpec::koebe().with_affine({{0.0, 1.0}, {2.0, 0.0}}),
        MapSpec::herglotz(PhiBlaschke{{{0.5, 0.1}}, 0.2}, 128, 0.8),
        MapSpec::herglotz(PhiUnimodular{0.4}, 64, 0.8),
    };
    for (const MapSpec& m : maps) {
        INFO(m.name());
        const json j = map_spec_to_json(m);
        const MapSpec back = map_spec_from_json(json::parse(j.dump()));
        CHECK(back.name() == m.name());
        for (const Complex z : {Complex(0.1, 0.2), Complex(-0.5, 0.3)}) {
            const Jet a = jet_of(m, z);
            const Jet b = jet_of(back, z);
            CHECK(std::abs(a.f0 - b.f0) <= 1e-14 * std::max(1.0, std::abs(a.f0)));
            CHECK(std::abs(a.f3 - b.f3) <= 1e-12 * std::max(1.0, std::abs(a.f3)));
        }
    }
    const PhiSpec phi = PhiPolynomial{{0.1, {0.0, 0.2}}};
    CHECK(std::get<PhiPolynomial>(phi_spec_from_json(phi_spec_to_json(phi))).coeffs ==
          std::get<PhiPolynomial>(phi).coeffs);
}

TEST_CASE("malformed map specs are rejected")
{
    CHECK(parse_error(json::parse(R"({"params": {}})")) == ErrorKind::InvalidArgument);
    CHECK(parse_error(json::parse(R"({"type": "disk"})")) == ErrorKind::InvalidArgument);
    CHECK(parse_error(json::parse(R"({"type": "sector"})")) == ErrorKind::InvalidArgument);
    CHECK(parse_error(json::parse(R"({"type": "sector", "params": {"alpha": "wide"}})")) == ErrorKind::InvalidArgument);
    CHECK(parse_error(json::parse(R"({"type": "sector", "params": {"alpha": 2}})")) == ErrorKind::InvalidArgument);
    CHECK(parse_error(json::parse(R"({"type": "polygon", "params": {"n": 2}})")) == ErrorKind::InvalidArgument);
    CHECK(parse_error(json::parse(R"({"type": "series", "params": {"coeffs": [[0, 0], [1]], "rmax": 0.5}})")) ==
          ErrorKind::InvalidArgument);
    CHECK(parse_error(json::parse(R"({"type": "series", "params": {"coeffs": [[0, 0], [1, 0]], "rmax": 1.0}})")) ==
          ErrorKind::InvalidArgument);
    CHECK(parse_error(json::parse(R"({"type": "herglotz", "params": {"phi": {"kind": "rational"}}})")) ==
          ErrorKind::InvalidArgument);
    CHECK(parse_error(json::parse(R"([1, 2, 3])")) == ErrorKind::InvalidArgument);
}

TEST_CASE("out-of-range phi in a spec")
{
    const json j = json::parse(
        R"({"type": "herglotz", "params": {"phi": {"kind": "polynomial", "coeffs": [[0, 0], [1.2, 0]]}, "order": 64, "rmax": 0.9}})");
    CHECK(parse_error(j) == ErrorKind::PhiOutOfRange);
}

TEST_CASE("load_map_spec")
{
    const auto dir = std::filesystem::temp_directory_path() / "diskmap_test_io";
    std::filesystem::create_directories(dir);
    const auto good = dir / "good.json";
    const auto bad = dir / "bad.json";
    std::ofstream(good) << R"({"type": "polygon", "params": {"n": 5}})";
    std::ofstream(bad) << R"({"type": "polygon", "params": )";
    CHECK(load_map_spec(good.string()).name() == MapSpec::polygon(5).name());
    CHECK_THROWS_AS((void)load_map_spec(bad.string()), Error);
    CHECK_THROWS_AS((void)load_map_spec((dir / "missing.json").string()), Error);
    std::filesystem::remove_all(dir);
}

TEST_CASE("level curve CSV")
{
    const MapSpec id = MapSpec::identity();
    const LevelCurve curve = trace_level_set(id, find_level_start(id, 0.75, 0.0), 0.05, 1000);
    std::ostringstream out;
    write_level_curve_csv(out, curve);
    const auto rows = lines(out.str());
    REQUIRE(rows.size() == curve.points.size() + 1);
    CHECK(rows.front() == kLevelCurveCsvHeader);
    CHECK(std::string(kLevelCurveCsvHeader) == "s,Re z,Im z,Re w,Im w,|p|,k,kappa,residual");
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(count_fields(rows[i]) == 9);
    std::istringstream first(rows[1]);
    std::string field;
    std::vector<double> values;
    while (std::getline(first, field, ',')) values.push_back(std::stod(field));
    CHECK(values[0] == 0.0);
    CHECK(values[1] == doctest::Approx(0.5));
    CHECK(values[5] == doctest::Approx(0.5));
    CHECK(values[6] == doctest::Approx(2.0));
}

TEST_CASE("curvature map CSV leaves kappa empty near critical points")
{
    const GridSpec grid{3, 4, 0.6};
    const auto rows = curvature_map(MapSpec::strip(), grid);
    REQUIRE(rows.size() == 12);
    std::size_t empty = 0;
    for (const auto& r : rows) {
        if (!r.kappa_proxy) {
            ++empty;
            CHECK(r.z.imag() == doctest::Approx(0.0));
        }
    }
    // p vanishes on the real diameter for the strip map
    CHECK(empty == 6);
    std::ostringstream out;
    write_curvature_map_csv(out, rows);
    const auto text = lines(out.str());
    REQUIRE(text.size() == 13);
    CHECK(text.front() == kCurvatureMapCsvHeader);
    for (std::size_t i = 1; i < text.size(); ++i) CHECK(count_fields(text[i]) == 6);
}

TEST_CASE("SVG output has two panels")
{
    const MapSpec m = MapSpec::polygon(5);
    const LevelCurve curve = trace_level_set(m, find_level_start(m, 0.8, 0.0), 0.02, 1000);
    std::ostringstream out;
    write_level_curve_svg(out, curve, "polygon");
    const std::string svg = out.str();
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    std::size_t paths = 0;
    for (std::size_t pos = 0; (pos = svg.find("<polygon ", pos)) != std::string::npos; ++pos) ++paths;
    CHECK(paths >= 2);
}

TEST_CASE("convexity report")
{
    const GridSpec grid{40, 40, 0.9};
    SUBCASE("pentagon regression")
    {
        const ConvexityReport r = convexity_report(MapSpec::polygon(5), grid);
        CHECK(r.verdict == Verdict::Convex);
        CHECK(r.points == 1600);
        CHECK(r.tolerance == kClosedFormTol);
        CHECK(r.slack3_min == doctest::Approx(0.00612446).epsilon(1e-5));
        CHECK(std::abs(r.slack3_argmin - Complex(0.728115, 0.529007)) <= 1e-5);
        CHECK(r.km_max <= 2.0);
        const json j = report_to_json(r);
        for (const char* key : {"verdict", "slack1Min", "slack3Min", "kmMax", "nehariMax", "equalityLocus", "phiClass",
                                "argmins", "tolerance", "points"})
            CHECK(j.contains(key));
        CHECK(j["verdict"] == "Convex");
        CHECK(j["phiClass"]["kind"] == "Strict");
        CHECK(j["equalityLocus"]["flag"] == false);
    }
    SUBCASE("Koebe is not convex")
    {
        const ConvexityReport r = convexity_report(MapSpec::koebe(), grid);
        CHECK(r.verdict == Verdict::NotConvex);
        CHECK(r.slack1_min < 0.0);
        CHECK(r.slack1_argmin.real() < 0.0);
        CHECK(report_to_json(r)["verdict"] == "NotConvex");
    }
    SUBCASE("sector reports the automorphism parameters")
    {
        const json j = report_to_json(convexity_report(MapSpec::sector(0.5), grid));
        CHECK(j["phiClass"]["kind"] == "Automorphism");
        CHECK(j["phiClass"]["a"][0].get<double>() == doctest::Approx(0.5));
        CHECK(j["equalityLocus"]["count"] == 1600);
    }
}
