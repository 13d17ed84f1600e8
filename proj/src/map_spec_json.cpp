#include "diskmap/map_spec_json.hpp"

#include <fstream>

#include "diskmap/errors.hpp"

namespace diskmap {

using nlohmann::json;

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::InvalidArgument, what); }

Complex complex_from(const json& j, const char* field)
{
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        malformed(std::string("'") + field + "' must be [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

json complex_to(Complex c) { return json::array({c.real(), c.imag()}); }

std::vector<Complex> complex_list(const json& params, const char* field)
{
    if (!params.contains(field) || !params.at(field).is_array()) {
        malformed(std::string("missing array '") + field + "'");
    }
    std::vector<Complex> out;
    for (const auto& e : params.at(field)) out.push_back(complex_from(e, field));
    return out;
}

json complex_list_to(std::span<const Complex> cs)
{
    json arr = json::array();
    for (const Complex c : cs) arr.push_back(complex_to(c));
    return arr;
}

double number(const json& params, const char* field, std::optional<double> fallback = std::nullopt)
{
    if (!params.contains(field)) {
        if (fallback) return *fallback;
        malformed(std::string("missing number '") + field + "'");
    }
    if (!params.at(field).is_number()) malformed(std::string("'") + field + "' must be a number");
    return params.at(field).get<double>();
}

} // namespace

PhiSpec phi_spec_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
        malformed("phi spec needs a string 'kind'");
    }
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "polynomial") return PhiPolynomial{complex_list(j, "coeffs")};
    if (kind == "blaschke") return PhiBlaschke{complex_list(j, "zeros"), number(j, "theta", 0.0)};
    if (kind == "unimodular") return PhiUnimodular{number(j, "theta", 0.0)};
    malformed("unknown phi kind '" + kind + "'");
}

json phi_spec_to_json(const PhiSpec& phi)
{
    return std::visit(overloaded{
                          [](const PhiPolynomial& p) {
                              return json{{"kind", "polynomial"}, {"coeffs", complex_list_to(p.coeffs)}};
                          },
                          [](const PhiBlaschke& b) {
                              return json{{"kind", "blaschke"}, {"zeros", complex_list_to(b.zeros)}, {"theta", b.theta}};
                          },
                          [](const PhiUnimodular& u) { return json{{"kind", "unimodular"}, {"theta", u.theta}}; },
                      },
                      phi);
}

MapSpec map_spec_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) {
        malformed("map spec needs a string 'type'");
    }
    const auto type = j.at("type").get<std::string>();
    const json params = j.value("params", json::object());
    if (!params.is_object()) malformed("'params' must be an object");

    auto build = [&]() -> MapSpec {
        if (type == "identity") return MapSpec::identity();
        if (type == "half_plane") return MapSpec::half_plane();
        if (type == "strip") return MapSpec::strip();
        if (type == "koebe") return MapSpec::koebe();
        if (type == "sector") return MapSpec::sector(number(params, "alpha"));
        if (type == "polygon") {
            if (!params.contains("n") || !params.at("n").is_number_integer()) malformed("'n' must be an integer");
            return MapSpec::polygon(params.at("n").get<int>());
        }
        if (type == "series") {
            return MapSpec::series(PowerSeries(complex_list(params, "coeffs"), number(params, "rmax", kDefaultSeriesRadius)));
        }
        if (type == "herglotz") {
            if (!params.contains("phi")) malformed("herglotz needs 'phi'");
            const double order = number(params, "order", static_cast<double>(kDefaultSeriesOrder));
            if (order < 3 || order != std::floor(order)) malformed("'order' must be an integer >= 3");
            return MapSpec::herglotz(phi_spec_from_json(params.at("phi")), static_cast<std::size_t>(order),
                                     number(params, "rmax", kDefaultSeriesRadius));
        }
        malformed("unknown map type '" + type + "'");
    };

    MapSpec map = build();
    if (params.contains("automorphism")) {
        const json& t = params.at("automorphism");
        if (!t.is_object() || !t.contains("a")) malformed("'automorphism' needs 'a'");
        map = map.with_automorphism({complex_from(t.at("a"), "a"), number(t, "theta", 0.0)});
    }
    if (params.contains("affine")) {
        const json& a = params.at("affine");
        if (!a.is_object()) malformed("'affine' must be an object");
        AffineMap affine;
        if (a.contains("scale")) affine.scale = complex_from(a.at("scale"), "scale");
        if (a.contains("offset")) affine.offset = complex_from(a.at("offset"), "offset");
        map = map.with_affine(affine);
    }
    return map;
}

json map_spec_to_json(const MapSpec& map)
{
    json out = std::visit(
        overloaded{
            [](const maps::Identity&) { return json{{"type", "identity"}, {"params", json::object()}}; },
            [](const maps::HalfPlane&) { return json{{"type", "half_plane"}, {"params", json::object()}}; },
            [](const maps::Strip&) { return json{{"type", "strip"}, {"params", json::object()}}; },
            [](const maps::Koebe&) { return json{{"type", "koebe"}, {"params", json::object()}}; },
            [](const maps::Sector& s) { return json{{"type", "sector"}, {"params", {{"alpha", s.alpha}}}}; },
            [](const maps::RegularPolygon& p) { return json{{"type", "polygon"}, {"params", {{"n", p.n}}}}; },
            [](const maps::Series& s) {
                return json{{"type", "series"},
                            {"params", {{"coeffs", complex_list_to(s.series.coeffs())}, {"rmax", s.series.rmax()}}}};
            },
            [](const maps::Herglotz& h) {
                return json{{"type", "herglotz"},
                            {"params",
                             {{"phi", phi_spec_to_json(h.phi)}, {"order", h.series.order()}, {"rmax", h.series.rmax()}}}};
            },
        },
        map.variant());
    if (const auto& t = map.automorphism()) {
        out["params"]["automorphism"] = {{"a", complex_to(t->a)}, {"theta", t->theta}};
    }
    if (const auto& a = map.affine()) {
        out["params"]["affine"] = {{"scale", complex_to(a->scale)}, {"offset", complex_to(a->offset)}};
    }
    return out;
}

MapSpec load_map_spec(const std::string& path)
{
    std::ifstream in(path);
    if (!in) malformed("cannot open map spec '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        malformed("map spec '" + path + "' is not valid JSON: " + e.what());
    }
    return map_spec_from_json(j);
}

} // namespace diskmap
