#include "diskmap/report.hpp"

#include <cmath>
#include <limits>

#include "diskmap/functionals.hpp"

namespace diskmap {

using nlohmann::json;

namespace {

json point(Complex z) { return json::array({z.real(), z.imag()}); }

} // namespace

ConvexityReport convexity_report(const MapSpec& map, const GridSpec& grid)
{
    ConvexityReport rep;
    rep.tolerance = slack_tolerance(map);
    rep.slack1_min = std::numeric_limits<double>::infinity();
    rep.slack3_min = std::numeric_limits<double>::infinity();
    rep.km_max = -std::numeric_limits<double>::infinity();
    rep.nehari_max = -std::numeric_limits<double>::infinity();

    for (const Complex z : grid.points()) {
        const Diagnostics d = diagnostics(jet_of(map, z));
        ++rep.points;
        if (d.slack1() < rep.slack1_min) {
            rep.slack1_min = d.slack1();
            rep.slack1_argmin = z;
        }
        if (d.slack3() < rep.slack3_min) {
            rep.slack3_min = d.slack3();
            rep.slack3_argmin = z;
        }
        if (d.km > rep.km_max) {
            rep.km_max = d.km;
            rep.km_argmax = z;
        }
        if (d.nehari > rep.nehari_max) {
            rep.nehari_max = d.nehari;
            rep.nehari_argmax = z;
        }
        if (std::abs(d.slack3()) <= kEqualityTol) rep.equality_locus.push_back(z);
    }
    rep.verdict = rep.slack1_min >= -rep.tolerance ? Verdict::Convex : Verdict::NotConvex;
    rep.phi_class = classify_phi(map);
    return rep;
}

json report_to_json(const ConvexityReport& r)
{
    json locus = json::array();
    for (const Complex z : r.equality_locus) locus.push_back(point(z));

    json phi = {{"kind", std::string(to_string(r.phi_class.kind))}, {"fitError", r.phi_class.fit_error}};
    if (r.phi_class.kind == PhiKind::Automorphism) {
        phi["a"] = point(r.phi_class.a);
        phi["theta"] = r.phi_class.theta;
    } else if (r.phi_class.kind == PhiKind::UnimodularConstant) {
        phi["theta"] = r.phi_class.theta;
    }

    return {
        {"verdict", r.verdict == Verdict::Convex ? "Convex" : "NotConvex"},
        {"tolerance", r.tolerance},
        {"points", r.points},
        {"slack1Min", r.slack1_min},
        {"slack3Min", r.slack3_min},
        {"kmMax", r.km_max},
        {"nehariMax", r.nehari_max},
        {"equalityLocus", {{"flag", r.equality_flag()}, {"count", r.equality_locus.size()}, {"points", locus}}},
        {"phiClass", phi},
        {"argmins",
         {{"slack1", point(r.slack1_argmin)},
          {"slack3", point(r.slack3_argmin)},
          {"km", point(r.km_argmax)},
          {"nehari", point(r.nehari_argmax)}}},
    };
}

} // namespace diskmap
