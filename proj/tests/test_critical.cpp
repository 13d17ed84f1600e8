#include <cmath>
#include <numbers>

#include "doctest.h"

#include "diskmap/critical.hpp"
#include "diskmap/functionals.hpp"
#include "diskmap/report.hpp"

using namespace diskmap;

TEST_CASE("critical point of the Poincare density")
{
    const GridSpec grid{40, 40, 0.9};

    SUBCASE("identity and regular polygons: unique zero at the origin")
    {
        for (const MapSpec& m : {MapSpec::identity(), MapSpec::polygon(5), MapSpec::polygon(3)}) {
            INFO(m.name());
            const CriticalResult r = find_critical_point(m, grid);
            CHECK(r.kind == CriticalKind::Unique);
            CHECK(std::abs(r.z) <= 1e-8);
            CHECK(r.lambda_min == doctest::Approx(1.0));
            CHECK(r.locus.empty());
        }
    }
    SUBCASE("a disk automorphism moves the zero to its preimage")
    {
        const DiskAutomorphism t{{0.3, 0.2}, 0.0};
        const CriticalResult r = find_critical_point(MapSpec::polygon(5).with_automorphism(t), grid);
        CHECK(r.kind == CriticalKind::Unique);
        CHECK(std::abs(r.z + t.a) <= 1e-8);
    }
    SUBCASE("strip: p vanishes on a whole segment")
    {
        const CriticalResult r = find_critical_point(MapSpec::strip(), grid);
        CHECK(r.kind == CriticalKind::DegenerateLocus);
        CHECK(r.locus.size() >= kDegenerateZeroCount);
        for (const Complex z : r.locus) CHECK(std::abs(p_field(jet_of(MapSpec::strip(), z))) <= kCriticalTol);
    }
    SUBCASE("sector and half-plane: no zero")
    {
        const CriticalResult sector = find_critical_point(MapSpec::sector(0.5), grid);
        CHECK(sector.kind == CriticalKind::None);
        CHECK(sector.residual_floor >= 0.1);
        CHECK(find_critical_point(MapSpec::half_plane(), grid).kind == CriticalKind::None);
    }
}

TEST_CASE("classify_phi")
{
    SUBCASE("half-plane: unimodular constant")
    {
        const PhiClass c = classify_phi(MapSpec::half_plane());
        CHECK(c.kind == PhiKind::UnimodularConstant);
        CHECK(c.theta == doctest::Approx(0.0));
    }
    SUBCASE("rotated half-plane from a unimodular phi")
    {
        const PhiClass c = classify_phi(gen_herglotz(PhiUnimodular{1.2}));
        CHECK(c.kind == PhiKind::UnimodularConstant);
        CHECK(c.theta == doctest::Approx(1.2));
    }
    SUBCASE("strip: phi = z")
    {
        const PhiClass c = classify_phi(MapSpec::strip());
        CHECK(c.kind == PhiKind::Automorphism);
        CHECK(std::abs(c.a) <= 1e-8);
        CHECK(c.theta == doctest::Approx(0.0));
    }
    SUBCASE("sector: phi = (z + alpha)/(1 + alpha z)")
    {
        for (const double alpha : {0.2, 0.5, 0.9}) {
            const PhiClass c = classify_phi(MapSpec::sector(alpha));
            CHECK(c.kind == PhiKind::Automorphism);
            CHECK(std::abs(c.a - alpha) <= 1e-8);
            CHECK(c.fit_error <= kPhiClassTol);
        }
    }
    SUBCASE("Blaschke factor with a rotation")
    {
        // e^{i t} (z - b)/(1 - conj(b) z) is the automorphism with a = -b
        const Complex b{0.3, -0.4};
        const PhiClass c = classify_phi(gen_herglotz(PhiBlaschke{{b}, 0.7}));
        CHECK(c.kind == PhiKind::Automorphism);
        CHECK(std::abs(c.a + b) <= 1e-7);
        CHECK(c.theta == doctest::Approx(0.7).epsilon(1e-7));
    }
    SUBCASE("strict cases")
    {
        CHECK(classify_phi(MapSpec::identity()).kind == PhiKind::Strict);
        CHECK(classify_phi(MapSpec::polygon(5)).kind == PhiKind::Strict);
        CHECK(classify_phi(gen_herglotz(PhiPolynomial{{0.0, 0.5}})).kind == PhiKind::Strict);
        CHECK(classify_phi(gen_herglotz(PhiBlaschke{{0.2, -0.3}, 0.0})).kind == PhiKind::Strict);
    }
}

TEST_CASE("equality locus in the convexity report")
{
    const GridSpec grid{20, 20, 0.8};
    const ConvexityReport strip = convexity_report(MapSpec::strip(), grid);
    CHECK(strip.verdict == Verdict::Convex);
    CHECK(strip.equality_locus.size() == 400);
    CHECK(strip.phi_class.kind == PhiKind::Automorphism);

    const ConvexityReport polygon = convexity_report(MapSpec::polygon(5), grid);
    CHECK(polygon.verdict == Verdict::Convex);
    CHECK_FALSE(polygon.equality_flag());
    CHECK(polygon.phi_class.kind == PhiKind::Strict);

    const ConvexityReport herglotz = convexity_report(gen_herglotz(PhiPolynomial{{0.0, 1.0}}), grid);
    CHECK(herglotz.equality_locus.size() == 400);
}
