#pragma once

#include <vector>

#include "json.hpp"

#include "diskmap/critical.hpp"
#include "diskmap/grid.hpp"
#include "diskmap/map_zoo.hpp"

namespace diskmap {

inline constexpr double kEqualityTol = 1e-9;

enum class Verdict { Convex, NotConvex };

struct ConvexityReport {
    Verdict verdict = Verdict::Convex;
    double tolerance = 0.0;
    std::size_t points = 0;

    double slack1_min = 0.0;
    Complex slack1_argmin;
    double slack3_min = 0.0;
    Complex slack3_argmin;
    double km_max = 0.0;
    Complex km_argmax;
    double nehari_max = 0.0;
    Complex nehari_argmax;

    /// Grid points where |lhs1 - rhs3| <= kEqualityTol.
    std::vector<Complex> equality_locus;
    PhiClass phi_class;

    [[nodiscard]] bool equality_flag() const noexcept { return !equality_locus.empty(); }
};

/// Scans the grid and aggregates every inequality slack. Convex when the
/// classical slack stays above -tol everywhere, with tol from slack_tolerance.
[[nodiscard]] ConvexityReport convexity_report(const MapSpec& map, const GridSpec& grid);

/// Fields: verdict, slack1Min, slack3Min, kmMax, nehariMax, equalityLocus,
/// phiClass, argmins (plus map, tolerance, points).
[[nodiscard]] nlohmann::json report_to_json(const ConvexityReport& report);

} // namespace diskmap
