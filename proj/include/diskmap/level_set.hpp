#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "diskmap/jet.hpp"
#include "diskmap/map_zoo.hpp"

namespace diskmap {

/// The tracer refuses to continue once |p| drops to this floor.
inline constexpr double kNormalFloor = 1e-4;
inline constexpr double kTraceResidualTol = 1e-10;
inline constexpr double kStartResidualTol = 1e-12;
/// Default outer radius for curves of closed-form maps.
inline constexpr double kClosedFormTraceRadius = 0.98;

/// (1 - |z|^2) |f'(z)|, the quantity whose level sets are traced.
[[nodiscard]] double level_value(const Jet& j);

/// Euclidean curvature of the level set through j.z (positive when the
/// curve turns toward -conj(p), i.e. the level set is convex). Throws
/// NormalVanished when p = 0.
[[nodiscard]] double disk_curvature(const Jet& j);

/// Curvature of the image curve f(level set), with the same orientation.
[[nodiscard]] double image_curvature(const Jet& j);

/// Unit tangent z' = -i conj(p)/|p|; the normal -conj(p)/|p| lies on its right.
[[nodiscard]] Complex level_tangent(const Jet& j);

/// Re{z' f''/f'} - 2 Re{conj(z) z'} / (1 - |z|^2) with z' = level_tangent(j):
/// the once-differentiated level condition, zero along every level set.
[[nodiscard]] double tangency_defect(const Jet& j);

struct LevelPoint {
    double s = 0.0;  // cumulative chord length from the first point
    Complex z;
    Complex w;       // f(z)
    Complex p;
    double k = 0.0;
    double kappa = 0.0;
    double residual = 0.0;
};

enum class TraceStop {
    Closed,
    MaxPoints,
    LeftDomain,
    NormalVanished,
    StepCollapsed,
};

[[nodiscard]] std::string_view to_string(TraceStop stop) noexcept;

struct LevelCurve {
    double c = 0.0;
    std::vector<LevelPoint> points;
    bool closed = false;
    TraceStop forward_stop = TraceStop::MaxPoints;
    // Only set for open curves, which are also traced backward from z0.
    std::optional<TraceStop> backward_stop;

    [[nodiscard]] bool stopped_on_normal() const noexcept
    {
        return forward_stop == TraceStop::NormalVanished || backward_stop == TraceStop::NormalVanished;
    }
};

struct TraceOptions {
    /// Level constant; by default the value at z0.
    std::optional<double> level;
    /// Outer radius; by default min(map.eval_radius(), kClosedFormTraceRadius).
    std::optional<double> radius;
    double p_min = kNormalFloor;
};

/// Point on arg z = theta where (1 - |z|^2)|f'| = c, found by scanning the
/// ray outward for the first crossing and bisecting. Throws LevelNotOnRay.
[[nodiscard]] Complex find_level_start(const MapSpec& map, double c, double theta,
                                       std::optional<double> radius = std::nullopt);

/// Predictor-corrector tracing of the level set through z0.
///
/// Predictor: an arclength `step` along the tangent. Corrector: Newton on
/// g(z) = (1 - |z|^2)|f'| - c along the normal, at most 8 iterations, with
/// step halving on failure. Closed curves end when the trace comes back within
/// step/2 of z0; open curves are traced in both directions and concatenated
/// in the forward orientation.
///
/// Throws NormalVanished if |p(z0)| <= p_min, LevelNotOnRay if z0 is not on
/// the requested level, RadiusExceeded if z0 lies outside the trace radius.
[[nodiscard]] LevelCurve trace_level_set(const MapSpec& map, Complex z0, double step, std::size_t max_points,
                                         const TraceOptions& options = {});

struct DiscreteCurvature {
    std::size_t index;  // middle point of the triple
    double curvature;
};

/// Signed circumcircle curvature of consecutive triples (z or w coordinates),
/// with right turns positive to match disk_curvature/image_curvature.
/// Closed curves wrap around; open curves skip the two ends.
[[nodiscard]] std::vector<DiscreteCurvature> discrete_curvature(const LevelCurve& curve, bool image_plane);

/// Signed curvature of the circle through a, b, c (right turn positive).
[[nodiscard]] double circumcircle_curvature(Complex a, Complex b, Complex c);

} // namespace diskmap
