#pragma once

#include <optional>
#include <variant>

#include "diskmap/jet.hpp"
#include "diskmap/map_zoo.hpp"

namespace diskmap {

// Pass condition for every slack (lhs - rhs >= -tol).
inline constexpr double kClosedFormTol = 1e-9;
inline constexpr double kSeriesTol = 1e-7;
// |phi| at or above 1 - kUnimodularTol is treated as the |phi| == 1 branch.
inline constexpr double kUnimodularTol = 1e-10;

/// f''/f'
[[nodiscard]] Complex pre_schwarzian(const Jet& j);

/// Sf = f'''/f' - (3/2) (f''/f')^2
[[nodiscard]] Complex schwarzian(const Jet& j);

/// Re{1 + z f''/f'}; nonnegative throughout the disk iff f is convex.
[[nodiscard]] double classical_lhs(const Jet& j);

/// (1/4)(1 - |z|^2) |f''/f'|^2
[[nodiscard]] double rhs2(const Jet& j);

/// (1/4)(1 - |z|^2) (2|Sf| + |f''/f'|^2). Never below rhs2.
[[nodiscard]] double rhs3(const Jet& j);

/// p = conj(z) - (1/2)(1 - |z|^2) f''/f'. Its conjugate is the gradient
/// direction of log((1 - |z|^2)|f'|) up to a negative factor, so p vanishes
/// exactly at critical points of the Poincare density.
[[nodiscard]] Complex p_field(const Jet& j);

/// (1 - |z|^2)^2 |Sf| + 2|p|^2; bounded by 2 for convex maps.
[[nodiscard]] double kim_minda(const Jet& j);

/// (1 - |z|^2)^2 |Sf|
[[nodiscard]] double nehari_value(const Jet& j);

/// lambda(f(z)) = 1 / ((1 - |z|^2) |f'(z)|)
[[nodiscard]] double poincare_density(const Jet& j);

/// |(2 - kim_minda) - 2(1 - |z|^2)(classical_lhs - rhs3)|, zero by algebra.
[[nodiscard]] double equivalence_identity(const Jet& j);

struct UnimodularFlag {
    friend bool operator==(UnimodularFlag, UnimodularFlag) = default;
};

using SchwarzPickSlack = std::variant<double, UnimodularFlag>;

/// 1/(1 - |z|^2) - |phi'|/(1 - |phi|^2), or UnimodularFlag when |phi| is
/// within kUnimodularTol of 1 and the quotient degenerates.
[[nodiscard]] SchwarzPickSlack schwarz_pick_slack(const Jet& j);
[[nodiscard]] SchwarzPickSlack schwarz_pick_slack(const MapSpec& map, Complex z);

/// All pointwise quantities at once.
struct Diagnostics {
    Complex pre;       // f''/f'
    Complex schwarz;   // Sf
    Complex p;
    double lhs1 = 0.0;
    double rhs2 = 0.0;
    double rhs3 = 0.0;
    double km = 0.0;
    double nehari = 0.0;
    double lambda = 0.0;
    // Empty when phi itself is undefined (2 + z f''/f' = 0, non-convex maps).
    std::optional<SchwarzPickSlack> sp_slack;

    [[nodiscard]] double slack1() const noexcept { return lhs1; }
    [[nodiscard]] double slack2() const noexcept { return lhs1 - rhs2; }
    [[nodiscard]] double slack3() const noexcept { return lhs1 - rhs3; }
};

[[nodiscard]] Diagnostics diagnostics(const Jet& j);

/// Tolerance for slack checks on this map (looser for truncated series).
[[nodiscard]] double slack_tolerance(const MapSpec& map) noexcept;

} // namespace diskmap
