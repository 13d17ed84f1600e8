#pragma once

#include <string_view>
#include <vector>

#include "diskmap/grid.hpp"
#include "diskmap/jet.hpp"
#include "diskmap/map_zoo.hpp"

namespace diskmap {

inline constexpr double kCriticalTol = 1e-10;
inline constexpr double kCriticalJacobianStep = 1e-6;
inline constexpr std::size_t kDegenerateZeroCount = 5;
inline constexpr double kZeroSeparation = 1e-3;
inline constexpr double kPhiClassTol = 1e-8;

enum class CriticalKind { None, Unique, DegenerateLocus };

[[nodiscard]] std::string_view to_string(CriticalKind kind) noexcept;

struct CriticalResult {
    CriticalKind kind = CriticalKind::None;
    Complex z;                 // Unique only
    double lambda_min = 0.0;   // Unique only
    std::vector<Complex> locus; // DegenerateLocus: the distinct zeros found
    double residual_floor = 0.0; // min |p| over the search grid
};

/// Zeros of p, i.e. critical points of the Poincare density.
///
/// Newton on (Re p, Im p) with a central-difference Jacobian (p involves
/// conj(z), so it has no complex derivative), seeded from the grid points with
/// the smallest |p|. Five or more converged zeros pairwise 1e-3 apart make a
/// DegenerateLocus; otherwise one converged zero is reported as Unique and no
/// converged zero gives None.
[[nodiscard]] CriticalResult find_critical_point(const MapSpec& map, const GridSpec& grid);

enum class PhiKind { UnimodularConstant, Automorphism, Strict };

[[nodiscard]] std::string_view to_string(PhiKind kind) noexcept;

struct PhiClass {
    PhiKind kind = PhiKind::Strict;
    Complex a;         // Automorphism: phi = e^{i theta} (z + a) / (1 + conj(a) z)
    double theta = 0.0; // Automorphism, and the constant's argument for UnimodularConstant
    double fit_error = 0.0;
};

/// Least-squares fit of phi = e^{i theta}(z + a)/(1 + conj(a) z) on a sample grid.
[[nodiscard]] PhiClass classify_phi(const MapSpec& map);

} // namespace diskmap
