#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "diskmap/jet.hpp"
#include "diskmap/power_series.hpp"

namespace diskmap {

/// Number of boundary samples used to certify sup |phi| <= 1 for polynomial phi.
inline constexpr std::size_t kPhiBoundarySamples = 4096;
inline constexpr double kPhiBoundarySlack = 1e-12;

// ---------------------------------------------------------------------------
// Schwarz functions phi: D -> closed disk
// ---------------------------------------------------------------------------

struct PhiPolynomial {
    std::vector<Complex> coeffs;
};

/// e^{i theta} prod_k (z - a_k) / (1 - conj(a_k) z)
struct PhiBlaschke {
    std::vector<Complex> zeros;
    double theta = 0.0;
};

/// phi == e^{i theta}
struct PhiUnimodular {
    double theta = 0.0;
};

using PhiSpec = std::variant<PhiPolynomial, PhiBlaschke, PhiUnimodular>;

/// Largest |phi| over kPhiBoundarySamples points of the unit circle.
[[nodiscard]] double phi_boundary_sup(const PhiSpec& phi);

/// Throws PhiOutOfRange unless phi maps the disk into its closure.
void validate_phi(const PhiSpec& phi);

[[nodiscard]] Complex eval_phi(const PhiSpec& phi, Complex z);

/// Taylor coefficients of phi at the given order.
[[nodiscard]] PowerSeries phi_series(const PhiSpec& phi, std::size_t order, double rmax);

/// Random polynomial phi of the given degree, rescaled so that its boundary
/// sup equals `scale` (0 < scale <= 1).
[[nodiscard]] PhiPolynomial random_polynomial_phi(std::mt19937_64& rng, int degree, double scale = 1.0);

// ---------------------------------------------------------------------------
// Disk maps
// ---------------------------------------------------------------------------

namespace maps {

struct Identity {};
/// z / (1 - z), onto Re w > -1/2.
struct HalfPlane {};
/// (1/2) log((1 + z) / (1 - z)), onto |Im w| < pi/4.
struct Strip {};
/// ((1 + z) / (1 - z))^alpha, onto a sector of opening alpha pi.
struct Sector {
    double alpha = 1.0;
};
/// f(0) = 0, f' = (1 - z^n)^(-2/n), onto a regular n-gon.
struct RegularPolygon {
    int n = 3;
};
/// z / (1 - z)^2. Univalent but not convex.
struct Koebe {};
struct Series {
    PowerSeries series;
};
/// A map generated from phi; the series is built once at construction.
struct Herglotz {
    PhiSpec phi;
    PowerSeries series;
};

} // namespace maps

/// z -> e^{i theta} (z + a) / (1 + conj(a) z), |a| < 1.
struct DiskAutomorphism {
    Complex a;
    double theta = 0.0;
};

/// w -> scale * w + offset, scale != 0.
struct AffineMap {
    Complex scale{1.0, 0.0};
    Complex offset{};
};

class MapSpec {
public:
    using Variant = std::variant<maps::Identity, maps::HalfPlane, maps::Strip, maps::Sector,
                                 maps::RegularPolygon, maps::Koebe, maps::Series, maps::Herglotz>;

    explicit MapSpec(Variant v);

    static MapSpec identity() { return MapSpec(maps::Identity{}); }
    static MapSpec half_plane() { return MapSpec(maps::HalfPlane{}); }
    static MapSpec strip() { return MapSpec(maps::Strip{}); }
    static MapSpec sector(double alpha) { return MapSpec(maps::Sector{alpha}); }
    static MapSpec polygon(int n) { return MapSpec(maps::RegularPolygon{n}); }
    static MapSpec koebe() { return MapSpec(maps::Koebe{}); }
    static MapSpec series(PowerSeries s) { return MapSpec(maps::Series{std::move(s)}); }
    static MapSpec herglotz(const PhiSpec& phi, std::size_t order = kDefaultSeriesOrder,
                            double rmax = kDefaultSeriesRadius);

    /// f o T for a disk automorphism T; replaces any earlier pre-composition.
    [[nodiscard]] MapSpec with_automorphism(DiskAutomorphism t) const;
    /// A o f for an affine A; replaces any earlier post-composition.
    [[nodiscard]] MapSpec with_affine(AffineMap a) const;

    [[nodiscard]] const Variant& variant() const noexcept { return v_; }
    [[nodiscard]] const std::optional<DiskAutomorphism>& automorphism() const noexcept { return pre_; }
    [[nodiscard]] const std::optional<AffineMap>& affine() const noexcept { return post_; }

    [[nodiscard]] std::string name() const;
    [[nodiscard]] bool series_backed() const noexcept;

    /// Largest radius rho such that every |z| <= rho can be evaluated;
    /// 1 for closed forms (open disk).
    [[nodiscard]] double eval_radius() const;

private:
    Variant v_;
    std::optional<DiskAutomorphism> pre_;
    std::optional<AffineMap> post_;
};

/// f, f', f'', f''' at z. Closed forms are differentiated exactly; series
/// maps go through series_eval_jet; compositions use the chain rule.
[[nodiscard]] Jet jet_of(const MapSpec& map, Complex z);

/// Builds f(0) = 0, f'(0) = 1 from f''/f' = 2 phi / (1 - z phi) by series
/// division, integration, exponentiation and a second integration.
[[nodiscard]] MapSpec gen_herglotz(const PhiSpec& phi, std::size_t order = kDefaultSeriesOrder,
                                   double rmax = kDefaultSeriesRadius);

/// phi = (f''/f') / (2 + z f''/f'). Throws DegenerateDenominator if the
/// denominator vanishes (impossible for convex maps).
[[nodiscard]] Complex phi_of(const MapSpec& map, Complex z);
[[nodiscard]] Complex phi_of(const Jet& j);

/// phi' = 2 Sf / (2 + z f''/f')^2, which follows from the quotient rule.
[[nodiscard]] Complex phi_derivative(const Jet& j);

} // namespace diskmap
