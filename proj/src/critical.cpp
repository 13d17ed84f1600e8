#include "diskmap/critical.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <optional>

#include "diskmap/errors.hpp"
#include "diskmap/functionals.hpp"

namespace diskmap {

namespace {

constexpr std::size_t kNewtonSeeds = 32;
constexpr int kNewtonIterations = 60;
constexpr Complex kI{0.0, 1.0};

Complex p_at(const MapSpec& map, Complex z) { return p_field(jet_of(map, z)); }

std::optional<Complex> newton_zero(const MapSpec& map, Complex z, double limit)
{
    const double h = kCriticalJacobianStep;
    for (int it = 0; it < kNewtonIterations; ++it) {
        const Complex p = p_at(map, z);
        if (std::abs(p) <= 1e-2 * kCriticalTol) return z;
        const Complex px = (p_at(map, z + h) - p_at(map, z - h)) / (2.0 * h);
        const Complex py = (p_at(map, z + kI * h) - p_at(map, z - kI * h)) / (2.0 * h);
        // J = [[Re px, Re py], [Im px, Im py]]; solve (J^T J + mu I) d = -J^T F.
        const double a = px.real(), b = py.real(), c = px.imag(), d = py.imag();
        const double f1 = p.real(), f2 = p.imag();
        const double n11 = a * a + c * c, n12 = a * b + c * d, n22 = b * b + d * d;
        const double mu = 1e-12 * (n11 + n22);
        const double r1 = -(a * f1 + c * f2), r2 = -(b * f1 + d * f2);
        const double det = (n11 + mu) * (n22 + mu) - n12 * n12;
        if (det == 0.0 || !std::isfinite(det)) return std::nullopt;
        Complex step{((n22 + mu) * r1 - n12 * r2) / det, ((n11 + mu) * r2 - n12 * r1) / det};
        if (std::abs(step) > 0.25) step *= 0.25 / std::abs(step);
        z += step;
        if (std::abs(z) + 2.0 * h >= limit) return std::nullopt;
    }
    if (std::abs(p_at(map, z)) <= kCriticalTol) return z;
    return std::nullopt;
}

// Complex 3x3 solve by Gaussian elimination with partial pivoting.
std::optional<std::array<Complex, 3>> solve3(std::array<std::array<Complex, 3>, 3> m, std::array<Complex, 3> rhs)
{
    double scale = 0.0;
    for (const auto& row : m)
        for (const Complex x : row) scale = std::max(scale, std::abs(x));
    for (int col = 0; col < 3; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
        if (std::abs(m[pivot][col]) <= 1e-14 * scale) return std::nullopt;
        std::swap(m[col], m[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        for (int r = col + 1; r < 3; ++r) {
            const Complex f = m[r][col] / m[col][col];
            for (int k = col; k < 3; ++k) m[r][k] -= f * m[col][k];
            rhs[r] -= f * rhs[col];
        }
    }
    std::array<Complex, 3> x{};
    for (int r = 2; r >= 0; --r) {
        Complex acc = rhs[r];
        for (int k = r + 1; k < 3; ++k) acc -= m[r][k] * x[k];
        x[r] = acc / m[r][r];
    }
    return x;
}

} // namespace

std::string_view to_string(CriticalKind kind) noexcept
{
    switch (kind) {
    case CriticalKind::None: return "None";
    case CriticalKind::Unique: return "Unique";
    case CriticalKind::DegenerateLocus: return "DegenerateLocus";
    }
    return "Unknown";
}

std::string_view to_string(PhiKind kind) noexcept
{
    switch (kind) {
    case PhiKind::UnimodularConstant: return "UnimodularConstant";
    case PhiKind::Automorphism: return "Automorphism";
    case PhiKind::Strict: return "Strict";
    }
    return "Unknown";
}

CriticalResult find_critical_point(const MapSpec& map, const GridSpec& grid)
{
    const double limit = std::min(map.eval_radius(), 1.0);
    struct Sample {
        Complex z;
        double abs_p;
    };
    std::vector<Sample> samples;
    for (const Complex z : grid.points()) {
        if (std::abs(z) > limit) continue;
        samples.push_back({z, std::abs(p_at(map, z))});
    }

    CriticalResult result;
    if (samples.empty()) return result;
    result.residual_floor =
        std::min_element(samples.begin(), samples.end(), [](auto& l, auto& r) { return l.abs_p < r.abs_p; })->abs_p;

    const std::size_t seeds = std::min(kNewtonSeeds, samples.size());
    std::partial_sort(samples.begin(), samples.begin() + static_cast<std::ptrdiff_t>(seeds), samples.end(),
                      [](auto& l, auto& r) { return l.abs_p < r.abs_p; });

    std::vector<Complex> zeros;
    auto record = [&](Complex z) {
        for (const Complex q : zeros)
            if (std::abs(q - z) <= kZeroSeparation) return;
        zeros.push_back(z);
    };
    for (std::size_t i = 0; i < seeds; ++i) {
        try {
            if (auto z = newton_zero(map, samples[i].z, limit)) record(*z);
        } catch (const Error&) {
            // A seed that wanders out of the evaluation domain just fails.
        }
    }

    if (zeros.size() >= kDegenerateZeroCount) {
        result.kind = CriticalKind::DegenerateLocus;
        result.locus = std::move(zeros);
        return result;
    }
    if (zeros.empty()) return result;

    // At most one zero is expected; if a few are found, report the one with
    // the smallest density.
    result.kind = CriticalKind::Unique;
    result.lambda_min = std::numeric_limits<double>::infinity();
    for (const Complex z : zeros) {
        const double lambda = poincare_density(jet_of(map, z));
        if (lambda < result.lambda_min) {
            result.lambda_min = lambda;
            result.z = z;
        }
    }
    if (zeros.size() > 1) result.locus = std::move(zeros);
    return result;
}

PhiClass classify_phi(const MapSpec& map)
{
    const double rmax = std::min(0.8, 0.9 * map.eval_radius());
    constexpr int kRadii = 8;
    constexpr int kAngles = 16;
    std::vector<Complex> zs;
    std::vector<Complex> phis;
    for (int i = 0; i < kRadii; ++i) {
        const double r = rmax * (i + 0.5) / kRadii;
        for (int k = 0; k < kAngles; ++k) {
            const Complex z = std::polar(r, 2.0 * std::numbers::pi * k / kAngles + 0.1);
            try {
                phis.push_back(phi_of(map, z));
                zs.push_back(z);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::DegenerateDenominator) throw;
            }
        }
    }

    PhiClass out;
    if (phis.empty()) {
        out.fit_error = std::numeric_limits<double>::max();
        return out;
    }

    double variation = 0.0;
    double min_mod = std::numeric_limits<double>::infinity();
    for (const Complex f : phis) {
        variation = std::max(variation, std::abs(f - phis.front()));
        min_mod = std::min(min_mod, std::abs(f));
    }
    if (variation <= kPhiClassTol) {
        out.theta = std::arg(phis.front());
        if (min_mod >= 1.0 - kPhiClassTol) {
            out.kind = PhiKind::UnimodularConstant;
            out.fit_error = variation;
        } else {
            // A constant inside the disk is no automorphism; distance to the unimodular constants.
            out.kind = PhiKind::Strict;
            out.fit_error = 1.0 - std::abs(phis.front());
        }
        return out;
    }

    // phi (1 + conj(a) z) = e^{i theta}(z + a) is linear in (u, v, b) = (e^{i theta}, e^{i theta} a, conj(a)):
    // phi = u z + v - b z phi.
    std::array<std::array<Complex, 3>, 3> normal{};
    std::array<Complex, 3> rhs{};
    for (std::size_t k = 0; k < zs.size(); ++k) {
        const std::array<Complex, 3> row{zs[k], 1.0, -zs[k] * phis[k]};
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) normal[r][c] += std::conj(row[r]) * row[c];
            rhs[r] += std::conj(row[r]) * phis[k];
        }
    }
    const auto sol = solve3(normal, rhs);
    if (!sol) {
        out.fit_error = variation;
        return out;
    }
    const Complex a = std::conj((*sol)[2]);
    const double theta = std::arg((*sol)[0]);
    if (!(std::abs(a) < 1.0)) {
        out.fit_error = variation;
        return out;
    }
    const Complex rot = std::exp(kI * theta);
    double err = 0.0;
    for (std::size_t k = 0; k < zs.size(); ++k) {
        const Complex model = rot * (zs[k] + a) / (1.0 + std::conj(a) * zs[k]);
        err = std::max(err, std::abs(phis[k] - model));
    }
    out.fit_error = err;
    if (err <= kPhiClassTol) {
        out.kind = PhiKind::Automorphism;
        out.a = a;
        out.theta = theta;
    }
    return out;
}

} // namespace diskmap
