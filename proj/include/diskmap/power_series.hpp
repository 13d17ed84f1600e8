#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "diskmap/jet.hpp"

namespace diskmap {

inline constexpr std::size_t kDefaultSeriesOrder = 512;
inline constexpr double kDefaultSeriesRadius = 0.9;
inline constexpr double kTailWarningThreshold = 1e-10;

/**
 * Truncated Taylor expansion c0 + c1 z + ... + cM z^M about the origin.
 *
 * The series carries the radius rmax up to which evaluation is certified.
 * Requests beyond it raise RadiusExceeded instead of silently returning a
 * truncated sum. Orders below 3 are zero-padded so a Jet is always available.
 */
class PowerSeries {
public:
    static constexpr std::size_t kMinOrder = 3;

    explicit PowerSeries(std::vector<Complex> coeffs, double rmax = kDefaultSeriesRadius);

    /// The constant series `value` at the given order.
    static PowerSeries constant(Complex value, std::size_t order, double rmax = kDefaultSeriesRadius);
    /// The series of z at the given order.
    static PowerSeries variable(std::size_t order, double rmax = kDefaultSeriesRadius);

    [[nodiscard]] std::size_t order() const noexcept { return coeffs_.size() - 1; }
    [[nodiscard]] double rmax() const noexcept { return rmax_; }
    [[nodiscard]] std::span<const Complex> coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] Complex operator[](std::size_t k) const noexcept
    {
        return k < coeffs_.size() ? coeffs_[k] : Complex{};
    }

    /// Geometric tail estimate |c_M| rmax^M at the certified radius.
    [[nodiscard]] double tail_bound() const noexcept;
    [[nodiscard]] bool tail_warning() const noexcept { return tail_bound() > kTailWarningThreshold; }

    [[nodiscard]] PowerSeries truncated(std::size_t order) const;
    [[nodiscard]] PowerSeries with_rmax(double rmax) const;

private:
    std::vector<Complex> coeffs_;
    double rmax_;
};

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator*(Complex s, const PowerSeries& a);

/// Cauchy product truncated at the smaller order; rmax is the smaller radius.
[[nodiscard]] PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b);

/// 1/a. Requires a0 != 0.
[[nodiscard]] PowerSeries series_reciprocal(const PowerSeries& a);

/// a/b by long division. Requires b0 != 0.
[[nodiscard]] PowerSeries series_div(const PowerSeries& a, const PowerSeries& b);

/// exp(a) through n b_n = sum_{k=1..n} k a_k b_{n-k}, b_0 = exp(a_0).
[[nodiscard]] PowerSeries series_exp(const PowerSeries& a);

/// Termwise antiderivative with constant term c0. The order grows by one
/// unless that would exceed `cap`.
[[nodiscard]] PowerSeries series_integrate(const PowerSeries& a, Complex c0, std::size_t cap);
[[nodiscard]] PowerSeries series_integrate(const PowerSeries& a, Complex c0);

/// Formal derivative; the order drops by one (but never below kMinOrder).
[[nodiscard]] PowerSeries series_derivative(const PowerSeries& a);

/// f, f', f'', f''' at z by nested Horner recurrences.
/// Throws RadiusExceeded when |z| > rmax. The jet's tail_bound holds |c_M| |z|^M.
[[nodiscard]] Jet series_eval_jet(const PowerSeries& s, Complex z);

} // namespace diskmap
