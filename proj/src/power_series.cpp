#include "diskmap/power_series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "diskmap/errors.hpp"

namespace diskmap {

namespace {

std::vector<Complex> padded(std::vector<Complex> coeffs)
{
    if (coeffs.size() < PowerSeries::kMinOrder + 1) {
        coeffs.resize(PowerSeries::kMinOrder + 1, Complex{});
    }
    return coeffs;
}

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

} // namespace

PowerSeries::PowerSeries(std::vector<Complex> coeffs, double rmax)
    : coeffs_(padded(std::move(coeffs))), rmax_(rmax)
{
    if (!(rmax_ > 0.0 && rmax_ < 1.0)) {
        throw Error(ErrorKind::InvalidArgument, "series rmax must lie in (0, 1)");
    }
    if (!std::all_of(coeffs_.begin(), coeffs_.end(), finite)) {
        throw Error(ErrorKind::InvalidArgument, "series coefficients must be finite");
    }
}

PowerSeries PowerSeries::constant(Complex value, std::size_t order, double rmax)
{
    std::vector<Complex> c(order + 1, Complex{});
    c[0] = value;
    return PowerSeries(std::move(c), rmax);
}

PowerSeries PowerSeries::variable(std::size_t order, double rmax)
{
    std::vector<Complex> c(std::max<std::size_t>(order, 1) + 1, Complex{});
    c[1] = 1.0;
    return PowerSeries(std::move(c), rmax);
}

double PowerSeries::tail_bound() const noexcept
{
    return std::abs(coeffs_.back()) * std::pow(rmax_, static_cast<double>(order()));
}

PowerSeries PowerSeries::truncated(std::size_t order) const
{
    std::vector<Complex> c(coeffs_.begin(),
                           coeffs_.begin() + static_cast<std::ptrdiff_t>(std::min(order, this->order()) + 1));
    return PowerSeries(std::move(c), rmax_);
}

PowerSeries PowerSeries::with_rmax(double rmax) const { return PowerSeries(coeffs_, rmax); }

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b)
{
    const std::size_t m = std::min(a.order(), b.order());
    std::vector<Complex> c(m + 1);
    for (std::size_t k = 0; k <= m; ++k) c[k] = a[k] + b[k];
    return PowerSeries(std::move(c), std::min(a.rmax(), b.rmax()));
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return a + Complex(-1.0) * b; }

PowerSeries operator*(Complex s, const PowerSeries& a)
{
    std::vector<Complex> c(a.coeffs().begin(), a.coeffs().end());
    for (auto& x : c) x *= s;
    return PowerSeries(std::move(c), a.rmax());
}

PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b)
{
    const std::size_t m = std::min(a.order(), b.order());
    std::vector<Complex> c(m + 1, Complex{});
    for (std::size_t i = 0; i <= m; ++i) {
        if (a[i] == Complex{}) continue;
        for (std::size_t j = 0; i + j <= m; ++j) c[i + j] += a[i] * b[j];
    }
    return PowerSeries(std::move(c), std::min(a.rmax(), b.rmax()));
}

PowerSeries series_reciprocal(const PowerSeries& a)
{
    if (a[0] == Complex{}) {
        throw Error(ErrorKind::DegenerateDenominator, "series reciprocal needs a nonzero constant term");
    }
    const std::size_t m = a.order();
    std::vector<Complex> b(m + 1, Complex{});
    b[0] = 1.0 / a[0];
    for (std::size_t n = 1; n <= m; ++n) {
        Complex acc{};
        for (std::size_t k = 1; k <= n; ++k) acc += a[k] * b[n - k];
        b[n] = -acc * b[0];
    }
    return PowerSeries(std::move(b), a.rmax());
}

PowerSeries series_div(const PowerSeries& a, const PowerSeries& b)
{
    if (b[0] == Complex{}) {
        throw Error(ErrorKind::DegenerateDenominator, "series division needs a nonzero constant term");
    }
    const std::size_t m = std::min(a.order(), b.order());
    std::vector<Complex> q(m + 1, Complex{});
    for (std::size_t n = 0; n <= m; ++n) {
        Complex acc = a[n];
        for (std::size_t k = 1; k <= n; ++k) acc -= b[k] * q[n - k];
        q[n] = acc / b[0];
    }
    return PowerSeries(std::move(q), std::min(a.rmax(), b.rmax()));
}

PowerSeries series_exp(const PowerSeries& a)
{
    const std::size_t m = a.order();
    std::vector<Complex> b(m + 1, Complex{});
    b[0] = std::exp(a[0]);
    for (std::size_t n = 1; n <= m; ++n) {
        Complex acc{};
        for (std::size_t k = 1; k <= n; ++k) acc += static_cast<double>(k) * a[k] * b[n - k];
        b[n] = acc / static_cast<double>(n);
    }
    return PowerSeries(std::move(b), a.rmax());
}

PowerSeries series_integrate(const PowerSeries& a, Complex c0, std::size_t cap)
{
    const std::size_t m = std::min(a.order() + 1, std::max(cap, PowerSeries::kMinOrder));
    std::vector<Complex> c(m + 1, Complex{});
    c[0] = c0;
    for (std::size_t k = 1; k <= m; ++k) c[k] = a[k - 1] / static_cast<double>(k);
    return PowerSeries(std::move(c), a.rmax());
}

PowerSeries series_integrate(const PowerSeries& a, Complex c0)
{
    return series_integrate(a, c0, a.order() + 1);
}

PowerSeries series_derivative(const PowerSeries& a)
{
    const std::size_t m = a.order();
    std::vector<Complex> c(m, Complex{});
    for (std::size_t k = 1; k <= m; ++k) c[k - 1] = static_cast<double>(k) * a[k];
    return PowerSeries(std::move(c), a.rmax());
}

Jet series_eval_jet(const PowerSeries& s, Complex z)
{
    const double r = std::abs(z);
    // grid points built with std::polar may land an ulp outside rmax
    if (r > s.rmax() * (1.0 + 1e-12)) {
        std::ostringstream msg;
        msg << "|z| = " << r << " exceeds series radius " << s.rmax();
        throw Error(ErrorKind::RadiusExceeded, msg.str());
    }
    // p_k holds f^(k)/k! after the sweep.
    Complex p0{}, p1{}, p2{}, p3{};
    const auto c = s.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
        p3 = p3 * z + p2;
        p2 = p2 * z + p1;
        p1 = p1 * z + p0;
        p0 = p0 * z + c[k];
    }
    Jet j{z, p0, p1, 2.0 * p2, 6.0 * p3};
    j.tail_bound = std::abs(c.back()) * std::pow(r, static_cast<double>(s.order()));
    return j;
}

} // namespace diskmap
