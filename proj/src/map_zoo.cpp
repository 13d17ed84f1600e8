#include "diskmap/map_zoo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "diskmap/errors.hpp"

namespace diskmap {

namespace {

constexpr Complex kI{0.0, 1.0};

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

Complex horner(const std::vector<Complex>& c, Complex z)
{
    Complex acc{};
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

void require_in_disk(Complex z)
{
    if (!(std::abs(z) < 1.0)) {
        std::ostringstream msg;
        msg << "|z| = " << std::abs(z) << " is outside the open unit disk";
        throw Error(ErrorKind::RadiusExceeded, msg.str());
    }
}

// Jets of the closed-form zoo entries. Each one writes f0..f3 directly.

Jet half_plane_jet(Complex z)
{
    const Complex u = 1.0 / (1.0 - z);
    const Complex u2 = u * u;
    return {z, z * u, u2, 2.0 * u2 * u, 6.0 * u2 * u2};
}

Jet strip_jet(Complex z)
{
    const Complex d = 1.0 / (1.0 - z * z);
    const Complex f0 = 0.5 * (std::log(1.0 + z) - std::log(1.0 - z));
    return {z, f0, d, 2.0 * z * d * d, (2.0 + 6.0 * z * z) * d * d * d};
}

Jet sector_jet(Complex z, double alpha)
{
    const Complex d = 1.0 / (1.0 - z * z);
    const Complex log_ratio = std::log(1.0 + z) - std::log(1.0 - z);
    const Complex f0 = std::exp(alpha * log_ratio);
    const Complex f1 = 2.0 * alpha * f0 * d;
    // f''/f' and its derivative
    const Complex pre = (2.0 * z + 2.0 * alpha) * d;
    const Complex pre_prime = (2.0 + 2.0 * z * z + 4.0 * alpha * z) * d * d;
    return {z, f0, f1, f1 * pre, f1 * (pre_prime + pre * pre)};
}

Jet koebe_jet(Complex z)
{
    const Complex u = 1.0 / (1.0 - z);
    const Complex u2 = u * u;
    const Complex u3 = u2 * u;
    return {z, z * u2, (1.0 + z) * u3, (4.0 + 2.0 * z) * u3 * u, (18.0 + 6.0 * z) * u3 * u2};
}

// f(z) = sum_k (beta)_k / k! z^{nk+1} / (nk+1), beta = 2/n.
Complex polygon_value(Complex z, int n)
{
    const double beta = 2.0 / n;
    const Complex zn = std::pow(z, n);
    Complex term_power = z; // z^{nk+1}
    double binom = 1.0;     // (beta)_k / k!
    Complex sum{};
    constexpr int kMaxTerms = 1'000'000;
    for (int k = 0; k < kMaxTerms; ++k) {
        const Complex term = binom * term_power / static_cast<double>(n * k + 1);
        sum += term;
        if (std::abs(term) <= 1e-18 * std::max(1.0, std::abs(sum)) && k > 0) break;
        binom *= (beta + k) / (k + 1.0);
        term_power *= zn;
    }
    return sum;
}

Jet polygon_jet(Complex z, int n)
{
    const Complex zn1 = std::pow(z, n - 1);
    const Complex zn = zn1 * z;
    const Complex one_minus = 1.0 - zn;
    const Complex f1 = std::exp(-(2.0 / n) * std::log(one_minus));
    const Complex pre = 2.0 * zn1 / one_minus;
    const Complex zn2 = n >= 2 ? std::pow(z, n - 2) : Complex{};
    const Complex pre_prime =
        (2.0 * (n - 1) * zn2 + 2.0 * zn1 * zn1) / (one_minus * one_minus);
    return {z, polygon_value(z, n), f1, f1 * pre, f1 * (pre_prime + pre * pre)};
}

Jet base_jet(const MapSpec::Variant& v, Complex z)
{
    return std::visit(
        overloaded{
            [&](const maps::Identity&) { return Jet{z, z, 1.0, 0.0, 0.0}; },
            [&](const maps::HalfPlane&) { return half_plane_jet(z); },
            [&](const maps::Strip&) { return strip_jet(z); },
            [&](const maps::Sector& s) { return sector_jet(z, s.alpha); },
            [&](const maps::RegularPolygon& p) { return polygon_jet(z, p.n); },
            [&](const maps::Koebe&) { return koebe_jet(z); },
            [&](const maps::Series& s) { return series_eval_jet(s.series, z); },
            [&](const maps::Herglotz& h) { return series_eval_jet(h.series, z); },
        },
        v);
}

bool is_series(const MapSpec::Variant& v)
{
    return std::holds_alternative<maps::Series>(v) || std::holds_alternative<maps::Herglotz>(v);
}

double series_radius(const MapSpec::Variant& v)
{
    if (const auto* s = std::get_if<maps::Series>(&v)) return s->series.rmax();
    if (const auto* h = std::get_if<maps::Herglotz>(&v)) return h->series.rmax();
    return 1.0;
}

} // namespace

// ---------------------------------------------------------------------------
// phi
// ---------------------------------------------------------------------------

Complex eval_phi(const PhiSpec& phi, Complex z)
{
    return std::visit(overloaded{
                          [&](const PhiPolynomial& p) { return horner(p.coeffs, z); },
                          [&](const PhiBlaschke& b) {
                              Complex acc = std::exp(kI * b.theta);
                              for (const Complex a : b.zeros) acc *= (z - a) / (1.0 - std::conj(a) * z);
                              return acc;
                          },
                          [&](const PhiUnimodular& u) { return std::exp(kI * u.theta); },
                      },
                      phi);
}

double phi_boundary_sup(const PhiSpec& phi)
{
    double sup = 0.0;
    for (std::size_t k = 0; k < kPhiBoundarySamples; ++k) {
        const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / kPhiBoundarySamples;
        sup = std::max(sup, std::abs(eval_phi(phi, std::polar(1.0, t))));
    }
    return sup;
}

void validate_phi(const PhiSpec& phi)
{
    if (const auto* b = std::get_if<PhiBlaschke>(&phi)) {
        for (const Complex a : b->zeros) {
            if (!(std::abs(a) < 1.0)) {
                throw Error(ErrorKind::PhiOutOfRange, "Blaschke zero must satisfy |a| < 1");
            }
        }
        if (!std::isfinite(b->theta)) throw Error(ErrorKind::PhiOutOfRange, "rotation must be finite");
        return;
    }
    if (const auto* u = std::get_if<PhiUnimodular>(&phi)) {
        if (!std::isfinite(u->theta)) throw Error(ErrorKind::PhiOutOfRange, "rotation must be finite");
        return;
    }
    const auto& poly = std::get<PhiPolynomial>(phi);
    if (!std::all_of(poly.coeffs.begin(), poly.coeffs.end(), finite)) {
        throw Error(ErrorKind::PhiOutOfRange, "polynomial coefficients must be finite");
    }
    // Maximum principle: the boundary sup bounds |phi| on the whole disk.
    const double sup = phi_boundary_sup(phi);
    if (sup > 1.0 + kPhiBoundarySlack) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "sup |phi| on the unit circle is " << sup << " > 1";
        throw Error(ErrorKind::PhiOutOfRange, msg.str());
    }
}

PowerSeries phi_series(const PhiSpec& phi, std::size_t order, double rmax)
{
    return std::visit(
        overloaded{
            [&](const PhiPolynomial& p) {
                std::vector<Complex> c(order + 1, Complex{});
                std::copy_n(p.coeffs.begin(), std::min(p.coeffs.size(), order + 1), c.begin());
                return PowerSeries(std::move(c), rmax);
            },
            [&](const PhiBlaschke& b) {
                auto acc = PowerSeries::constant(std::exp(kI * b.theta), order, rmax);
                for (const Complex a : b.zeros) {
                    // (z - a)/(1 - conj(a) z) = -a + sum_{k>=1} conj(a)^{k-1} (1 - |a|^2) z^k
                    std::vector<Complex> c(order + 1, Complex{});
                    c[0] = -a;
                    Complex power = 1.0;
                    const double scale = 1.0 - std::norm(a);
                    for (std::size_t k = 1; k <= order; ++k) {
                        c[k] = power * scale;
                        power *= std::conj(a);
                    }
                    acc = series_mul(acc, PowerSeries(std::move(c), rmax));
                }
                return acc;
            },
            [&](const PhiUnimodular& u) { return PowerSeries::constant(std::exp(kI * u.theta), order, rmax); },
        },
        phi);
}

PhiPolynomial random_polynomial_phi(std::mt19937_64& rng, int degree, double scale)
{
    if (degree < 0 || !(scale > 0.0 && scale <= 1.0)) {
        throw Error(ErrorKind::InvalidArgument, "random phi needs degree >= 0 and scale in (0, 1]");
    }
    std::normal_distribution<double> normal(0.0, 1.0);
    PhiPolynomial p;
    p.coeffs.resize(static_cast<std::size_t>(degree) + 1);
    for (auto& c : p.coeffs) c = {normal(rng), normal(rng)};
    const double sup = phi_boundary_sup(p);
    for (auto& c : p.coeffs) c *= scale / sup;
    return p;
}

// ---------------------------------------------------------------------------
// MapSpec
// ---------------------------------------------------------------------------

MapSpec::MapSpec(Variant v) : v_(std::move(v))
{
    if (const auto* s = std::get_if<maps::Sector>(&v_)) {
        if (!(s->alpha > 0.0 && s->alpha <= 1.0)) {
            throw Error(ErrorKind::InvalidArgument, "sector alpha must lie in (0, 1]");
        }
    }
    if (const auto* p = std::get_if<maps::RegularPolygon>(&v_)) {
        if (p->n < 3) throw Error(ErrorKind::InvalidArgument, "polygon needs n >= 3");
    }
}

MapSpec MapSpec::herglotz(const PhiSpec& phi, std::size_t order, double rmax)
{
    const MapSpec generated = gen_herglotz(phi, order, rmax);
    return MapSpec(maps::Herglotz{phi, std::get<maps::Series>(generated.variant()).series});
}

MapSpec MapSpec::with_automorphism(DiskAutomorphism t) const
{
    if (!(std::abs(t.a) < 1.0) || !std::isfinite(t.theta)) {
        throw Error(ErrorKind::InvalidArgument, "automorphism needs |a| < 1 and finite theta");
    }
    MapSpec out = *this;
    out.pre_ = t;
    return out;
}

MapSpec MapSpec::with_affine(AffineMap a) const
{
    if (a.scale == Complex{} || !finite(a.scale) || !finite(a.offset)) {
        throw Error(ErrorKind::InvalidArgument, "affine map needs a finite nonzero scale");
    }
    MapSpec out = *this;
    out.post_ = a;
    return out;
}

bool MapSpec::series_backed() const noexcept { return is_series(v_); }

double MapSpec::eval_radius() const
{
    const double r = series_radius(v_);
    if (r >= 1.0 || !pre_) return r;
    // sup_{|z|=rho} |T(z)| = (rho + |a|) / (1 + |a| rho)
    const double a = std::abs(pre_->a);
    if (r <= a) return 0.0;
    return (r - a) / (1.0 - a * r);
}

std::string MapSpec::name() const
{
    std::ostringstream out;
    std::visit(overloaded{
                   [&](const maps::Identity&) { out << "identity"; },
                   [&](const maps::HalfPlane&) { out << "half_plane"; },
                   [&](const maps::Strip&) { out << "strip"; },
                   [&](const maps::Sector& s) { out << "sector(alpha=" << s.alpha << ")"; },
                   [&](const maps::RegularPolygon& p) { out << "polygon(n=" << p.n << ")"; },
                   [&](const maps::Koebe&) { out << "koebe"; },
                   [&](const maps::Series& s) { out << "series(order=" << s.series.order() << ")"; },
                   [&](const maps::Herglotz& h) { out << "herglotz(order=" << h.series.order() << ")"; },
               },
               v_);
    if (pre_) out << " o automorphism(a=" << pre_->a << ", theta=" << pre_->theta << ")";
    if (post_) out << " then affine(scale=" << post_->scale << ", offset=" << post_->offset << ")";
    return out.str();
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

Jet jet_of(const MapSpec& map, Complex z)
{
    require_in_disk(z);
    Jet j;
    if (const auto& t = map.automorphism()) {
        const Complex u = std::exp(kI * t->theta);
        const Complex a = t->a;
        const Complex ac = std::conj(a);
        const Complex den = 1.0 / (1.0 + ac * z);
        const Complex k = u * (1.0 - std::norm(a));
        const Complex tz = u * (z + a) * den;
        const Complex t1 = k * den * den;
        const Complex t2 = -2.0 * ac * t1 * den;
        const Complex t3 = 6.0 * ac * ac * t1 * den * den;
        const Jet inner = base_jet(map.variant(), tz);
        // Faa di Bruno through third order
        j.z = z;
        j.f0 = inner.f0;
        j.f1 = inner.f1 * t1;
        j.f2 = inner.f2 * t1 * t1 + inner.f1 * t2;
        j.f3 = inner.f3 * t1 * t1 * t1 + 3.0 * inner.f2 * t1 * t2 + inner.f1 * t3;
        j.tail_bound = inner.tail_bound;
    } else {
        j = base_jet(map.variant(), z);
    }
    if (const auto& a = map.affine()) {
        j.f0 = a->scale * j.f0 + a->offset;
        j.f1 *= a->scale;
        j.f2 *= a->scale;
        j.f3 *= a->scale;
    }
    if (j.f1 == Complex{}) throw Error(ErrorKind::SingularPoint, "f'(z) = 0");
    if (!finite(j.f0) || !finite(j.f1) || !finite(j.f2) || !finite(j.f3)) {
        throw Error(ErrorKind::SingularPoint, "non-finite jet");
    }
    return j;
}

MapSpec gen_herglotz(const PhiSpec& phi, std::size_t order, double rmax)
{
    validate_phi(phi);
    order = std::max(order, PowerSeries::kMinOrder);
    const PowerSeries phi_s = phi_series(phi, order, rmax);

    // 1 - z phi
    std::vector<Complex> d(order + 1, Complex{});
    d[0] = 1.0;
    for (std::size_t k = 1; k <= order; ++k) d[k] = -phi_s[k - 1];
    const PowerSeries denom(std::move(d), rmax);

    const PowerSeries pre = series_div(Complex(2.0) * phi_s, denom); // f''/f'
    const PowerSeries log_fp = series_integrate(pre, 0.0, order);
    const PowerSeries fp = series_exp(log_fp);
    return MapSpec::series(series_integrate(fp, 0.0, order));
}

Complex phi_of(const Jet& j)
{
    if (j.f1 == Complex{}) throw Error(ErrorKind::SingularPoint, "f'(z) = 0");
    const Complex pre = j.f2 / j.f1;
    const Complex den = 2.0 + j.z * pre;
    if (std::abs(den) <= 1e-12) {
        throw Error(ErrorKind::DegenerateDenominator, "2 + z f''/f' vanishes; the map is not convex");
    }
    return pre / den;
}

Complex phi_of(const MapSpec& map, Complex z) { return phi_of(jet_of(map, z)); }

Complex phi_derivative(const Jet& j)
{
    if (j.f1 == Complex{}) throw Error(ErrorKind::SingularPoint, "f'(z) = 0");
    const Complex pre = j.f2 / j.f1;
    const Complex schwarz = j.f3 / j.f1 - 1.5 * pre * pre;
    const Complex den = 2.0 + j.z * pre;
    if (std::abs(den) <= 1e-12) {
        throw Error(ErrorKind::DegenerateDenominator, "2 + z f''/f' vanishes; the map is not convex");
    }
    return 2.0 * schwarz / (den * den);
}

} // namespace diskmap
