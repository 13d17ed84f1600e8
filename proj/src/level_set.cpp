#include "diskmap/level_set.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "diskmap/errors.hpp"
#include "diskmap/functionals.hpp"

namespace diskmap {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kNormalZero = 1e-14;
constexpr int kCorrectorIterations = 8;
constexpr std::size_t kRaySamples = 4000;

struct LocalFrame {
    Complex pre;
    Complex schwarz;
    Complex p;
    double abs_p;
    double w; // 1 - |z|^2
};

LocalFrame frame(const Jet& j)
{
    const Complex pre = pre_schwarzian(j);
    const double w = 1.0 - std::norm(j.z);
    const Complex p = std::conj(j.z) - 0.5 * w * pre;
    const double abs_p = std::abs(p);
    if (abs_p <= kNormalZero) throw Error(ErrorKind::NormalVanished, "p(z) = 0: critical point of lambda");
    return {pre, j.f3 / j.f1 - 1.5 * pre * pre, p, abs_p, w};
}

double default_radius(const MapSpec& map) { return std::min(map.eval_radius(), kClosedFormTraceRadius); }

Complex second_derivative(const Jet& j)
{
    const Complex p = p_field(j);
    return -disk_curvature(j) * std::conj(p) / std::abs(p);
}

struct Corrected {
    Complex z;
    double residual;
};

// Newton along the unit normal conj(p)/|p|:
// d/dt g(z + t conj(p)/|p|) = -2 |f'| |p|.
std::optional<Corrected> correct(const MapSpec& map, Complex z, double c)
{
    double residual = 0.0;
    for (int it = 0; it <= kCorrectorIterations; ++it) {
        const Jet j = jet_of(map, z);
        const double g = level_value(j) - c;
        residual = std::abs(g);
        if (residual <= 1e-14 * std::max(1.0, c)) break;
        if (it == kCorrectorIterations) break;
        const Complex p = p_field(j);
        const double abs_p = std::abs(p);
        if (abs_p <= kNormalZero) return std::nullopt;
        z += g / (2.0 * std::abs(j.f1) * abs_p) * (std::conj(p) / abs_p);
        if (!(std::abs(z) < 1.0)) return std::nullopt;
    }
    if (residual > kTraceResidualTol) return std::nullopt;
    return Corrected{z, residual};
}

struct March {
    std::vector<Complex> points;
    TraceStop stop = TraceStop::MaxPoints;
};

// Walks from z0 (not included in the result) in direction dir = +1 or -1.
March march(const MapSpec& map, Complex z0, double c, double step, double dir, std::size_t budget, double radius,
            double p_min, bool allow_close)
{
    March out;
    Complex z = z0;
    Jet jz = jet_of(map, z0);
    Complex tangent = dir * level_tangent(jz);
    // z'' = -k conj(p)/|p| regardless of the direction of travel.
    Complex accel = second_derivative(jz);
    const Complex start_tangent = tangent;
    double travelled = 0.0;

    while (out.points.size() < budget) {
        double h = step;
        std::optional<Corrected> next;
        Complex next_tangent;
        bool left = false;
        while (true) {
            const Complex guess = z + h * tangent + 0.5 * h * h * accel;
            try {
                next = correct(map, guess, c);
            } catch (const Error& e) {
                // Outside the series radius: the curve has left the domain.
                if (e.kind() != ErrorKind::RadiusExceeded) throw;
                next.reset();
                if (std::abs(guess) > radius) {
                    left = true;
                    break;
                }
            }
            if (next) {
                const double advance = std::abs(next->z - z);
                const Jet jn = jet_of(map, next->z);
                const double abs_p = std::abs(p_field(jn));
                if (abs_p <= kNormalZero) {
                    out.stop = TraceStop::NormalVanished;
                    return out;
                }
                next_tangent = dir * level_tangent(jn);
                // Reject corrections that jump to another branch or reverse.
                if ((next_tangent * std::conj(tangent)).real() > 0.0 && advance > 0.25 * h && advance < 2.0 * h) {
                    break;
                }
                next.reset();
            }
            h *= 0.5;
            if (h < step * 1e-6) {
                out.stop = TraceStop::StepCollapsed;
                return out;
            }
        }
        if (left || std::abs(next->z) > radius) {
            out.stop = TraceStop::LeftDomain;
            return out;
        }
        const Jet jn = jet_of(map, next->z);
        if (std::abs(p_field(jn)) <= p_min) {
            out.stop = TraceStop::NormalVanished;
            return out;
        }
        travelled += std::abs(next->z - z);
        if (allow_close && travelled > 2.0 * step && std::abs(next->z - z0) < 0.5 * step &&
            (next_tangent * std::conj(start_tangent)).real() > 0.0) {
            out.stop = TraceStop::Closed;
            return out;
        }
        z = next->z;
        tangent = next_tangent;
        accel = second_derivative(jn);
        out.points.push_back(z);
    }
    out.stop = TraceStop::MaxPoints;
    return out;
}

} // namespace

std::string_view to_string(TraceStop stop) noexcept
{
    switch (stop) {
    case TraceStop::Closed: return "closed";
    case TraceStop::MaxPoints: return "max_points";
    case TraceStop::LeftDomain: return "left_domain";
    case TraceStop::NormalVanished: return "normal_vanished";
    case TraceStop::StepCollapsed: return "step_collapsed";
    }
    return "unknown";
}

double level_value(const Jet& j) { return (1.0 - std::norm(j.z)) * std::abs(j.f1); }

Complex level_tangent(const Jet& j)
{
    const LocalFrame f = frame(j);
    return -kI * std::conj(f.p) / f.abs_p;
}

double disk_curvature(const Jet& j)
{
    const LocalFrame f = frame(j);
    const Complex pc = std::conj(f.p);
    const double bracket = 1.0 + 0.25 * f.w * std::norm(f.pre) +
                           f.w / (2.0 * f.abs_p * f.abs_p) * (pc * pc * f.schwarz).real();
    return bracket / f.abs_p;
}

double image_curvature(const Jet& j)
{
    const LocalFrame f = frame(j);
    const Complex pc = std::conj(f.p);
    const Complex tangent_sq = -pc * pc / (f.abs_p * f.abs_p);
    const double lhs1 = 1.0 + (j.z * f.pre).real();
    const double bracket = lhs1 - 0.25 * f.w * std::norm(f.pre) - 0.5 * f.w * (tangent_sq * f.schwarz).real();
    return bracket / (std::abs(j.f1) * f.abs_p);
}

double tangency_defect(const Jet& j)
{
    const LocalFrame f = frame(j);
    const Complex t = -kI * std::conj(f.p) / f.abs_p;
    return (t * f.pre).real() - 2.0 * (std::conj(j.z) * t).real() / f.w;
}

Complex find_level_start(const MapSpec& map, double c, double theta, std::optional<double> radius)
{
    const double rmax = radius.value_or(default_radius(map));
    if (!(c > 0.0)) throw Error(ErrorKind::InvalidArgument, "level constant must be positive");
    const Complex dir = std::polar(1.0, theta);
    auto g = [&](double r) { return level_value(jet_of(map, r * dir)) - c; };

    const double g0 = g(0.0);
    if (std::abs(g0) <= kStartResidualTol) return 0.0;

    double lo = 0.0;
    double glo = g0;
    for (std::size_t i = 1; i <= kRaySamples; ++i) {
        const double r = rmax * static_cast<double>(i) / kRaySamples;
        const double gr = g(r);
        if (gr == 0.0) return r * dir;
        if ((gr > 0.0) != (glo > 0.0)) {
            double hi = r;
            for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (mid == lo || mid == hi) break;
                const double gm = g(mid);
                if (gm == 0.0) return mid * dir;
                if ((gm > 0.0) == (glo > 0.0)) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            const double best = std::abs(g(lo)) <= std::abs(g(hi)) ? lo : hi;
            const double residual = std::abs(g(best));
            if (residual > kStartResidualTol * std::max(1.0, c)) {
                std::ostringstream msg;
                msg << "bisection stalled with residual " << residual;
                throw Error(ErrorKind::LevelNotOnRay, msg.str());
            }
            return best * dir;
        }
        lo = r;
        glo = gr;
    }
    std::ostringstream msg;
    msg << "level " << c << " is not attained on the ray arg z = " << theta << " within |z| <= " << rmax;
    throw Error(ErrorKind::LevelNotOnRay, msg.str());
}

LevelCurve trace_level_set(const MapSpec& map, Complex z0, double step, std::size_t max_points,
                           const TraceOptions& options)
{
    if (!(step > 0.0)) throw Error(ErrorKind::InvalidArgument, "step must be positive");
    if (max_points < 1) throw Error(ErrorKind::InvalidArgument, "max_points must be positive");
    const double radius = options.radius.value_or(default_radius(map));
    if (std::abs(z0) > radius) throw Error(ErrorKind::RadiusExceeded, "start point outside the trace radius");

    const double at_start = level_value(jet_of(map, z0));
    const double c = options.level.value_or(at_start);
    if (std::abs(at_start - c) > 1e-8) {
        throw Error(ErrorKind::LevelNotOnRay, "start point is not on the requested level");
    }
    if (at_start != c) {
        const auto fixed = correct(map, z0, c);
        if (!fixed) throw Error(ErrorKind::LevelNotOnRay, "could not project the start point onto the level");
        z0 = fixed->z;
    }
    if (std::abs(p_field(jet_of(map, z0))) <= options.p_min) {
        throw Error(ErrorKind::NormalVanished, "|p| at the start point is below the tracer floor");
    }

    LevelCurve curve;
    curve.c = c;
    const March forward = march(map, z0, c, step, 1.0, max_points - 1, radius, options.p_min, true);
    curve.forward_stop = forward.stop;
    curve.closed = forward.stop == TraceStop::Closed;

    std::vector<Complex> zs;
    if (!curve.closed) {
        const std::size_t used = 1 + forward.points.size();
        const March backward = march(map, z0, c, step, -1.0, max_points - used, radius, options.p_min, false);
        curve.backward_stop = backward.stop;
        zs.assign(backward.points.rbegin(), backward.points.rend());
    }
    zs.push_back(z0);
    zs.insert(zs.end(), forward.points.begin(), forward.points.end());

    curve.points.reserve(zs.size());
    double s = 0.0;
    for (std::size_t i = 0; i < zs.size(); ++i) {
        if (i > 0) s += std::abs(zs[i] - zs[i - 1]);
        const Jet j = jet_of(map, zs[i]);
        LevelPoint pt;
        pt.s = s;
        pt.z = zs[i];
        pt.w = j.f0;
        pt.p = p_field(j);
        pt.k = disk_curvature(j);
        pt.kappa = image_curvature(j);
        pt.residual = std::abs(level_value(j) - c);
        curve.points.push_back(pt);
    }
    return curve;
}

double circumcircle_curvature(Complex a, Complex b, Complex c)
{
    const Complex ab = b - a;
    const Complex bc = c - b;
    const double denom = std::abs(ab) * std::abs(bc) * std::abs(c - a);
    if (denom == 0.0) return 0.0;
    const double cross = (std::conj(ab) * bc).imag();
    return -2.0 * cross / denom;
}

std::vector<DiscreteCurvature> discrete_curvature(const LevelCurve& curve, bool image_plane)
{
    const auto& pts = curve.points;
    const std::size_t n = pts.size();
    std::vector<DiscreteCurvature> out;
    if (n < 3) return out;
    auto at = [&](std::size_t i) { return image_plane ? pts[i].w : pts[i].z; };
    if (curve.closed) {
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            out.push_back({i, circumcircle_curvature(at((i + n - 1) % n), at(i), at((i + 1) % n))});
        }
    } else {
        out.reserve(n - 2);
        for (std::size_t i = 1; i + 1 < n; ++i) {
            out.push_back({i, circumcircle_curvature(at(i - 1), at(i), at(i + 1))});
        }
    }
    return out;
}

} // namespace diskmap
