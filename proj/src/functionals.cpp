#include "diskmap/functionals.hpp"

#include <cmath>

#include "diskmap/errors.hpp"

namespace diskmap {

namespace {

void require_regular(const Jet& j)
{
    if (j.f1 == Complex{}) throw Error(ErrorKind::SingularPoint, "f'(z) = 0");
}

double one_minus_r2(const Jet& j) { return 1.0 - std::norm(j.z); }

} // namespace

Complex pre_schwarzian(const Jet& j)
{
    require_regular(j);
    return j.f2 / j.f1;
}

Complex schwarzian(const Jet& j)
{
    const Complex pre = pre_schwarzian(j);
    return j.f3 / j.f1 - 1.5 * pre * pre;
}

double classical_lhs(const Jet& j) { return 1.0 + (j.z * pre_schwarzian(j)).real(); }

double rhs2(const Jet& j) { return 0.25 * one_minus_r2(j) * std::norm(pre_schwarzian(j)); }

double rhs3(const Jet& j)
{
    return 0.25 * one_minus_r2(j) * (2.0 * std::abs(schwarzian(j)) + std::norm(pre_schwarzian(j)));
}

Complex p_field(const Jet& j) { return std::conj(j.z) - 0.5 * one_minus_r2(j) * pre_schwarzian(j); }

double nehari_value(const Jet& j)
{
    const double w = one_minus_r2(j);
    return w * w * std::abs(schwarzian(j));
}

double kim_minda(const Jet& j) { return nehari_value(j) + 2.0 * std::norm(p_field(j)); }

double poincare_density(const Jet& j)
{
    require_regular(j);
    return 1.0 / (one_minus_r2(j) * std::abs(j.f1));
}

double equivalence_identity(const Jet& j)
{
    return std::abs((2.0 - kim_minda(j)) - 2.0 * one_minus_r2(j) * (classical_lhs(j) - rhs3(j)));
}

SchwarzPickSlack schwarz_pick_slack(const Jet& j)
{
    const Complex phi = phi_of(j);
    const double mod = std::abs(phi);
    if (mod >= 1.0 - kUnimodularTol) return UnimodularFlag{};
    return 1.0 / one_minus_r2(j) - std::abs(phi_derivative(j)) / (1.0 - mod * mod);
}

SchwarzPickSlack schwarz_pick_slack(const MapSpec& map, Complex z) { return schwarz_pick_slack(jet_of(map, z)); }

Diagnostics diagnostics(const Jet& j)
{
    require_regular(j);
    Diagnostics d;
    const double w = one_minus_r2(j);
    d.pre = j.f2 / j.f1;
    d.schwarz = j.f3 / j.f1 - 1.5 * d.pre * d.pre;
    d.p = std::conj(j.z) - 0.5 * w * d.pre;
    const double abs_s = std::abs(d.schwarz);
    const double pre2 = std::norm(d.pre);
    d.lhs1 = 1.0 + (j.z * d.pre).real();
    d.rhs2 = 0.25 * w * pre2;
    d.rhs3 = 0.25 * w * (2.0 * abs_s + pre2);
    d.nehari = w * w * abs_s;
    d.km = d.nehari + 2.0 * std::norm(d.p);
    d.lambda = 1.0 / (w * std::abs(j.f1));
    try {
        d.sp_slack = schwarz_pick_slack(j);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::DegenerateDenominator) throw;
        d.sp_slack.reset();
    }
    return d;
}

double slack_tolerance(const MapSpec& map) noexcept { return map.series_backed() ? kSeriesTol : kClosedFormTol; }

} // namespace diskmap
