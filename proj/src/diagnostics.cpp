#include "kg/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace kg {

namespace {
constexpr double kScaleFloor = 1e-30;
} // namespace

std::pair<double, double> conserved_norms(const DiagonalState& d)
{
    const double plus = integrate_density(d.eta_plus.grid(), abs_squared(d.eta_plus));
    const double minus = integrate_density(d.eta_minus.grid(), abs_squared(d.eta_minus));
    return {plus, minus};
}

std::vector<double> historical_rho(const ComplexField& psi, const ComplexField& dpsi_dt)
{
    if (psi.grid() != dpsi_dt.grid())
        throw ConfigError("historical_rho: fields live on different grids");
    const ComplexField p = psi.to(Representation::position);
    const ComplexField dp = dpsi_dt.to(Representation::position);
    std::vector<double> rho(p.size());
    auto pv = p.values();
    auto dv = dp.values();
    for (std::size_t i = 0; i < rho.size(); ++i)
        rho[i] = 2.0 * std::imag(std::conj(pv[i]) * dv[i]);
    return rho;
}

double energy_expectation(const ComplexField& f, const OperatorSymbol& sym)
{
    const Complex e = inner_product(f, apply_h(f, sym));
    const double scale = std::max(std::abs(e.real()), kScaleFloor);
    if (std::abs(e.imag()) > 1e-12 * scale) {
        std::ostringstream msg;
        msg << "energy_expectation: <f, H f> has a non-real part " << e.imag()
            << " (self-adjointness violated)";
        throw Error(msg.str());
    }
    return e.real();
}

double verify_rho_identity(const DiagonalState& d, const OperatorSymbol& sym,
                           const PhysicalParams& params)
{
    params.validate();
    const CoupledState state = recompose(d);
    const ComplexField dpsi_dt = dpsi_dt_of(state, sym, params);
    const double rho_int =
        integrate_density(state.psi.grid(), historical_rho(state.psi, dpsi_dt));

    const double e_plus = energy_expectation(d.eta_plus, sym);
    const double e_minus = energy_expectation(d.eta_minus, sym);

    const double defect = std::abs(rho_int + (e_plus - e_minus) / (2.0 * params.hbar));
    const double scale = std::max({std::abs(rho_int),
                                   (e_plus + e_minus) / (2.0 * params.hbar), kScaleFloor});
    return defect / scale;
}

double cross_term_reality_check(const DiagonalState& d, const OperatorSymbol& sym)
{
    const Complex a = inner_product(d.eta_minus, apply_h(d.eta_plus, sym));
    const Complex b = inner_product(d.eta_plus, apply_h(d.eta_minus, sym));
    const Complex cross = a - b;
    const double scale = std::max(
        l2_norm(d.eta_plus) * l2_norm(d.eta_minus) * sym.max_value(), kScaleFloor);
    return std::abs(cross.real()) / scale;
}

DiagnosticsRecord diagnose(const DiagonalState& d, const OperatorSymbol& sym,
                           const PhysicalParams& params)
{
    params.validate();
    DiagnosticsRecord rec;
    rec.t = d.t;
    std::tie(rec.norm_plus, rec.norm_minus) = conserved_norms(d);
    rec.energy_plus = energy_expectation(d.eta_plus, sym);
    rec.energy_minus = energy_expectation(d.eta_minus, sym);

    const CoupledState state = recompose(d);
    const ComplexField dpsi_dt = dpsi_dt_of(state, sym, params);
    rec.rho_integral =
        integrate_density(state.psi.grid(), historical_rho(state.psi, dpsi_dt));

    const double defect =
        std::abs(rec.rho_integral + (rec.energy_plus - rec.energy_minus) / (2.0 * params.hbar));
    const double scale =
        std::max({std::abs(rec.rho_integral),
                  (rec.energy_plus + rec.energy_minus) / (2.0 * params.hbar), kScaleFloor});
    rec.identity_defect = defect / scale;
    rec.constraint_defect = consistency_check(state, dpsi_dt, sym, params);
    return rec;
}

DiagnosticsRecord diagnose_from_psi(const ComplexField& psi, const ComplexField& dpsi_dt,
                                    double t, const OperatorSymbol& sym,
                                    const PhysicalParams& params)
{
    params.validate();
    DiagnosticsRecord rec;
    rec.t = t;
    const ComplexField eta_plus = apply_pi(psi, dpsi_dt, Sign::plus, sym, params);
    const ComplexField eta_minus = apply_pi(psi, dpsi_dt, Sign::minus, sym, params);
    const DiagonalState d(eta_plus, eta_minus, t);

    std::tie(rec.norm_plus, rec.norm_minus) = conserved_norms(d);
    rec.energy_plus = energy_expectation(d.eta_plus, sym);
    rec.energy_minus = energy_expectation(d.eta_minus, sym);
    rec.rho_integral = integrate_density(psi.grid(), historical_rho(psi, dpsi_dt));

    const double defect =
        std::abs(rec.rho_integral + (rec.energy_plus - rec.energy_minus) / (2.0 * params.hbar));
    const double scale =
        std::max({std::abs(rec.rho_integral),
                  (rec.energy_plus + rec.energy_minus) / (2.0 * params.hbar), kScaleFloor});
    rec.identity_defect = defect / scale;
    rec.constraint_defect = consistency_check(recompose(d), dpsi_dt, sym, params);
    return rec;
}

} // namespace kg
