#include "kg/embedding.hpp"

#include <algorithm>
#include <cmath>

namespace kg {

namespace {
constexpr Complex kImag(0.0, 1.0);
// Floor for relative-defect denominators, so the zero state stays well defined.
constexpr double kDefectFloor = 1e-300;
} // namespace

CoupledState embed(const ComplexField& psi0, const ComplexField& dpsi_dt0,
                   const OperatorSymbol& sym, const PhysicalParams& params, double t)
{
    if (psi0.grid() != dpsi_dt0.grid())
        throw ConfigError("embed: psi0 and dpsi_dt0 live on different grids");
    params.validate();
    ComplexField chi = scaled(apply_d_inv(dpsi_dt0, sym), -params.hbar);
    return CoupledState(psi0, std::move(chi), t);
}

ComplexField dpsi_dt_of(const CoupledState& state, const OperatorSymbol& sym,
                        const PhysicalParams& params)
{
    params.validate();
    return scaled(apply_h(state.chi, sym), -kImag / params.hbar);
}

ComplexField dchi_dt_of(const CoupledState& state, const OperatorSymbol& sym,
                        const PhysicalParams& params)
{
    params.validate();
    return scaled(apply_h(state.psi, sym), -kImag / params.hbar);
}

DiagonalState diagonalize(const CoupledState& state)
{
    const ComplexField chi = state.chi.to(state.psi.representation());
    return DiagonalState(add(state.psi, chi), sub(state.psi, chi), state.t);
}

CoupledState recompose(const DiagonalState& d)
{
    const ComplexField minus = d.eta_minus.to(d.eta_plus.representation());
    return CoupledState(scaled(add(d.eta_plus, minus), 0.5),
                        scaled(sub(d.eta_plus, minus), 0.5), d.t);
}

double consistency_check(const CoupledState& state, const ComplexField& dpsi_dt,
                         const OperatorSymbol& sym, const PhysicalParams& params)
{
    params.validate();
    const ComplexField lhs = scaled(dpsi_dt, params.hbar);
    const ComplexField dchi = apply_d(state.chi, sym).to(lhs.representation());
    const double defect = l2_norm(add(lhs, dchi));
    return defect / std::max(l2_norm(lhs), kDefectFloor);
}

} // namespace kg
