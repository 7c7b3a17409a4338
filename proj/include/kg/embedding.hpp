#ifndef KG_EMBEDDING_HPP
#define KG_EMBEDDING_HPP

#include "kg/field.hpp"
#include "kg/spectral.hpp"

namespace kg {

// Builds the coupled state from second-order initial data (psi0, dpsi_dt0):
//   chi = -D^{-1} (hbar dpsi_dt0) = i H^{-1} (hbar dpsi_dt0),
// so that hbar d/dt psi = -D chi holds by construction. chi is always derived
// from the data, never supplied directly.
CoupledState embed(const ComplexField& psi0, const ComplexField& dpsi_dt0,
                   const OperatorSymbol& sym, const PhysicalParams& params,
                   double t = 0.0);

// d/dt psi from the first coupled equation: -(i/hbar) H chi.
ComplexField dpsi_dt_of(const CoupledState& state, const OperatorSymbol& sym,
                        const PhysicalParams& params);

// d/dt chi from the second coupled equation: -(i/hbar) H psi.
ComplexField dchi_dt_of(const CoupledState& state, const OperatorSymbol& sym,
                        const PhysicalParams& params);

// eta+ = psi + chi, eta- = psi - chi.
DiagonalState diagonalize(const CoupledState& state);

// psi = (eta+ + eta-)/2, chi = (eta+ - eta-)/2. Inverse of diagonalize, and
// the entry point for building states directly from (eta+, eta-) data.
CoupledState recompose(const DiagonalState& d);

// Relative defect of the first coupled equation:
//   || hbar dpsi_dt + D chi || / max(|| hbar dpsi_dt ||, eps).
// Zero (to roundoff) for states produced by embed.
double consistency_check(const CoupledState& state, const ComplexField& dpsi_dt,
                         const OperatorSymbol& sym, const PhysicalParams& params);

} // namespace kg

#endif
