#ifndef KG_DIAGNOSTICS_HPP
#define KG_DIAGNOSTICS_HPP

#include <utility>
#include <vector>

#include "kg/embedding.hpp"
#include "kg/field.hpp"
#include "kg/spectral.hpp"

namespace kg {

// One time sample of every monitored quantity.
//
// norm_plus/minus are the two positive conserved integrals int |eta_+-|^2.
// rho_integral is the integral of the textbook density rho = 2 Im(psi* dpsi/dt),
// which is an indefinite energy-like quantity, not a probability:
//   int rho = -(1/2 hbar) (<eta+, H eta+> - <eta-, H eta->).
// identity_defect measures that relation; constraint_defect measures the
// first coupled equation hbar dpsi/dt = -D chi.
struct DiagnosticsRecord {
    double t = 0.0;
    double norm_plus = 0.0;
    double norm_minus = 0.0;
    double energy_plus = 0.0;
    double energy_minus = 0.0;
    double rho_integral = 0.0;
    double identity_defect = 0.0;
    double constraint_defect = 0.0;
};

// (int |eta+|^2, int |eta-|^2); both nonnegative by construction.
std::pair<double, double> conserved_norms(const DiagonalState& d);

// Pointwise rho(x) = 2 Im(conj(psi) dpsi_dt), sampled in position space.
std::vector<double> historical_rho(const ComplexField& psi, const ComplexField& dpsi_dt);

// Re <f, H f>. The imaginary part must vanish by self-adjointness and is
// asserted (throws Error if it exceeds 1e-12 relative), not returned.
double energy_expectation(const ComplexField& f, const OperatorSymbol& sym);

// Normalized defect of int rho = -(1/2 hbar)(E+ - E-), with both sides
// computed independently: rho from the reconstructed (psi, dpsi/dt), the
// energies from <eta, H eta>.
double verify_rho_identity(const DiagonalState& d, const OperatorSymbol& sym,
                           const PhysicalParams& params);

// |Re I| / (||eta+|| ||eta-|| E_max) for I = int(eta-* H eta+ - eta+* H eta-),
// which is purely imaginary by self-adjointness of H.
double cross_term_reality_check(const DiagonalState& d, const OperatorSymbol& sym);

// Full record for one diagonal state.
DiagnosticsRecord diagnose(const DiagonalState& d, const OperatorSymbol& sym,
                           const PhysicalParams& params);

// Record for second-order data (psi, dpsi_dt), as produced by integrators
// that never form eta explicitly; eta is reconstructed via the projectors.
DiagnosticsRecord diagnose_from_psi(const ComplexField& psi, const ComplexField& dpsi_dt,
                                    double t, const OperatorSymbol& sym,
                                    const PhysicalParams& params);

} // namespace kg

#endif
