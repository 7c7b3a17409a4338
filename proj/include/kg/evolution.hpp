#ifndef KG_EVOLUTION_HPP
#define KG_EVOLUTION_HPP

#include <functional>
#include <optional>

#include "kg/diagnostics.hpp"
#include "kg/embedding.hpp"
#include "kg/field.hpp"
#include "kg/spectral.hpp"

namespace kg {

enum class Scheme { exact, rk4_coupled, leapfrog_kg };

// Time-stepping parameters. The leapfrog scheme additionally requires
// dt < 2 hbar / E_max, checked against the symbol when stepping.
struct IntegratorConfig {
    Scheme scheme = Scheme::exact;
    double dt = 0.01;
    double t_final = 10.0;
    long sample_stride = 1;

    void validate() const;

    bool operator==(const IntegratorConfig&) const = default;
};

// Exact propagation of the decoupled flows: in spectral space
//   eta+ <- exp(-i E(k) dt / hbar) eta+,   eta- <- exp(+i E(k) dt / hbar) eta-.
// Unit-modulus multipliers, so both norms are preserved to roundoff for any dt.
DiagonalState step_exact(const DiagonalState& d, double dt, const OperatorSymbol& sym,
                         const PhysicalParams& params);

// Classical fourth-order Runge-Kutta step of the coupled system
//   i hbar d/dt psi = H chi,   i hbar d/dt chi = H psi.
CoupledState step_rk4(const CoupledState& state, double dt, const OperatorSymbol& sym,
                      const PhysicalParams& params);

// Central-difference step of the second-order equation hbar^2 psi_tt = -H^2 psi:
//   psi_next = 2 psi_curr - psi_prev - (dt^2/hbar^2) H^2 psi_curr.
// Never touches chi or eta, so it serves as an independent oracle.
// Throws ConfigError when dt >= 2 hbar / E_max (unstable).
ComplexField step_leapfrog(const ComplexField& psi_prev, const ComplexField& psi_curr,
                           double dt, const OperatorSymbol& sym, const PhysicalParams& params);

using DiagnosticsSink = std::function<void(const DiagnosticsRecord&)>;
using StateSink = std::function<void(const CoupledState&)>;

// Advances the state through round(t_final/dt) steps of dt, emitting a
// record at t = t0, every sample_stride steps, and at the final step. The
// optional state sink receives the coupled state on the same schedule
// (snapshot hook). Aborts with BlowupError if any field value goes
// non-finite.
CoupledState run(const CoupledState& initial, const IntegratorConfig& cfg,
                 const OperatorSymbol& sym, const PhysicalParams& params,
                 const DiagnosticsSink& sink = {}, const StateSink& state_sink = {});

DiagonalState run(const DiagonalState& initial, const IntegratorConfig& cfg,
                  const OperatorSymbol& sym, const PhysicalParams& params,
                  const DiagnosticsSink& sink = {}, const StateSink& state_sink = {});

} // namespace kg

#endif
