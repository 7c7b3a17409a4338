#include "kg/evolution.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace kg {

namespace {

constexpr Complex kImag(0.0, 1.0);

ComplexField phase_multiply(const ComplexField& f, const OperatorSymbol& sym,
                            double dt_over_hbar, double direction)
{
    const ComplexField spec = f.to(Representation::spectral);
    std::vector<Complex> values(spec.values().begin(), spec.values().end());
    auto symbol = sym.values();
    for (std::size_t i = 0; i < values.size(); ++i)
        values[i] *= std::exp(Complex(0.0, direction * symbol[i] * dt_over_hbar));
    ComplexField out(f.grid_ptr(), Representation::spectral, std::move(values));
    return f.representation() == Representation::position ? out.to(Representation::position)
                                                          : out;
}

void check_leapfrog_stability(double dt, const OperatorSymbol& sym, const PhysicalParams& params)
{
    const double bound = 2.0 * params.hbar / sym.max_value();
    if (!(dt < bound)) {
        std::ostringstream msg;
        msg << "leapfrog unstable: dt = " << dt << " but the scheme requires dt < 2*hbar/E_max = "
            << bound;
        throw ConfigError(msg.str());
    }
}

long step_count(const IntegratorConfig& cfg)
{
    return std::lround(cfg.t_final / cfg.dt);
}

DiagonalState run_exact(const DiagonalState& initial, const IntegratorConfig& cfg,
                        const OperatorSymbol& sym, const PhysicalParams& params,
                        const DiagnosticsSink& sink, const StateSink& state_sink)
{
    const long n = step_count(cfg);
    const double t0 = initial.t;
    DiagonalState d(initial.eta_plus.to(Representation::spectral),
                    initial.eta_minus.to(Representation::spectral), t0);
    if (sink)
        sink(diagnose(d, sym, params));
    if (state_sink)
        state_sink(recompose(d));
    for (long i = 1; i <= n; ++i) {
        d = step_exact(d, cfg.dt, sym, params);
        if ((sink || state_sink) && (i % cfg.sample_stride == 0 || i == n)) {
            DiagonalState sample(d.eta_plus, d.eta_minus, t0 + static_cast<double>(i) * cfg.dt);
            if (sink)
                sink(diagnose(sample, sym, params));
            if (state_sink)
                state_sink(recompose(sample));
        }
    }
    return DiagonalState(d.eta_plus, d.eta_minus, t0 + static_cast<double>(n) * cfg.dt);
}

CoupledState run_rk4(const CoupledState& initial, const IntegratorConfig& cfg,
                     const OperatorSymbol& sym, const PhysicalParams& params,
                     const DiagnosticsSink& sink, const StateSink& state_sink)
{
    const long n = step_count(cfg);
    const double t0 = initial.t;
    CoupledState state(initial.psi.to(Representation::spectral),
                       initial.chi.to(Representation::spectral), t0);
    if (sink)
        sink(diagnose(diagonalize(state), sym, params));
    if (state_sink)
        state_sink(state);
    for (long i = 1; i <= n; ++i) {
        state = step_rk4(state, cfg.dt, sym, params);
        if ((sink || state_sink) && (i % cfg.sample_stride == 0 || i == n)) {
            CoupledState sample(state.psi, state.chi, t0 + static_cast<double>(i) * cfg.dt);
            if (sink)
                sink(diagnose(diagonalize(sample), sym, params));
            if (state_sink)
                state_sink(sample);
        }
    }
    return CoupledState(state.psi, state.chi, t0 + static_cast<double>(n) * cfg.dt);
}

CoupledState run_leapfrog(const CoupledState& initial, const IntegratorConfig& cfg,
                          const OperatorSymbol& sym, const PhysicalParams& params,
                          const DiagnosticsSink& sink, const StateSink& state_sink)
{
    check_leapfrog_stability(cfg.dt, sym, params);
    const long n = step_count(cfg);
    const double t0 = initial.t;
    const double dt = cfg.dt;
    const double hbar = params.hbar;

    const ComplexField psi0 = initial.psi.to(Representation::spectral);
    const ComplexField dpsi0 =
        dpsi_dt_of(initial, sym, params).to(Representation::spectral);
    if (sink)
        sink(diagnose_from_psi(psi0, dpsi0, t0, sym, params));
    if (state_sink)
        state_sink(embed(psi0, dpsi0, sym, params, t0));
    if (n == 0)
        return embed(psi0, dpsi0, sym, params, t0);

    // Second-order Taylor start keeps the global order at 2.
    const ComplexField h2_psi0 = apply_h(apply_h(psi0, sym), sym);
    ComplexField psi_prev = psi0;
    ComplexField psi_curr = lin_comb(1.0, lin_comb(1.0, psi0, dt, dpsi0),
                                     -dt * dt / (2.0 * hbar * hbar), h2_psi0);

    ComplexField dpsi_final = dpsi0;
    for (long i = 1; i <= n; ++i) {
        ComplexField psi_next = step_leapfrog(psi_prev, psi_curr, dt, sym, params);
        const bool on_schedule = (i % cfg.sample_stride == 0 || i == n);
        const bool want_sample = (sink || state_sink) && on_schedule;
        const bool at_end = (i == n);
        if (want_sample || at_end) {
            const ComplexField dpsi_central =
                scaled(sub(psi_next, psi_prev), 1.0 / (2.0 * dt));
            const double t_i = t0 + static_cast<double>(i) * dt;
            if (want_sample && sink)
                sink(diagnose_from_psi(psi_curr, dpsi_central, t_i, sym, params));
            if (want_sample && state_sink)
                state_sink(embed(psi_curr, dpsi_central, sym, params, t_i));
            if (at_end)
                dpsi_final = dpsi_central;
        }
        if (!at_end) {
            psi_prev = std::move(psi_curr);
            psi_curr = std::move(psi_next);
        }
    }
    return embed(psi_curr, dpsi_final, sym, params, t0 + static_cast<double>(n) * dt);
}

} // namespace

void IntegratorConfig::validate() const
{
    if (!(dt > 0.0) || !std::isfinite(dt))
        throw ConfigError("integrator.dt must be a positive finite real");
    if (!(t_final >= 0.0) || !std::isfinite(t_final))
        throw ConfigError("integrator.t_final must be a nonnegative finite real");
    if (sample_stride < 1)
        throw ConfigError("integrator.sample_stride must be >= 1");
}

DiagonalState step_exact(const DiagonalState& d, double dt, const OperatorSymbol& sym,
                         const PhysicalParams& params)
{
    params.validate();
    if (d.eta_plus.grid() != sym.grid())
        throw ConfigError("step_exact: state and symbol live on different grids");
    const double dt_over_hbar = dt / params.hbar;
    return DiagonalState(phase_multiply(d.eta_plus, sym, dt_over_hbar, -1.0),
                         phase_multiply(d.eta_minus, sym, dt_over_hbar, +1.0), d.t + dt);
}

CoupledState step_rk4(const CoupledState& state, double dt, const OperatorSymbol& sym,
                      const PhysicalParams& params)
{
    params.validate();
    if (state.psi.grid() != sym.grid())
        throw ConfigError("step_rk4: state and symbol live on different grids");
    const Complex deriv_factor = -kImag / params.hbar;

    struct Pair {
        ComplexField psi;
        ComplexField chi;
    };
    auto deriv = [&](const Pair& y) -> Pair {
        return {scaled(apply_h(y.chi, sym), deriv_factor),
                scaled(apply_h(y.psi, sym), deriv_factor)};
    };
    auto shifted = [&](const Pair& y, double h, const Pair& k) -> Pair {
        return {lin_comb(1.0, y.psi, h, k.psi), lin_comb(1.0, y.chi, h, k.chi)};
    };

    const Pair y{state.psi, state.chi};
    const Pair k1 = deriv(y);
    const Pair k2 = deriv(shifted(y, 0.5 * dt, k1));
    const Pair k3 = deriv(shifted(y, 0.5 * dt, k2));
    const Pair k4 = deriv(shifted(y, dt, k3));

    auto combine = [&](const ComplexField& y0, const ComplexField& a, const ComplexField& b,
                       const ComplexField& c, const ComplexField& d4) {
        ComplexField sum = lin_comb(1.0, a, 2.0, b);
        sum = lin_comb(1.0, sum, 2.0, c);
        sum = lin_comb(1.0, sum, 1.0, d4);
        return lin_comb(1.0, y0, dt / 6.0, sum);
    };
    return CoupledState(combine(y.psi, k1.psi, k2.psi, k3.psi, k4.psi),
                        combine(y.chi, k1.chi, k2.chi, k3.chi, k4.chi), state.t + dt);
}

ComplexField step_leapfrog(const ComplexField& psi_prev, const ComplexField& psi_curr,
                           double dt, const OperatorSymbol& sym, const PhysicalParams& params)
{
    params.validate();
    if (psi_prev.grid() != psi_curr.grid() || psi_curr.grid() != sym.grid())
        throw ConfigError("step_leapfrog: fields and symbol live on different grids");
    check_leapfrog_stability(dt, sym, params);
    const ComplexField h2_psi = apply_h(apply_h(psi_curr, sym), sym);
    const ComplexField two_curr_minus_prev =
        lin_comb(2.0, psi_curr, -1.0, psi_prev.to(psi_curr.representation()));
    return lin_comb(1.0, two_curr_minus_prev, -dt * dt / (params.hbar * params.hbar),
                    h2_psi.to(psi_curr.representation()));
}

CoupledState run(const CoupledState& initial, const IntegratorConfig& cfg,
                 const OperatorSymbol& sym, const PhysicalParams& params,
                 const DiagnosticsSink& sink, const StateSink& state_sink)
{
    cfg.validate();
    params.validate();
    if (initial.psi.grid() != sym.grid())
        throw ConfigError("run: state and symbol live on different grids");
    try {
        switch (cfg.scheme) {
        case Scheme::exact:
            return recompose(run_exact(diagonalize(initial), cfg, sym, params, sink, state_sink));
        case Scheme::rk4_coupled:
            return run_rk4(initial, cfg, sym, params, sink, state_sink);
        case Scheme::leapfrog_kg:
            return run_leapfrog(initial, cfg, sym, params, sink, state_sink);
        }
    } catch (const BlowupError& e) {
        throw BlowupError(std::string("numerical blowup during run: ") + e.what());
    }
    throw ConfigError("run: unknown integrator scheme");
}

DiagonalState run(const DiagonalState& initial, const IntegratorConfig& cfg,
                  const OperatorSymbol& sym, const PhysicalParams& params,
                  const DiagnosticsSink& sink, const StateSink& state_sink)
{
    cfg.validate();
    params.validate();
    if (initial.eta_plus.grid() != sym.grid())
        throw ConfigError("run: state and symbol live on different grids");
    if (cfg.scheme == Scheme::exact) {
        try {
            return run_exact(initial, cfg, sym, params, sink, state_sink);
        } catch (const BlowupError& e) {
            throw BlowupError(std::string("numerical blowup during run: ") + e.what());
        }
    }
    return diagonalize(run(recompose(initial), cfg, sym, params, sink, state_sink));
}

} // namespace kg
