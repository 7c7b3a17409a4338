#include "kg/spectral.hpp"

#include <cmath>
#include <utility>

namespace kg {

namespace {

constexpr Complex kImag(0.0, 1.0);

// Applies f(k) |-> factor(E(k)) * fhat(k) in the Fourier basis, returning the
// result in the input's representation.
template <typename Factor>
ComplexField apply_diagonal(const ComplexField& f, const OperatorSymbol& sym, Factor&& factor)
{
    if (f.grid() != sym.grid())
        throw ConfigError("spectral operator: field and symbol live on different grids");
    const bool was_position = f.representation() == Representation::position;
    const ComplexField spec = f.to(Representation::spectral);
    std::vector<Complex> values(spec.values().begin(), spec.values().end());
    auto symbol = sym.values();
    for (std::size_t i = 0; i < values.size(); ++i)
        values[i] *= factor(symbol[i]);
    ComplexField out(f.grid_ptr(), Representation::spectral, std::move(values));
    return was_position ? out.to(Representation::position) : out;
}

} // namespace

OperatorSymbol::OperatorSymbol(GridPtr grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values))
{
    if (!grid_)
        throw ConfigError("OperatorSymbol: null grid");
    if (values_.size() != grid_->size())
        throw ConfigError("OperatorSymbol: value count does not match the grid");
    min_value_ = values_.front();
    max_value_ = values_.front();
    for (double v : values_) {
        if (!std::isfinite(v) || v <= 0.0)
            throw ConfigError("OperatorSymbol: symbol values must be positive and finite");
        min_value_ = std::min(min_value_, v);
        max_value_ = std::max(max_value_, v);
    }
}

OperatorSymbol build_symbol(const GridPtr& grid, const PhysicalParams& params)
{
    if (!grid)
        throw ConfigError("build_symbol: null grid");
    params.validate();
    const double rest_energy_sq = std::pow(params.mass * params.c * params.c, 2);
    const double ck_factor = std::pow(params.c * params.hbar, 2);
    std::vector<double> values(grid->size());
    for (std::size_t i = 0; i < values.size(); ++i)
        values[i] = std::sqrt(rest_energy_sq + ck_factor * grid->k_squared(i));
    return OperatorSymbol(grid, std::move(values));
}

ComplexField apply_h(const ComplexField& f, const OperatorSymbol& sym)
{
    return apply_diagonal(f, sym, [](double e) { return e; });
}

ComplexField apply_h_inv(const ComplexField& f, const OperatorSymbol& sym)
{
    return apply_diagonal(f, sym, [](double e) { return 1.0 / e; });
}

ComplexField apply_d(const ComplexField& f, const OperatorSymbol& sym)
{
    return apply_diagonal(f, sym, [](double e) { return kImag * e; });
}

ComplexField apply_d_star(const ComplexField& f, const OperatorSymbol& sym)
{
    return apply_diagonal(f, sym, [](double e) { return -kImag * e; });
}

ComplexField apply_d_inv(const ComplexField& f, const OperatorSymbol& sym)
{
    return apply_diagonal(f, sym, [](double e) { return -kImag / e; });
}

ComplexField apply_pi(const ComplexField& f, const ComplexField& dfdt, Sign sign,
                      const OperatorSymbol& sym, const PhysicalParams& params)
{
    if (f.grid() != dfdt.grid())
        throw ConfigError("apply_pi: f and df/dt live on different grids");
    params.validate();
    const ComplexField hinv_spec =
        apply_h_inv(scaled(dfdt.to(Representation::spectral), params.hbar), sym);
    const Complex factor = (sign == Sign::plus) ? kImag : -kImag;
    const ComplexField result =
        lin_comb(1.0, f.to(Representation::spectral), factor, hinv_spec);
    return f.representation() == Representation::position
               ? result.to(Representation::position)
               : result;
}

} // namespace kg
