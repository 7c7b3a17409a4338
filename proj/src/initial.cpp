#include "kg/initial.hpp"

#include <cmath>
#include <sstream>

#include "kg/embedding.hpp"

namespace kg {

namespace {

constexpr Complex kImag(0.0, 1.0);
constexpr int kGaussianImages = 3;

ComplexField branch_derivative(const ComplexField& psi0, Branch branch,
                               const OperatorSymbol& sym, const PhysicalParams& params)
{
    switch (branch) {
    case Branch::plus:
        return scaled(apply_h(psi0, sym), -kImag / params.hbar);
    case Branch::minus:
        return scaled(apply_h(psi0, sym), kImag / params.hbar);
    case Branch::standing:
        return ComplexField::zeros(psi0.grid_ptr(), psi0.representation());
    }
    throw ConfigError("unknown branch");
}

// Raw (unnormalized) periodized Gaussian. The image sum factorizes per axis,
// so evaluate 1-D wrapped profiles and take their outer product.
std::vector<Complex> periodized_gaussian(const GridSpec& grid,
                                         const std::vector<double>& center, double width,
                                         const std::vector<double>& mean_wavenumber)
{
    std::vector<std::vector<Complex>> axis_profile(static_cast<std::size_t>(grid.dim()));
    for (int axis = 0; axis < grid.dim(); ++axis) {
        const int n = grid.points(axis);
        const double len = grid.length(axis);
        const double c = center[static_cast<std::size_t>(axis)];
        const double k = mean_wavenumber[static_cast<std::size_t>(axis)];
        auto& prof = axis_profile[static_cast<std::size_t>(axis)];
        prof.resize(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            const double x = grid.coordinate(axis, j);
            Complex sum(0.0, 0.0);
            for (int image = -kGaussianImages; image <= kGaussianImages; ++image) {
                const double shifted = x + image * len;
                const double arg = shifted - c;
                sum += std::exp(-arg * arg / (4.0 * width * width)) *
                       std::exp(Complex(0.0, k * shifted));
            }
            prof[static_cast<std::size_t>(j)] = sum;
        }
    }

    std::vector<Complex> values(grid.size());
    for (std::size_t flat = 0; flat < values.size(); ++flat) {
        const auto idx = grid.unflatten(flat);
        Complex v(1.0, 0.0);
        for (int axis = 0; axis < grid.dim(); ++axis)
            v *= axis_profile[static_cast<std::size_t>(axis)]
                             [static_cast<std::size_t>(idx[static_cast<std::size_t>(axis)])];
        values[flat] = v;
    }
    return values;
}

// Shape field for an InitialConditionSpec: a plane-wave mode when mode_index
// is set, otherwise a unit-normalized Gaussian. Scaled by the amplitude.
ComplexField shape_field(const InitialConditionSpec& spec, const GridPtr& grid,
                         const OperatorSymbol& sym, const PhysicalParams& params)
{
    if (!spec.mode_index.empty())
        return make_plane_wave(grid, spec.mode_index, Branch::standing, sym, params,
                               spec.amplitude)
            .psi0;
    return make_gaussian(grid, spec.center, spec.width, spec.mean_wavenumber,
                         Branch::standing, sym, params, spec.amplitude)
        .psi0;
}

void check_width(const GridSpec& grid, double width)
{
    if (!(width > 0.0) || !std::isfinite(width))
        throw ConfigError("initial.width must be a positive finite real");
    for (int axis = 0; axis < grid.dim(); ++axis) {
        if (width < 2.0 * grid.spacing(axis)) {
            std::ostringstream msg;
            msg << "initial.width = " << width << " is unresolvable: need width >= 2*dx = "
                << 2.0 * grid.spacing(axis) << " on axis " << axis;
            throw ConfigError(msg.str());
        }
        if (width > grid.length(axis) / 8.0) {
            std::ostringstream msg;
            msg << "initial.width = " << width << " does not fit the box: need width <= L/8 = "
                << grid.length(axis) / 8.0 << " on axis " << axis;
            throw ConfigError(msg.str());
        }
    }
}

} // namespace

InitialData make_plane_wave(const GridPtr& grid, const std::vector<int>& mode_index,
                            Branch branch, const OperatorSymbol& sym,
                            const PhysicalParams& params, Complex amplitude)
{
    if (!grid)
        throw ConfigError("make_plane_wave: null grid");
    params.validate();
    if (mode_index.size() != static_cast<std::size_t>(grid->dim()))
        throw ConfigError("initial.mode must list exactly one index per dimension");
    if (*grid != sym.grid())
        throw ConfigError("make_plane_wave: grid and symbol disagree");

    std::vector<double> k(static_cast<std::size_t>(grid->dim()));
    for (int axis = 0; axis < grid->dim(); ++axis) {
        const int n = grid->points(axis);
        int j = mode_index[static_cast<std::size_t>(axis)] % n;
        if (j < 0)
            j += n;
        k[static_cast<std::size_t>(axis)] = grid->wavenumbers(axis)[static_cast<std::size_t>(j)];
    }

    std::vector<Complex> values(grid->size());
    for (std::size_t flat = 0; flat < values.size(); ++flat) {
        const auto idx = grid->unflatten(flat);
        double phase = 0.0;
        for (int axis = 0; axis < grid->dim(); ++axis)
            phase += k[static_cast<std::size_t>(axis)] *
                     grid->coordinate(axis, idx[static_cast<std::size_t>(axis)]);
        values[flat] = amplitude * std::exp(Complex(0.0, phase));
    }
    ComplexField psi0(grid, Representation::position, std::move(values));

    if (branch == Branch::standing)
        return {psi0, ComplexField::zeros(grid, Representation::position)};
    const double energy = sym.values()[grid->flatten(mode_index)];
    const Complex factor =
        (branch == Branch::plus ? -kImag : kImag) * (energy / params.hbar);
    ComplexField dpsi = scaled(psi0, factor);
    return {std::move(psi0), std::move(dpsi)};
}

InitialData make_gaussian(const GridPtr& grid, const std::vector<double>& center,
                          double width, const std::vector<double>& mean_wavenumber,
                          Branch branch, const OperatorSymbol& sym,
                          const PhysicalParams& params, Complex amplitude)
{
    if (!grid)
        throw ConfigError("make_gaussian: null grid");
    params.validate();
    if (*grid != sym.grid())
        throw ConfigError("make_gaussian: grid and symbol disagree");
    if (center.size() != static_cast<std::size_t>(grid->dim()))
        throw ConfigError("initial.center must list exactly one coordinate per dimension");
    if (mean_wavenumber.size() != static_cast<std::size_t>(grid->dim()))
        throw ConfigError("initial.wavenumber must list exactly one component per dimension");
    check_width(*grid, width);

    ComplexField raw(grid, Representation::position,
                     periodized_gaussian(*grid, center, width, mean_wavenumber));
    const double norm = l2_norm(raw);
    if (norm <= 0.0)
        throw ConfigError("make_gaussian: packet vanished after periodization");
    ComplexField psi0 = scaled(raw, amplitude / norm);
    ComplexField dpsi = branch_derivative(psi0, branch, sym, params);
    return {std::move(psi0), std::move(dpsi)};
}

InitialData build_initial(const InitialConditionSpec& spec, const GridPtr& grid,
                          const OperatorSymbol& sym, const PhysicalParams& params)
{
    switch (spec.kind) {
    case InitialKind::plane_wave:
        return make_plane_wave(grid, spec.mode_index, spec.branch, sym, params,
                               spec.amplitude);
    case InitialKind::gaussian:
        return make_gaussian(grid, spec.center, spec.width, spec.mean_wavenumber,
                             spec.branch, sym, params, spec.amplitude);
    case InitialKind::pure_plus:
    case InitialKind::pure_minus: {
        const ComplexField base = shape_field(spec, grid, sym, params);
        const ComplexField zero = ComplexField::zeros(grid, base.representation());
        const bool plus = spec.kind == InitialKind::pure_plus;
        const DiagonalState d(plus ? base : zero, plus ? zero : base, 0.0);
        const CoupledState state = recompose(d);
        return {state.psi, dpsi_dt_of(state, sym, params)};
    }
    case InitialKind::superposition: {
        if (spec.components.empty())
            throw ConfigError("initial superposition needs at least one component");
        InitialData sum = build_initial(spec.components.front(), grid, sym, params);
        for (std::size_t i = 1; i < spec.components.size(); ++i) {
            if (spec.components[i].kind == InitialKind::superposition)
                throw ConfigError("nested superpositions are not supported");
            InitialData part = build_initial(spec.components[i], grid, sym, params);
            sum.psi0 = add(sum.psi0, part.psi0.to(sum.psi0.representation()));
            sum.dpsi_dt0 = add(sum.dpsi_dt0, part.dpsi_dt0.to(sum.dpsi_dt0.representation()));
        }
        return sum;
    }
    }
    throw ConfigError("unknown initial-condition kind");
}

} // namespace kg
