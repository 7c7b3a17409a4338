#include "kg/grid.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace kg {

void PhysicalParams::validate() const
{
    if (!(hbar > 0.0) || !std::isfinite(hbar))
        throw ConfigError("params.hbar must be a positive finite real");
    if (!(c > 0.0) || !std::isfinite(c))
        throw ConfigError("params.c must be a positive finite real");
    if (!(mass > 0.0) || !std::isfinite(mass))
        throw ConfigError(
            "params.mass must be > 0: the operator D = i*sqrt(m^2 c^4 - hbar^2 c^2 Lap) "
            "is invertible only for positive mass");
}

GridPtr GridSpec::make(int dim, std::vector<int> points, std::vector<double> lengths)
{
    if (dim < 1 || dim > 3)
        throw ConfigError("grid.dim must be 1, 2, or 3");
    if (points.size() != static_cast<std::size_t>(dim))
        throw ConfigError("grid.points must list exactly one entry per dimension");
    if (lengths.size() != static_cast<std::size_t>(dim))
        throw ConfigError("grid.lengths must list exactly one entry per dimension");

    auto grid = std::shared_ptr<GridSpec>(new GridSpec());
    grid->dim_ = dim;
    grid->points_ = std::move(points);
    grid->lengths_ = std::move(lengths);

    grid->size_ = 1;
    grid->cell_volume_ = 1.0;
    grid->total_volume_ = 1.0;
    for (int axis = 0; axis < dim; ++axis) {
        const int n = grid->points_[static_cast<std::size_t>(axis)];
        const double len = grid->lengths_[static_cast<std::size_t>(axis)];
        if (n < 2) {
            std::ostringstream msg;
            msg << "grid.points[" << axis << "] = " << n << ": need at least 2 points per axis";
            throw ConfigError(msg.str());
        }
        if (n % 2 != 0) {
            std::ostringstream msg;
            msg << "grid.points[" << axis << "] = " << n
                << ": point counts must be even so the wavenumber range [-N/2, N/2) is symmetric";
            throw ConfigError(msg.str());
        }
        if (!(len > 0.0) || !std::isfinite(len)) {
            std::ostringstream msg;
            msg << "grid.lengths[" << axis << "] must be a positive finite real";
            throw ConfigError(msg.str());
        }
        grid->size_ *= static_cast<std::size_t>(n);
        grid->cell_volume_ *= len / n;
        grid->total_volume_ *= len;
    }

    grid->wavenumbers_.resize(static_cast<std::size_t>(dim));
    for (int axis = 0; axis < dim; ++axis) {
        const int n = grid->points_[static_cast<std::size_t>(axis)];
        const double len = grid->lengths_[static_cast<std::size_t>(axis)];
        auto& ks = grid->wavenumbers_[static_cast<std::size_t>(axis)];
        ks.resize(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            const int wrapped = (j < n / 2) ? j : j - n;
            ks[static_cast<std::size_t>(j)] = 2.0 * std::numbers::pi * wrapped / len;
        }
    }
    return grid;
}

std::array<int, 3> GridSpec::unflatten(std::size_t flat) const
{
    std::array<int, 3> idx = {0, 0, 0};
    for (int axis = dim_ - 1; axis >= 0; --axis) {
        const auto n = static_cast<std::size_t>(points_[static_cast<std::size_t>(axis)]);
        idx[static_cast<std::size_t>(axis)] = static_cast<int>(flat % n);
        flat /= n;
    }
    return idx;
}

std::size_t GridSpec::flatten(std::span<const int> indices) const
{
    if (indices.size() != static_cast<std::size_t>(dim_))
        throw ConfigError("flatten: index count does not match grid dimension");
    std::size_t flat = 0;
    for (int axis = 0; axis < dim_; ++axis) {
        const int n = points_[static_cast<std::size_t>(axis)];
        int j = indices[static_cast<std::size_t>(axis)] % n;
        if (j < 0)
            j += n;
        flat = flat * static_cast<std::size_t>(n) + static_cast<std::size_t>(j);
    }
    return flat;
}

double GridSpec::k_squared(std::size_t flat) const
{
    const auto idx = unflatten(flat);
    double k2 = 0.0;
    for (int axis = 0; axis < dim_; ++axis) {
        const double k = wavenumbers_[static_cast<std::size_t>(axis)]
                                     [static_cast<std::size_t>(idx[static_cast<std::size_t>(axis)])];
        k2 += k * k;
    }
    return k2;
}

bool GridSpec::operator==(const GridSpec& other) const
{
    return dim_ == other.dim_ && points_ == other.points_ && lengths_ == other.lengths_;
}

GridPtr make_grid(int dim, std::vector<int> points, std::vector<double> lengths)
{
    return GridSpec::make(dim, std::move(points), std::move(lengths));
}

double integrate_density(const GridSpec& grid, std::span<const double> values)
{
    if (values.size() != grid.size())
        throw ConfigError("integrate_density: value count does not match the grid");
    double sum = 0.0;
    for (double v : values) {
        if (!std::isfinite(v))
            throw BlowupError("integrate_density: non-finite value in integrand");
        sum += v;
    }
    return grid.cell_volume() * sum;
}

} // namespace kg
