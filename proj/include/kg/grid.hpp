#ifndef KG_GRID_HPP
#define KG_GRID_HPP

#include <array>
#include <memory>
#include <span>
#include <vector>

#include "kg/errors.hpp"

namespace kg {

// Physical constants defining the dispersion E(k) = sqrt(m^2 c^4 + c^2 hbar^2 |k|^2).
// Natural units hbar = c = m = 1 are the shipped defaults; any positive values work.
struct PhysicalParams {
    double hbar = 1.0;
    double c = 1.0;
    double mass = 1.0;

    void validate() const;

    bool operator==(const PhysicalParams&) const = default;
};

// Uniform periodic grid in 1-3 dimensions. Axis i has points(i) samples on
// [0, length(i)) with spacing length(i)/points(i). Point counts must be even
// so the symmetric wavenumber range [-N/2, N/2) is well defined; the Nyquist
// mode is kept and treated like any other.
//
// Flattened storage is row-major over axes: flat = (i0*N1 + i1)*N2 + i2.
class GridSpec {
public:
    static std::shared_ptr<const GridSpec> make(int dim,
                                                std::vector<int> points,
                                                std::vector<double> lengths);

    int dim() const { return dim_; }
    std::size_t size() const { return size_; }
    int points(int axis) const { return points_[static_cast<std::size_t>(axis)]; }
    double length(int axis) const { return lengths_[static_cast<std::size_t>(axis)]; }
    double spacing(int axis) const
    {
        return lengths_[static_cast<std::size_t>(axis)] / points_[static_cast<std::size_t>(axis)];
    }
    double cell_volume() const { return cell_volume_; }
    double total_volume() const { return total_volume_; }

    // x-coordinate of sample `index` along `axis`.
    double coordinate(int axis, int index) const { return spacing(axis) * index; }

    // Wavenumbers along one axis, in index order: k_j = 2*pi*wrap(j)/L with
    // wrap(j) in [-N/2, N/2).
    const std::vector<double>& wavenumbers(int axis) const
    {
        return wavenumbers_[static_cast<std::size_t>(axis)];
    }

    // |k|^2 at a flattened index.
    double k_squared(std::size_t flat) const;

    // Decompose a flattened index into per-axis indices (axes beyond dim are 0).
    std::array<int, 3> unflatten(std::size_t flat) const;

    // Flatten per-axis indices; each index is wrapped modulo its point count,
    // so signed mode indices address the symmetric wavenumber range.
    std::size_t flatten(std::span<const int> indices) const;

    bool operator==(const GridSpec& other) const;
    bool operator!=(const GridSpec& other) const { return !(*this == other); }

private:
    GridSpec() = default;

    int dim_ = 0;
    std::vector<int> points_;
    std::vector<double> lengths_;
    std::size_t size_ = 0;
    double cell_volume_ = 0.0;
    double total_volume_ = 0.0;
    std::vector<std::vector<double>> wavenumbers_;
};

using GridPtr = std::shared_ptr<const GridSpec>;

// Builds and validates a grid. Throws ConfigError on dimension mismatch,
// odd or tiny point counts, or nonpositive lengths.
GridPtr make_grid(int dim, std::vector<int> points, std::vector<double> lengths);

// Rectangle-rule quadrature dV * sum(values): exact for band-limited periodic
// integrands sampled on the grid. Throws BlowupError on non-finite input.
double integrate_density(const GridSpec& grid, std::span<const double> values);

} // namespace kg

#endif
