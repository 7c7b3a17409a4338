#ifndef KG_INITIAL_HPP
#define KG_INITIAL_HPP

#include <vector>

#include "kg/field.hpp"
#include "kg/spectral.hpp"

namespace kg {

// Frequency sign of a mode: exp(-i omega t) (plus, forward in time),
// exp(+i omega t) (minus, backward), or a standing state with dpsi/dt = 0.
enum class Branch { plus, minus, standing };

// Second-order initial data (psi, dpsi/dt) ready to be embedded.
struct InitialData {
    ComplexField psi0;
    ComplexField dpsi_dt0;
};

// psi0 = A exp(i k.x) for the grid mode addressed by `mode_index` (signed,
// wrapped modulo N per axis); dpsi_dt0 = -+ i (E(k)/hbar) psi0 for branch
// plus/minus, and 0 for standing.
InitialData make_plane_wave(const GridPtr& grid, const std::vector<int>& mode_index,
                            Branch branch, const OperatorSymbol& sym,
                            const PhysicalParams& params, Complex amplitude = 1.0);

// Periodized Gaussian packet
//   psi0(x) = A' sum_images exp(-|x - x0 + nL|^2 / (4 width^2)) exp(i k0.(x + nL)),
// image sum truncated at 3 images per axis, normalized so int |psi0|^2 = |A|^2.
// dpsi_dt0 is built spectrally as -+ (i/hbar) H psi0 (pure forward/backward),
// or 0 for standing. Width must satisfy 2*max spacing <= width <= min L/8.
InitialData make_gaussian(const GridPtr& grid, const std::vector<double>& center,
                          double width, const std::vector<double>& mean_wavenumber,
                          Branch branch, const OperatorSymbol& sym,
                          const PhysicalParams& params, Complex amplitude = 1.0);

enum class InitialKind { plane_wave, gaussian, pure_plus, pure_minus, superposition };

// Declarative description of an initial state, mirroring the run-config
// schema. Shape is a plane-wave mode when mode_index is nonempty, else a
// Gaussian packet. pure_plus/pure_minus set eta_+ (resp. eta_-) to the shape
// field directly, with the other component exactly zero; a Gaussian shape is
// normalized so int |eta|^2 = |amplitude|^2, a plane-wave shape keeps the
// amplitude per point.
struct InitialConditionSpec {
    InitialKind kind = InitialKind::gaussian;
    std::vector<int> mode_index;
    std::vector<double> center;
    double width = 0.0;
    std::vector<double> mean_wavenumber;
    Complex amplitude = 1.0;
    Branch branch = Branch::plus;
    std::vector<InitialConditionSpec> components;

    bool operator==(const InitialConditionSpec&) const = default;
};

InitialData build_initial(const InitialConditionSpec& spec, const GridPtr& grid,
                          const OperatorSymbol& sym, const PhysicalParams& params);

} // namespace kg

#endif
