#ifndef KG_SPECTRAL_HPP
#define KG_SPECTRAL_HPP

#include <span>
#include <vector>

#include "kg/field.hpp"
#include "kg/grid.hpp"

namespace kg {

// The relativistic energy symbol E(k) = sqrt(m^2 c^4 + c^2 hbar^2 |k|^2)
// evaluated at every grid wavenumber. Strictly positive (minimum m c^2 at
// k = 0) and a function of |k|^2 only, so it is insensitive to the sign
// ambiguity of the Nyquist mode.
class OperatorSymbol {
public:
    OperatorSymbol(GridPtr grid, std::vector<double> values);

    const GridSpec& grid() const { return *grid_; }
    const GridPtr& grid_ptr() const { return grid_; }
    std::span<const double> values() const { return values_; }
    double max_value() const { return max_value_; }
    double min_value() const { return min_value_; }

private:
    GridPtr grid_;
    std::vector<double> values_;
    double max_value_ = 0.0;
    double min_value_ = 0.0;
};

// Tabulates E(k) on the grid. Throws ConfigError when mass <= 0, since the
// factorization operator D = iH is invertible only for positive mass.
OperatorSymbol build_symbol(const GridPtr& grid, const PhysicalParams& params);

// H f: multiplication by E(k) in the Fourier basis. Self-adjoint and positive
// with respect to the discrete L2 product. Position input routes
// position -> spectral -> position; spectral input skips the transforms.
ComplexField apply_h(const ComplexField& f, const OperatorSymbol& sym);

// H^{-1} f: multiplication by 1/E(k). Well defined because E >= m c^2 > 0.
ComplexField apply_h_inv(const ComplexField& f, const OperatorSymbol& sym);

// D = iH, D* = -D (skew adjoint), D^{-1} = -i H^{-1}.
ComplexField apply_d(const ComplexField& f, const OperatorSymbol& sym);
ComplexField apply_d_star(const ComplexField& f, const OperatorSymbol& sym);
ComplexField apply_d_inv(const ComplexField& f, const OperatorSymbol& sym);

enum class Sign { plus, minus };

// Projection onto the forward/backward component:
//   Pi_{+-} f = f +- i H^{-1} (hbar df/dt).
// When (f, dfdt) solve the coupled system this equals eta_{+-}.
ComplexField apply_pi(const ComplexField& f, const ComplexField& dfdt, Sign sign,
                      const OperatorSymbol& sym, const PhysicalParams& params);

} // namespace kg

#endif
