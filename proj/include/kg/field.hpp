#ifndef KG_FIELD_HPP
#define KG_FIELD_HPP

#include <complex>
#include <span>
#include <vector>

#include "kg/grid.hpp"

namespace kg {

using Complex = std::complex<double>;

enum class Representation { position, spectral };

// A complex scalar field sampled on a periodic grid, tagged with the
// representation its values live in. Immutable after construction.
//
// Transform convention: forward (position -> spectral) is the plain DFT sum
// with no prefactor; the inverse carries 1/prod(N_i). Operator application is
// normalization-agnostic; Parseval-style checks must use this convention:
//   integral |f|^2 = dV * sum_x |f(x)|^2 = (dV / prod N) * sum_k |fhat(k)|^2.
class ComplexField {
public:
    ComplexField(GridPtr grid, Representation rep, std::vector<Complex> values);

    static ComplexField zeros(GridPtr grid, Representation rep);

    const GridSpec& grid() const { return *grid_; }
    const GridPtr& grid_ptr() const { return grid_; }
    Representation representation() const { return rep_; }
    std::span<const Complex> values() const { return values_; }
    std::size_t size() const { return values_.size(); }

    // Returns this field converted to the requested representation
    // (a copy when already there).
    ComplexField to(Representation target) const;

private:
    GridPtr grid_;
    Representation rep_;
    std::vector<Complex> values_;
};

// Elementwise arithmetic. Operands must share grid and representation.
ComplexField add(const ComplexField& a, const ComplexField& b);
ComplexField sub(const ComplexField& a, const ComplexField& b);
ComplexField scaled(const ComplexField& f, Complex factor);
// a*x + b*y
ComplexField lin_comb(Complex a, const ComplexField& x, Complex b, const ComplexField& y);

// |f(x)|^2 sampled in position space.
std::vector<double> abs_squared(const ComplexField& f);

// Discrete L2 inner product dV * sum conj(f) g, evaluated in position space.
Complex inner_product(const ComplexField& f, const ComplexField& g);

// sqrt of integral |f|^2.
double l2_norm(const ComplexField& f);

double max_abs(const ComplexField& f);
double max_abs_diff(const ComplexField& a, const ComplexField& b);

// The pair (psi, chi) at time t: psi obeys the second-order wave equation,
// chi is the auxiliary field making the system first order in time.
struct CoupledState {
    CoupledState(ComplexField psi_in, ComplexField chi_in, double t_in);

    ComplexField psi;
    ComplexField chi;
    double t;
};

// Decoupled components eta+ = psi + chi and eta- = psi - chi, which obey
// forward and backward Schrodinger flows respectively.
struct DiagonalState {
    DiagonalState(ComplexField plus, ComplexField minus, double t_in);

    ComplexField eta_plus;
    ComplexField eta_minus;
    double t;
};

} // namespace kg

#endif
