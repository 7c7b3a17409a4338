#include "kg/field.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <tuple>
#include <utility>

namespace kg {

namespace {

// Process-wide cache of FFTW plans, keyed by grid shape and direction.
// Plans are created with FFTW_UNALIGNED so they can be executed on any
// caller-owned buffers via fftw_execute_dft. fftw_execute_dft itself is
// thread-safe; creation and lookup are serialized here.
class PlanCache {
public:
    static PlanCache& instance()
    {
        static PlanCache cache;
        return cache;
    }

    void execute(const GridSpec& grid, int sign, const Complex* in, Complex* out)
    {
        fftw_plan plan = nullptr;
        {
            std::lock_guard<std::mutex> lock(mutex_);
            Key key{grid.dim(), grid.points(0), grid.dim() > 1 ? grid.points(1) : 1,
                    grid.dim() > 2 ? grid.points(2) : 1, sign};
            auto it = plans_.find(key);
            if (it == plans_.end()) {
                std::vector<Complex> scratch_in(grid.size());
                std::vector<Complex> scratch_out(grid.size());
                std::vector<int> dims(static_cast<std::size_t>(grid.dim()));
                for (int axis = 0; axis < grid.dim(); ++axis)
                    dims[static_cast<std::size_t>(axis)] = grid.points(axis);
                plan = fftw_plan_dft(grid.dim(), dims.data(),
                                     reinterpret_cast<fftw_complex*>(scratch_in.data()),
                                     reinterpret_cast<fftw_complex*>(scratch_out.data()),
                                     sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
                plans_.emplace(key, plan);
            } else {
                plan = it->second;
            }
        }
        fftw_execute_dft(plan,
                         reinterpret_cast<fftw_complex*>(const_cast<Complex*>(in)),
                         reinterpret_cast<fftw_complex*>(out));
    }

private:
    PlanCache() = default;
    ~PlanCache()
    {
        for (auto& [key, plan] : plans_)
            fftw_destroy_plan(plan);
    }

    using Key = std::tuple<int, int, int, int, int>;
    std::mutex mutex_;
    std::map<Key, fftw_plan> plans_;
};

std::vector<Complex> transform(const GridSpec& grid, std::span<const Complex> in, int sign)
{
    std::vector<Complex> out(in.size());
    PlanCache::instance().execute(grid, sign, in.data(), out.data());
    if (sign == FFTW_BACKWARD) {
        const double scale = 1.0 / static_cast<double>(grid.size());
        for (auto& v : out)
            v *= scale;
    }
    return out;
}

void require_compatible(const ComplexField& a, const ComplexField& b, const char* what)
{
    if (a.grid() != b.grid())
        throw ConfigError(std::string(what) + ": fields live on different grids");
    if (a.representation() != b.representation())
        throw ConfigError(std::string(what) + ": fields are in different representations");
}

} // namespace

ComplexField::ComplexField(GridPtr grid, Representation rep, std::vector<Complex> values)
    : grid_(std::move(grid)), rep_(rep), values_(std::move(values))
{
    if (!grid_)
        throw ConfigError("ComplexField: null grid");
    if (values_.size() != grid_->size())
        throw ConfigError("ComplexField: value count does not match the grid");
    for (const auto& v : values_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw BlowupError("ComplexField: non-finite value");
    }
}

ComplexField ComplexField::zeros(GridPtr grid, Representation rep)
{
    if (!grid)
        throw ConfigError("ComplexField: null grid");
    std::vector<Complex> values(grid->size(), Complex(0.0, 0.0));
    return ComplexField(std::move(grid), rep, std::move(values));
}

ComplexField ComplexField::to(Representation target) const
{
    if (target == rep_)
        return *this;
    const int sign = (target == Representation::spectral) ? FFTW_FORWARD : FFTW_BACKWARD;
    return ComplexField(grid_, target, transform(*grid_, values_, sign));
}

ComplexField add(const ComplexField& a, const ComplexField& b)
{
    return lin_comb(1.0, a, 1.0, b);
}

ComplexField sub(const ComplexField& a, const ComplexField& b)
{
    return lin_comb(1.0, a, -1.0, b);
}

ComplexField scaled(const ComplexField& f, Complex factor)
{
    std::vector<Complex> values(f.values().begin(), f.values().end());
    for (auto& v : values)
        v *= factor;
    return ComplexField(f.grid_ptr(), f.representation(), std::move(values));
}

ComplexField lin_comb(Complex a, const ComplexField& x, Complex b, const ComplexField& y)
{
    require_compatible(x, y, "lin_comb");
    std::vector<Complex> values(x.size());
    auto xv = x.values();
    auto yv = y.values();
    for (std::size_t i = 0; i < values.size(); ++i)
        values[i] = a * xv[i] + b * yv[i];
    return ComplexField(x.grid_ptr(), x.representation(), std::move(values));
}

std::vector<double> abs_squared(const ComplexField& f)
{
    const ComplexField pos = f.to(Representation::position);
    std::vector<double> density(pos.size());
    auto values = pos.values();
    for (std::size_t i = 0; i < density.size(); ++i)
        density[i] = std::norm(values[i]);
    return density;
}

Complex inner_product(const ComplexField& f, const ComplexField& g)
{
    if (f.grid() != g.grid())
        throw ConfigError("inner_product: fields live on different grids");
    const ComplexField fp = f.to(Representation::position);
    const ComplexField gp = g.to(Representation::position);
    Complex sum(0.0, 0.0);
    auto fv = fp.values();
    auto gv = gp.values();
    for (std::size_t i = 0; i < fv.size(); ++i)
        sum += std::conj(fv[i]) * gv[i];
    return f.grid().cell_volume() * sum;
}

double l2_norm(const ComplexField& f)
{
    const auto density = abs_squared(f);
    return std::sqrt(integrate_density(f.grid(), density));
}

double max_abs(const ComplexField& f)
{
    double m = 0.0;
    for (const auto& v : f.values())
        m = std::max(m, std::abs(v));
    return m;
}

double max_abs_diff(const ComplexField& a, const ComplexField& b)
{
    require_compatible(a, b, "max_abs_diff");
    double m = 0.0;
    auto av = a.values();
    auto bv = b.values();
    for (std::size_t i = 0; i < av.size(); ++i)
        m = std::max(m, std::abs(av[i] - bv[i]));
    return m;
}

CoupledState::CoupledState(ComplexField psi_in, ComplexField chi_in, double t_in)
    : psi(std::move(psi_in)), chi(std::move(chi_in)), t(t_in)
{
    if (psi.grid() != chi.grid())
        throw ConfigError("CoupledState: psi and chi live on different grids");
}

DiagonalState::DiagonalState(ComplexField plus, ComplexField minus, double t_in)
    : eta_plus(std::move(plus)), eta_minus(std::move(minus)), t(t_in)
{
    if (eta_plus.grid() != eta_minus.grid())
        throw ConfigError("DiagonalState: eta fields live on different grids");
}

} // namespace kg
