#ifndef KG_IO_HPP
#define KG_IO_HPP

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "kg/diagnostics.hpp"
#include "kg/field.hpp"

namespace kg {

// CSV rendering of diagnostics records: fixed header
//   t,norm_plus,norm_minus,energy_plus,energy_minus,rho_integral,identity_defect,constraint_defect
// one row per record, 17 significant digits, '\n' newlines. Identical inputs
// render byte-identically.
std::string diagnostics_csv(std::span<const DiagnosticsRecord> records);
void write_diagnostics_csv(const std::filesystem::path& path,
                           std::span<const DiagnosticsRecord> records);

// Binary snapshot layout (all little-endian):
//   magic "KGS1" | u32 dim | u32 points per axis | f64 length per axis
//   | f64 t | u32 field count | per field: (re, im) f64 pairs, row-major.
// Fields are stored as position-space samples.
struct Snapshot {
    GridPtr grid;
    double t = 0.0;
    std::vector<ComplexField> fields;
};

void write_snapshot(const std::filesystem::path& path, const CoupledState& state);
void write_snapshot(const std::filesystem::path& path, const ComplexField& field, double t);
Snapshot read_snapshot(const std::filesystem::path& path);

} // namespace kg

#endif
