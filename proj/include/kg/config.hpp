#ifndef KG_CONFIG_HPP
#define KG_CONFIG_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kg/evolution.hpp"
#include "kg/grid.hpp"
#include "kg/initial.hpp"

namespace kg {

struct OutputConfig {
    std::string diagnostics_path = "diagnostics.csv";
    std::optional<std::string> snapshot_path;
    long snapshot_stride = 1;

    bool operator==(const OutputConfig&) const = default;
};

// Thresholds for the built-in `check` suite; defaults match the shipped
// verification targets.
struct CheckThresholds {
    double norm_drift = 1e-12;
    double identity_defect = 1e-10;
    double oracle_l2 = 1e-4;

    bool operator==(const CheckThresholds&) const = default;
};

// A full run description, parsed from the flat dotted-key text format:
//   grid.dim = 1            # comments allowed
//   params.mass = 1.0
// Keys are order-insensitive; unknown keys are errors.
struct RunConfig {
    PhysicalParams params;
    int dim = 1;
    std::vector<int> points;
    std::vector<double> lengths;
    InitialConditionSpec initial;
    IntegratorConfig integrator;
    OutputConfig outputs;
    CheckThresholds check;

    GridPtr make_grid_spec() const { return make_grid(dim, points, lengths); }

    bool operator==(const RunConfig&) const = default;
};

// Parses and validates. Throws ConfigError with a line number for syntax
// problems and with the offending key path for validation problems.
// `overrides` replaces raw values by key before validation (the sweep hook);
// overriding a key absent from the schema is an error.
RunConfig parse_config(std::string_view text,
                       const std::vector<std::pair<std::string, std::string>>& overrides = {});

// Canonical key-value rendering; parse_config(serialize_config(c)) == c.
std::string serialize_config(const RunConfig& config);

} // namespace kg

#endif
