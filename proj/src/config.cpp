#include "kg/config.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

namespace kg {

namespace {

std::string trim(std::string_view s)
{
    std::size_t begin = 0;
    std::size_t end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin])))
        ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1])))
        --end;
    return std::string(s.substr(begin, end - begin));
}

// Raw key/value pairs plus the line each key came from.
struct RawConfig {
    std::map<std::string, std::string> values;
    std::map<std::string, int> lines;
};

RawConfig tokenize(std::string_view text)
{
    RawConfig raw;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++line_no;

        const std::size_t hash = line.find('#');
        if (hash != std::string_view::npos)
            line = line.substr(0, hash);
        const std::string stripped = trim(line);
        if (stripped.empty())
            continue;

        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos) {
            std::ostringstream msg;
            msg << "config line " << line_no << ": expected 'key = value', got '" << stripped
                << "'";
            throw ConfigError(msg.str());
        }
        const std::string key = trim(std::string_view(stripped).substr(0, eq));
        const std::string value = trim(std::string_view(stripped).substr(eq + 1));
        if (key.empty()) {
            std::ostringstream msg;
            msg << "config line " << line_no << ": empty key";
            throw ConfigError(msg.str());
        }
        if (raw.values.count(key)) {
            std::ostringstream msg;
            msg << "config line " << line_no << ": duplicate key '" << key << "' (first set on line "
                << raw.lines.at(key) << ")";
            throw ConfigError(msg.str());
        }
        raw.values[key] = value;
        raw.lines[key] = line_no;
    }
    return raw;
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value,
                            const std::string& expected)
{
    std::ostringstream msg;
    msg << "config key '" << key << "': cannot parse '" << value << "' as " << expected;
    throw ConfigError(msg.str());
}

double parse_real(const std::string& key, const std::string& value)
{
    const char* begin = value.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
        bad_value(key, value, "a real number");
    return v;
}

long parse_int(const std::string& key, const std::string& value)
{
    const char* begin = value.c_str();
    char* end = nullptr;
    const long v = std::strtol(begin, &end, 10);
    if (end == begin || *end != '\0')
        bad_value(key, value, "an integer");
    return v;
}

std::vector<std::string> split_commas(const std::string& value)
{
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = value.find(',', pos);
        parts.push_back(trim(std::string_view(value).substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos)));
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return parts;
}

std::vector<double> parse_real_list(const std::string& key, const std::string& value)
{
    std::vector<double> out;
    for (const auto& part : split_commas(value))
        out.push_back(parse_real(key, part));
    return out;
}

std::vector<int> parse_int_list(const std::string& key, const std::string& value)
{
    std::vector<int> out;
    for (const auto& part : split_commas(value))
        out.push_back(static_cast<int>(parse_int(key, part)));
    return out;
}

// Complex literals: "1.5", "1+2i", "-0.5i", "i", "2-i".
Complex parse_complex(const std::string& key, const std::string& value)
{
    std::string s;
    for (char ch : value)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s += ch;
    if (s.empty())
        bad_value(key, value, "a complex number");

    if (s.back() != 'i')
        return Complex(parse_real(key, s), 0.0);

    s.pop_back(); // drop the 'i'
    // Find the split between the real part and the imaginary coefficient:
    // the last '+'/'-' that is not an exponent sign and not leading.
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    std::string real_part;
    std::string imag_part;
    if (split == std::string::npos) {
        imag_part = s;
    } else {
        real_part = s.substr(0, split);
        imag_part = s.substr(split);
    }
    if (imag_part.empty() || imag_part == "+")
        imag_part = "1";
    else if (imag_part == "-")
        imag_part = "-1";
    const double re = real_part.empty() ? 0.0 : parse_real(key, real_part);
    const double im = parse_real(key, imag_part);
    return Complex(re, im);
}

std::string format_real(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_complex(Complex v)
{
    if (v.imag() == 0.0)
        return format_real(v.real());
    std::string s = format_real(v.real());
    if (v.imag() >= 0.0)
        s += "+";
    s += format_real(v.imag());
    s += "i";
    return s;
}

// Tracks which keys were consumed so leftovers can be reported as unknown.
class Reader {
public:
    explicit Reader(RawConfig raw) : raw_(std::move(raw)) {}

    bool has(const std::string& key) const { return raw_.values.count(key) > 0; }

    std::optional<std::string> take(const std::string& key)
    {
        auto it = raw_.values.find(key);
        if (it == raw_.values.end())
            return std::nullopt;
        consumed_.insert(key);
        return it->second;
    }

    std::string require(const std::string& key)
    {
        auto v = take(key);
        if (!v)
            throw ConfigError("config key '" + key + "' is required but missing");
        return *v;
    }

    // Indices n for which some "prefix.n." key exists.
    std::vector<long> component_indices(const std::string& prefix)
    {
        std::set<long> found;
        for (const auto& [key, value] : raw_.values) {
            if (key.rfind(prefix, 0) != 0)
                continue;
            const std::string rest = key.substr(prefix.size());
            const std::size_t dot = rest.find('.');
            if (dot == std::string::npos)
                continue;
            const std::string idx = rest.substr(0, dot);
            if (idx.empty() ||
                !std::all_of(idx.begin(), idx.end(),
                             [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                continue;
            found.insert(std::strtol(idx.c_str(), nullptr, 10));
        }
        return {found.begin(), found.end()};
    }

    void finish() const
    {
        std::vector<std::string> unknown;
        for (const auto& [key, value] : raw_.values)
            if (!consumed_.count(key))
                unknown.push_back(key);
        if (!unknown.empty()) {
            std::ostringstream msg;
            msg << "unknown config key" << (unknown.size() > 1 ? "s" : "") << ":";
            for (const auto& k : unknown)
                msg << " '" << k << "' (line " << raw_.lines.at(k) << ")";
            throw ConfigError(msg.str());
        }
    }

private:
    RawConfig raw_;
    std::set<std::string> consumed_;
};

Branch parse_branch(const std::string& key, const std::string& value)
{
    if (value == "plus")
        return Branch::plus;
    if (value == "minus")
        return Branch::minus;
    if (value == "standing")
        return Branch::standing;
    bad_value(key, value, "one of plus|minus|standing");
}

Scheme parse_scheme(const std::string& key, const std::string& value)
{
    if (value == "exact")
        return Scheme::exact;
    if (value == "rk4" || value == "rk4_coupled")
        return Scheme::rk4_coupled;
    if (value == "leapfrog" || value == "leapfrog_kg")
        return Scheme::leapfrog_kg;
    bad_value(key, value, "one of exact|rk4|leapfrog");
}

InitialKind parse_kind(const std::string& key, const std::string& value)
{
    if (value == "plane_wave")
        return InitialKind::plane_wave;
    if (value == "gaussian")
        return InitialKind::gaussian;
    if (value == "pure_plus")
        return InitialKind::pure_plus;
    if (value == "pure_minus")
        return InitialKind::pure_minus;
    if (value == "superposition")
        return InitialKind::superposition;
    bad_value(key, value, "one of plane_wave|gaussian|pure_plus|pure_minus|superposition");
}

// Shape/amplitude/branch keys shared by the top-level initial state and by
// superposition components. `prefix` is "initial." or "initial.component.N.".
InitialConditionSpec read_initial_common(Reader& reader, const std::string& prefix,
                                         bool allow_superposition)
{
    InitialConditionSpec spec;
    spec.kind = parse_kind(prefix + "kind", reader.require(prefix + "kind"));
    if (spec.kind == InitialKind::superposition && !allow_superposition)
        throw ConfigError("config key '" + prefix + "kind': nested superpositions are not supported");

    if (auto v = reader.take(prefix + "mode"))
        spec.mode_index = parse_int_list(prefix + "mode", *v);
    if (auto v = reader.take(prefix + "center"))
        spec.center = parse_real_list(prefix + "center", *v);
    if (auto v = reader.take(prefix + "width"))
        spec.width = parse_real(prefix + "width", *v);
    if (auto v = reader.take(prefix + "wavenumber"))
        spec.mean_wavenumber = parse_real_list(prefix + "wavenumber", *v);
    if (auto v = reader.take(prefix + "amplitude"))
        spec.amplitude = parse_complex(prefix + "amplitude", *v);
    if (auto v = reader.take(prefix + "branch"))
        spec.branch = parse_branch(prefix + "branch", *v);

    const bool has_mode = !spec.mode_index.empty();
    const bool has_gaussian = !spec.center.empty() || spec.width != 0.0 ||
                              !spec.mean_wavenumber.empty();
    switch (spec.kind) {
    case InitialKind::plane_wave:
        if (!has_mode)
            throw ConfigError("config key '" + prefix + "mode' is required for plane_wave");
        if (has_gaussian)
            throw ConfigError("config '" + prefix +
                              "': center/width/wavenumber do not apply to plane_wave");
        break;
    case InitialKind::gaussian:
        if (has_mode)
            throw ConfigError("config '" + prefix + "': mode does not apply to gaussian");
        if (spec.center.empty() || spec.width == 0.0 || spec.mean_wavenumber.empty())
            throw ConfigError("config '" + prefix +
                              "': gaussian needs center, width, and wavenumber");
        break;
    case InitialKind::pure_plus:
    case InitialKind::pure_minus:
        if (has_mode && has_gaussian)
            throw ConfigError("config '" + prefix +
                              "': pure states take either mode or center/width/wavenumber, not both");
        if (!has_mode && !has_gaussian)
            throw ConfigError("config '" + prefix +
                              "': pure states need a shape (mode, or center/width/wavenumber)");
        if (!has_mode && (spec.center.empty() || spec.width == 0.0 || spec.mean_wavenumber.empty()))
            throw ConfigError("config '" + prefix +
                              "': gaussian-shaped pure states need center, width, and wavenumber");
        break;
    case InitialKind::superposition:
        if (has_mode || has_gaussian)
            throw ConfigError("config '" + prefix +
                              "': a superposition has no shape keys of its own");
        break;
    }
    return spec;
}

} // namespace

RunConfig parse_config(std::string_view text,
                       const std::vector<std::pair<std::string, std::string>>& overrides)
{
    RawConfig raw = tokenize(text);
    for (const auto& [key, value] : overrides) {
        if (!raw.values.count(key))
            throw ConfigError("override key '" + key + "' is not present in the config");
        raw.values[key] = value;
    }
    Reader reader(std::move(raw));
    RunConfig config;

    if (auto v = reader.take("params.hbar"))
        config.params.hbar = parse_real("params.hbar", *v);
    if (auto v = reader.take("params.c"))
        config.params.c = parse_real("params.c", *v);
    if (auto v = reader.take("params.mass"))
        config.params.mass = parse_real("params.mass", *v);
    config.params.validate();

    config.dim = static_cast<int>(parse_int("grid.dim", reader.require("grid.dim")));
    config.points = parse_int_list("grid.points", reader.require("grid.points"));
    config.lengths = parse_real_list("grid.lengths", reader.require("grid.lengths"));
    config.make_grid_spec(); // validates

    config.initial = read_initial_common(reader, "initial.", true);
    if (config.initial.kind == InitialKind::superposition) {
        for (long idx : reader.component_indices("initial.component.")) {
            std::ostringstream prefix;
            prefix << "initial.component." << idx << ".";
            config.initial.components.push_back(read_initial_common(reader, prefix.str(), false));
        }
        if (config.initial.components.empty())
            throw ConfigError("initial.kind = superposition needs initial.component.N.* keys");
    } else if (!reader.component_indices("initial.component.").empty()) {
        throw ConfigError("initial.component.* keys require initial.kind = superposition");
    }

    if (auto v = reader.take("integrator.scheme"))
        config.integrator.scheme = parse_scheme("integrator.scheme", *v);
    if (auto v = reader.take("integrator.dt"))
        config.integrator.dt = parse_real("integrator.dt", *v);
    if (auto v = reader.take("integrator.t_final"))
        config.integrator.t_final = parse_real("integrator.t_final", *v);
    if (auto v = reader.take("integrator.sample_stride"))
        config.integrator.sample_stride = parse_int("integrator.sample_stride", *v);
    config.integrator.validate();

    if (auto v = reader.take("output.diagnostics"))
        config.outputs.diagnostics_path = *v;
    if (auto v = reader.take("output.snapshots")) {
        if (*v != "none" && !v->empty())
            config.outputs.snapshot_path = *v;
    }
    if (auto v = reader.take("output.snapshot_stride"))
        config.outputs.snapshot_stride = parse_int("output.snapshot_stride", *v);
    if (config.outputs.diagnostics_path.empty())
        throw ConfigError("output.diagnostics must not be empty");
    if (config.outputs.snapshot_stride < 1)
        throw ConfigError("output.snapshot_stride must be >= 1");

    if (auto v = reader.take("check.norm_drift"))
        config.check.norm_drift = parse_real("check.norm_drift", *v);
    if (auto v = reader.take("check.identity_defect"))
        config.check.identity_defect = parse_real("check.identity_defect", *v);
    if (auto v = reader.take("check.oracle_l2"))
        config.check.oracle_l2 = parse_real("check.oracle_l2", *v);
    if (!(config.check.norm_drift > 0.0) || !(config.check.identity_defect > 0.0) ||
        !(config.check.oracle_l2 > 0.0))
        throw ConfigError("check.* thresholds must be positive");

    reader.finish();
    return config;
}

namespace {

void serialize_initial(std::ostringstream& out, const InitialConditionSpec& spec,
                       const std::string& prefix)
{
    out << prefix << "kind = ";
    switch (spec.kind) {
    case InitialKind::plane_wave: out << "plane_wave"; break;
    case InitialKind::gaussian: out << "gaussian"; break;
    case InitialKind::pure_plus: out << "pure_plus"; break;
    case InitialKind::pure_minus: out << "pure_minus"; break;
    case InitialKind::superposition: out << "superposition"; break;
    }
    out << "\n";
    if (!spec.mode_index.empty()) {
        out << prefix << "mode = ";
        for (std::size_t i = 0; i < spec.mode_index.size(); ++i)
            out << (i ? "," : "") << spec.mode_index[i];
        out << "\n";
    }
    if (!spec.center.empty()) {
        out << prefix << "center = ";
        for (std::size_t i = 0; i < spec.center.size(); ++i)
            out << (i ? "," : "") << format_real(spec.center[i]);
        out << "\n";
    }
    if (spec.width != 0.0)
        out << prefix << "width = " << format_real(spec.width) << "\n";
    if (!spec.mean_wavenumber.empty()) {
        out << prefix << "wavenumber = ";
        for (std::size_t i = 0; i < spec.mean_wavenumber.size(); ++i)
            out << (i ? "," : "") << format_real(spec.mean_wavenumber[i]);
        out << "\n";
    }
    out << prefix << "amplitude = " << format_complex(spec.amplitude) << "\n";
    if (spec.kind != InitialKind::superposition) {
        out << prefix << "branch = "
            << (spec.branch == Branch::plus ? "plus"
                                            : spec.branch == Branch::minus ? "minus" : "standing")
            << "\n";
    }
}

} // namespace

std::string serialize_config(const RunConfig& config)
{
    std::ostringstream out;
    out << "params.hbar = " << format_real(config.params.hbar) << "\n";
    out << "params.c = " << format_real(config.params.c) << "\n";
    out << "params.mass = " << format_real(config.params.mass) << "\n";
    out << "grid.dim = " << config.dim << "\n";
    out << "grid.points = ";
    for (std::size_t i = 0; i < config.points.size(); ++i)
        out << (i ? "," : "") << config.points[i];
    out << "\n";
    out << "grid.lengths = ";
    for (std::size_t i = 0; i < config.lengths.size(); ++i)
        out << (i ? "," : "") << format_real(config.lengths[i]);
    out << "\n";

    serialize_initial(out, config.initial, "initial.");
    for (std::size_t i = 0; i < config.initial.components.size(); ++i) {
        std::ostringstream prefix;
        prefix << "initial.component." << (i + 1) << ".";
        serialize_initial(out, config.initial.components[i], prefix.str());
    }

    out << "integrator.scheme = "
        << (config.integrator.scheme == Scheme::exact
                ? "exact"
                : config.integrator.scheme == Scheme::rk4_coupled ? "rk4" : "leapfrog")
        << "\n";
    out << "integrator.dt = " << format_real(config.integrator.dt) << "\n";
    out << "integrator.t_final = " << format_real(config.integrator.t_final) << "\n";
    out << "integrator.sample_stride = " << config.integrator.sample_stride << "\n";
    out << "output.diagnostics = " << config.outputs.diagnostics_path << "\n";
    out << "output.snapshots = "
        << (config.outputs.snapshot_path ? *config.outputs.snapshot_path : std::string("none"))
        << "\n";
    out << "output.snapshot_stride = " << config.outputs.snapshot_stride << "\n";
    out << "check.norm_drift = " << format_real(config.check.norm_drift) << "\n";
    out << "check.identity_defect = " << format_real(config.check.identity_defect) << "\n";
    out << "check.oracle_l2 = " << format_real(config.check.oracle_l2) << "\n";
    return out.str();
}

} // namespace kg
