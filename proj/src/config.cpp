#include "pilotwave/config.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace pilotwave {

std::string_view to_string(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::Trajectories3D: return "trajectories3d";
        case ExperimentKind::Trajectories2D: return "trajectories2d";
        case ExperimentKind::Eigensolve: return "eigensolve";
        case ExperimentKind::RelaxOscillator: return "relax_oscillator";
        case ExperimentKind::RelaxBox: return "relax_box";
        case ExperimentKind::ConfinementProbe: return "confinement_probe";
    }
    return "unknown";
}

namespace {

std::string join_errors(const std::vector<std::string>& errors) {
    std::string out = "invalid configuration";
    for (const auto& e : errors) out += "\n  " + e;
    return out;
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> errors)
    : std::runtime_error(join_errors(errors)), errors_(std::move(errors)) {}

namespace {

struct ValueError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string trim(std::string_view s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string_view::npos) return {};
    const auto b = s.find_last_not_of(" \t\r");
    return std::string(s.substr(a, b - a + 1));
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(value);
    while (std::getline(in, item, ',')) out.push_back(trim(item));
    if (out.empty() || std::any_of(out.begin(), out.end(), [](const std::string& s) { return s.empty(); }))
        throw ValueError("empty list entry");
    return out;
}

double to_double(const std::string& s) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw ValueError("expected a number, got '" + s + "'");
    return v;
}

long to_long(const std::string& s) {
    long v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw ValueError("expected an integer, got '" + s + "'");
    return v;
}

bool to_bool(const std::string& s) {
    if (s == "true" || s == "yes" || s == "1") return true;
    if (s == "false" || s == "no" || s == "0") return false;
    throw ValueError("expected true/false, got '" + s + "'");
}

std::vector<double> to_doubles(const std::string& s) {
    std::vector<double> out;
    for (const auto& item : split_list(s)) out.push_back(to_double(item));
    return out;
}

HalfInteger to_half(const std::string& s) {
    try {
        return HalfInteger::parse(s);
    } catch (const std::exception&) {
        throw ValueError("expected a half-integer such as 3/2, got '" + s + "'");
    }
}

ExperimentKind to_kind(const std::string& s) {
    for (auto k : {ExperimentKind::Trajectories3D, ExperimentKind::Trajectories2D, ExperimentKind::Eigensolve,
                   ExperimentKind::RelaxOscillator, ExperimentKind::RelaxBox, ExperimentKind::ConfinementProbe})
        if (to_string(k) == s) return k;
    throw ValueError("unknown experiment '" + s + "'");
}

using Setter = std::function<void(ExperimentConfig&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
    static const std::map<std::string, Setter> table = {
        {"experiment", [](auto& c, const auto& v) { c.experiment = to_kind(v); }},
        {"seed", [](auto& c, const auto& v) { c.seed = static_cast<std::uint64_t>(to_long(v)); }},
        {"workers", [](auto& c, const auto& v) { c.workers = static_cast<int>(to_long(v)); }},
        {"output", [](auto& c, const auto& v) { c.output = v; }},

        {"physics.m", [](auto& c, const auto& v) { c.m = c.box.m = to_double(v); }},
        {"physics.omega", [](auto& c, const auto& v) { c.omega = to_double(v); }},
        {"physics.V0", [](auto& c, const auto& v) { c.box.V0 = to_double(v); }},
        {"physics.R_prime", [](auto& c, const auto& v) { c.box.R_prime = to_double(v); }},

        {"modes.preset", [](auto& c, const auto& v) { c.modes.preset = v; }},
        {"modes.family", [](auto& c, const auto& v) { c.modes.family = v; }},
        {"modes.n",
         [](auto& c, const auto& v) {
             c.modes.n.clear();
             for (const auto& s : split_list(v)) c.modes.n.push_back(static_cast<int>(to_long(s)));
         }},
        {"modes.k",
         [](auto& c, const auto& v) {
             c.modes.k.clear();
             for (const auto& s : split_list(v)) c.modes.k.push_back(to_half(s));
         }},
        {"modes.energies", [](auto& c, const auto& v) { c.modes.energies = to_doubles(v); }},
        {"modes.phases", [](auto& c, const auto& v) { c.modes.phases = to_doubles(v); }},
        {"modes.weights", [](auto& c, const auto& v) { c.modes.weights = to_doubles(v); }},
        {"modes.px", [](auto& c, const auto& v) { c.modes.px = to_doubles(v); }},
        {"modes.py", [](auto& c, const auto& v) { c.modes.py = to_doubles(v); }},
        {"modes.pz", [](auto& c, const auto& v) { c.modes.pz = to_doubles(v); }},
        {"modes.signs",
         [](auto& c, const auto& v) {
             c.modes.signs.clear();
             for (const auto& s : split_list(v)) {
                 if (s == "positive") c.modes.signs.push_back(EnergySign::Positive);
                 else if (s == "negative") c.modes.signs.push_back(EnergySign::Negative);
                 else throw ValueError("expected positive/negative, got '" + s + "'");
             }
         }},
        {"modes.helicities",
         [](auto& c, const auto& v) {
             c.modes.helicities.clear();
             for (const auto& s : split_list(v)) {
                 if (s == "right") c.modes.helicities.push_back(Helicity::Right);
                 else if (s == "left") c.modes.helicities.push_back(Helicity::Left);
                 else throw ValueError("expected right/left, got '" + s + "'");
             }
         }},

        {"lattice.n", [](auto& c, const auto& v) { c.lattice.nx = c.lattice.ny = static_cast<int>(to_long(v)); }},
        {"lattice.nx", [](auto& c, const auto& v) { c.lattice.nx = static_cast<int>(to_long(v)); }},
        {"lattice.ny", [](auto& c, const auto& v) { c.lattice.ny = static_cast<int>(to_long(v)); }},
        {"lattice.box",
         [](auto& c, const auto& v) {
             const auto b = to_doubles(v);
             if (b.size() != 4) throw ValueError("box needs xmin, xmax, ymin, ymax");
             c.lattice.box = Box2D{b[0], b[1], b[2], b[3]};
         }},
        {"lattice.write_lattice", [](auto& c, const auto& v) { c.write_lattice = to_bool(v); }},

        {"coarse_grain.kinds",
         [](auto& c, const auto& v) {
             c.use_standard = c.use_smooth = false;
             for (const auto& s : split_list(v)) {
                 if (s == "standard") c.use_standard = true;
                 else if (s == "smooth") c.use_smooth = true;
                 else throw ValueError("expected standard/smooth, got '" + s + "'");
             }
         }},
        {"coarse_grain.cells_per_side",
         [](auto& c, const auto& v) { c.standard.cells_per_side = static_cast<int>(to_long(v)); }},
        {"coarse_grain.cell_side", [](auto& c, const auto& v) { c.smooth.cell_side = to_double(v); }},
        {"coarse_grain.shift", [](auto& c, const auto& v) { c.smooth.shift = to_double(v); }},
        {"coarse_grain.steps", [](auto& c, const auto& v) { c.smooth.steps = static_cast<int>(to_long(v)); }},

        {"time.t0", [](auto& c, const auto& v) { c.t0 = to_double(v); }},
        {"time.checkpoints", [](auto& c, const auto& v) { c.checkpoints = to_doubles(v); }},

        {"integrator.abs_tolerance", [](auto& c, const auto& v) { c.integrator.abs_tolerance = to_double(v); }},
        {"integrator.min_step", [](auto& c, const auto& v) { c.integrator.min_step = to_double(v); }},
        {"integrator.max_step", [](auto& c, const auto& v) { c.integrator.max_step = to_double(v); }},
        {"integrator.max_iterations", [](auto& c, const auto& v) { c.integrator.max_iterations = to_long(v); }},
        {"integrator.precision", [](auto& c, const auto& v) { c.integrator.backtrack_precision = to_double(v); }},
        {"integrator.roundtrip_check", [](auto& c, const auto& v) { c.integrator.roundtrip_check = to_bool(v); }},

        {"densities.list", [](auto& c, const auto& v) { c.densities = split_list(v); }},

        {"trajectories.masses", [](auto& c, const auto& v) { c.masses = to_doubles(v); }},
        {"trajectories.start", [](auto& c, const auto& v) { c.start = to_doubles(v); }},
        {"trajectories.t_end", [](auto& c, const auto& v) { c.t_end = to_double(v); }},

        {"probe.count", [](auto& c, const auto& v) { c.probe_count = static_cast<int>(to_long(v)); }},
        {"probe.radius", [](auto& c, const auto& v) { c.probe_radius = to_double(v); }},
        {"probe.t_final", [](auto& c, const auto& v) { c.probe_t_final = to_double(v); }},
        {"probe.inner_radius", [](auto& c, const auto& v) { c.inner_radius = to_double(v); }},

        {"eigensolve.k",
         [](auto& c, const auto& v) {
             c.eigen_k.clear();
             for (const auto& s : split_list(v)) c.eigen_k.push_back(to_half(s));
         }},
        {"eigensolve.scan_resolution", [](auto& c, const auto& v) { c.scan_resolution = static_cast<int>(to_long(v)); }},

        {"export.prefix", [](auto& c, const auto& v) { c.figure_prefix = v; }},
    };
    return table;
}

const std::vector<std::string>& known_sections() {
    static const std::vector<std::string> s = {"physics", "modes",     "lattice", "coarse_grain", "time",
                                               "integrator", "densities", "trajectories", "probe", "eigensolve",
                                               "export"};
    return s;
}

using LineMap = std::map<std::string, int>;

void validate_impl(const ExperimentConfig& c, const LineMap& lines, std::vector<std::string>& errors) {
    auto err = [&](const std::string& key, const std::string& msg) {
        const auto it = lines.find(key);
        errors.push_back(it != lines.end() ? "line " + std::to_string(it->second) + ": " + msg : msg);
    };
    if (c.workers < 1) err("workers", "workers must be >= 1");
    try {
        c.integrator.validate();
    } catch (const std::exception& e) {
        err("integrator.min_step", e.what());
    }

    const bool relax = c.experiment == ExperimentKind::RelaxOscillator || c.experiment == ExperimentKind::RelaxBox;
    if (relax) {
        if (c.checkpoints.empty()) err("time.checkpoints", "no checkpoints");
        for (std::size_t i = 1; i < c.checkpoints.size(); ++i)
            if (!(c.checkpoints[i] > c.checkpoints[i - 1])) {
                err("time.checkpoints", "non-increasing checkpoints");
                break;
            }
        if (!c.checkpoints.empty() && c.checkpoints.front() < c.t0) err("time.checkpoints", "checkpoints before t0");
        try {
            c.lattice.validate();
        } catch (const std::exception& e) {
            err("lattice.n", e.what());
        }
        if (!c.use_standard && !c.use_smooth) err("coarse_grain.kinds", "no coarse-graining selected");
        if (c.use_standard && c.standard.cells_per_side < 1) err("coarse_grain.cells_per_side", "cells_per_side must be >= 1");
        if (c.use_smooth) {
            const double reach = c.smooth.cell_side + (c.smooth.steps - 1) * c.smooth.shift;
            const double slack = 1e-12 * std::max(c.lattice.box.width(), c.lattice.box.height());
            if (c.smooth.steps < 1 || !(c.smooth.cell_side > 0.0) || !(c.smooth.shift >= 0.0))
                err("coarse_grain.steps", "invalid smooth coarse-graining layout");
            else if (reach > c.lattice.box.width() + slack || reach > c.lattice.box.height() + slack)
                err("coarse_grain.steps", "smooth cells leave the lattice box");
        }
        if (c.densities.empty()) err("densities.list", "no densities requested");
        for (const auto& d : c.densities) {
            try {
                InitialDensity::named(d);
            } catch (const std::exception& e) {
                err("densities.list", e.what());
            }
        }
    }

    if (!(c.m > 0.0)) err("physics.m", "m must be > 0");
    if (c.experiment == ExperimentKind::RelaxOscillator && !(c.omega > 0.0)) err("physics.omega", "omega must be > 0");
    if (c.experiment == ExperimentKind::RelaxBox || c.experiment == ExperimentKind::ConfinementProbe ||
        c.experiment == ExperimentKind::Eigensolve) {
        if (!(c.box.V0 > 0.0)) err("physics.V0", "V0 must be > 0");
        if (!(c.box.R_prime > 0.0)) err("physics.R_prime", "R_prime must be > 0");
    }
    if (c.experiment == ExperimentKind::Eigensolve && c.scan_resolution < 1000)
        err("eigensolve.scan_resolution", "scan_resolution must be >= 1000");

    if (c.experiment == ExperimentKind::ConfinementProbe) {
        if (c.probe_count < 1) err("probe.count", "count must be >= 1");
        if (!(c.probe_radius > 0.0)) err("probe.radius", "radius must be > 0");
        if (!(c.probe_t_final > c.t0)) err("probe.t_final", "t_final must exceed t0");
        if (!(c.inner_radius > 0.0)) err("probe.inner_radius", "inner_radius must be > 0");
    }
    if (c.experiment == ExperimentKind::Trajectories2D || c.experiment == ExperimentKind::Trajectories3D) {
        const std::size_t dim = c.experiment == ExperimentKind::Trajectories3D ? 3 : 2;
        if (c.start.size() != dim && !(dim == 2 && c.start.size() == 3 && c.start[2] == 0.0))
            err("trajectories.start", "start needs " + std::to_string(dim) + " coordinates");
        if (c.t_end == c.t0) err("trajectories.t_end", "t_end equals t0");
        for (double mass : c.masses)
            if (!(mass >= 0.0)) err("trajectories.masses", "masses must be >= 0");
    }

    // modes
    const ModeList& md = c.modes;
    std::string expected;
    switch (c.experiment) {
        case ExperimentKind::RelaxOscillator: expected = "oscillator"; break;
        case ExperimentKind::RelaxBox:
        case ExperimentKind::ConfinementProbe: expected = "box"; break;
        case ExperimentKind::Trajectories3D: expected = "plane3d"; break;
        case ExperimentKind::Trajectories2D: expected = "plane2d"; break;
        case ExperimentKind::Eigensolve: return;
    }
    if (!md.preset.empty()) {
        static const std::map<std::string, std::string> presets = {
            {"oscillator8", "oscillator"}, {"box3", "box"}, {"box4", "box"}, {"box6", "box"}, {"free", "plane"}};
        const auto it = presets.find(md.preset);
        if (it == presets.end())
            err("modes.preset", "unknown preset '" + md.preset + "'");
        else if (expected.rfind(it->second, 0) != 0)
            err("modes.preset", "preset '" + md.preset + "' does not fit experiment " + std::string(to_string(c.experiment)));
        return;
    }
    if (md.family.empty()) {
        err("modes.family", "missing modes (set modes.preset or modes.family)");
        return;
    }
    if (md.family != expected) {
        err("modes.family", "family '" + md.family + "' does not fit experiment " + std::string(to_string(c.experiment)));
        return;
    }
    std::size_t count = 0;
    if (md.family == "oscillator") {
        count = md.n.size();
        if (md.k.size() != count) err("modes.k", "modes.n and modes.k differ in length");
        for (int n : md.n)
            if (n < 1) err("modes.n", "n must be >= 1");
    } else if (md.family == "box") {
        count = md.k.size();
        if (md.energies.size() != count) err("modes.energies", "modes.k and modes.energies differ in length");
    } else {
        count = md.px.size();
        if (md.py.size() != count) err("modes.py", "momentum lists differ in length");
        if (md.family == "plane3d" && md.pz.size() != count) err("modes.pz", "momentum lists differ in length");
        if (!md.signs.empty() && md.signs.size() != count) err("modes.signs", "signs list length mismatch");
        if (!md.helicities.empty() && md.helicities.size() != count) err("modes.helicities", "helicities list length mismatch");
    }
    if (count == 0) err("modes.family", "no modes listed");
    if (md.phases.size() != count) err("modes.phases", "phases list length mismatch");
    if (!md.weights.empty() && md.weights.size() != count) err("modes.weights", "weights list length mismatch");
}

}  // namespace

ExperimentConfig parse_config(std::string_view text) {
    ExperimentConfig cfg;
    std::vector<std::string> errors;
    LineMap lines;
    std::string section;
    bool have_experiment = false;

    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::string where = "line " + std::to_string(lineno) + ": ";
        if (line.front() == '[') {
            if (line.back() != ']') {
                errors.push_back(where + "malformed section header");
                continue;
            }
            section = trim(std::string_view(line).substr(1, line.size() - 2));
            if (std::find(known_sections().begin(), known_sections().end(), section) == known_sections().end())
                errors.push_back(where + "unknown section [" + section + "]");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            errors.push_back(where + "expected 'key = value'");
            continue;
        }
        const std::string key = trim(std::string_view(line).substr(0, eq));
        const std::string value = trim(std::string_view(line).substr(eq + 1));
        const std::string full = section.empty() ? key : section + "." + key;
        const auto it = setters().find(full);
        if (it == setters().end()) {
            errors.push_back(where + "unknown key '" + full + "'");
            continue;
        }
        if (value.empty()) {
            errors.push_back(where + "missing value for '" + full + "'");
            continue;
        }
        if (lines.count(full)) errors.push_back(where + "duplicate key '" + full + "'");
        lines[full] = lineno;
        try {
            it->second(cfg, value);
            if (full == "experiment") have_experiment = true;
        } catch (const ValueError& e) {
            errors.push_back(where + full + ": " + e.what());
        }
    }
    if (!have_experiment) {
        errors.insert(errors.begin(), "missing experiment");
        throw ConfigError(std::move(errors));
    }
    validate_impl(cfg, lines, errors);
    if (!errors.empty()) throw ConfigError(std::move(errors));
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError({"cannot read config file '" + path + "'"});
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

void validate_config(const ExperimentConfig& cfg) {
    std::vector<std::string> errors;
    validate_impl(cfg, {}, errors);
    if (!errors.empty()) throw ConfigError(std::move(errors));
}

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

template <typename T, typename F>
std::string list(const std::vector<T>& items, F&& f) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + f(items[i]);
    return out;
}

std::string nums(const std::vector<double>& v) { return list(v, num); }

}  // namespace

std::string config_echo(const ExperimentConfig& c) {
    std::ostringstream o;
    o << "experiment = " << to_string(c.experiment) << '\n' << "seed = " << c.seed << '\n';
    o << "[physics]\n"
      << "m = " << num(c.m) << "\nomega = " << num(c.omega) << "\nV0 = " << num(c.box.V0) << "\nR_prime = "
      << num(c.box.R_prime) << '\n';
    o << "[modes]\n";
    const ModeList& md = c.modes;
    if (!md.preset.empty()) o << "preset = " << md.preset << '\n';
    if (!md.family.empty()) o << "family = " << md.family << '\n';
    if (!md.n.empty()) o << "n = " << list(md.n, [](int n) { return std::to_string(n); }) << '\n';
    if (!md.k.empty()) o << "k = " << list(md.k, [](HalfInteger k) { return k.str(); }) << '\n';
    if (!md.energies.empty()) o << "energies = " << nums(md.energies) << '\n';
    if (!md.phases.empty()) o << "phases = " << nums(md.phases) << '\n';
    if (!md.weights.empty()) o << "weights = " << nums(md.weights) << '\n';
    if (!md.px.empty()) o << "px = " << nums(md.px) << '\n';
    if (!md.py.empty()) o << "py = " << nums(md.py) << '\n';
    if (!md.pz.empty()) o << "pz = " << nums(md.pz) << '\n';
    if (!md.signs.empty())
        o << "signs = " << list(md.signs, [](EnergySign s) { return std::string(s == EnergySign::Positive ? "positive" : "negative"); })
          << '\n';
    if (!md.helicities.empty())
        o << "helicities = " << list(md.helicities, [](Helicity h) { return std::string(h == Helicity::Right ? "right" : "left"); })
          << '\n';
    o << "[lattice]\n"
      << "nx = " << c.lattice.nx << "\nny = " << c.lattice.ny << "\nbox = " << num(c.lattice.box.xmin) << ", "
      << num(c.lattice.box.xmax) << ", " << num(c.lattice.box.ymin) << ", " << num(c.lattice.box.ymax)
      << "\nwrite_lattice = " << (c.write_lattice ? "true" : "false") << '\n';
    o << "[coarse_grain]\nkinds = ";
    if (c.use_standard) o << "standard" << (c.use_smooth ? ", " : "");
    if (c.use_smooth) o << "smooth";
    o << "\ncells_per_side = " << c.standard.cells_per_side << "\ncell_side = " << num(c.smooth.cell_side)
      << "\nshift = " << num(c.smooth.shift) << "\nsteps = " << c.smooth.steps << '\n';
    o << "[time]\nt0 = " << num(c.t0) << "\ncheckpoints = " << nums(c.checkpoints) << '\n';
    const IntegratorConfig& ic = c.integrator;
    o << "[integrator]\nabs_tolerance = " << num(ic.abs_tolerance) << "\nmin_step = " << num(ic.min_step)
      << "\nmax_step = " << num(ic.max_step) << "\nmax_iterations = " << ic.max_iterations
      << "\nprecision = " << num(ic.backtrack_precision) << "\nroundtrip_check = " << (ic.roundtrip_check ? "true" : "false")
      << '\n';
    o << "[densities]\nlist = " << list(c.densities, [](const std::string& s) { return s; }) << '\n';
    o << "[trajectories]\n";
    if (!c.masses.empty()) o << "masses = " << nums(c.masses) << '\n';
    o << "start = " << nums(c.start) << "\nt_end = " << num(c.t_end) << '\n';
    o << "[probe]\ncount = " << c.probe_count << "\nradius = " << num(c.probe_radius) << "\nt_final = "
      << num(c.probe_t_final) << "\ninner_radius = " << num(c.inner_radius) << '\n';
    o << "[eigensolve]\n";
    if (!c.eigen_k.empty()) o << "k = " << list(c.eigen_k, [](HalfInteger k) { return k.str(); }) << '\n';
    o << "scan_resolution = " << c.scan_resolution << '\n';
    if (!c.figure_prefix.empty()) o << "[export]\nprefix = " << c.figure_prefix << '\n';
    return o.str();
}

}  // namespace pilotwave
