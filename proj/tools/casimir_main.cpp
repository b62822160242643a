// Command-line interface: force evaluations, parameter sweeps written as
// CSV data files, and the SI levitation calculator.
//
//   casimir force --mode ideal --a-prime 1
//   casimir force --mode lifshitz --model drude-gain --omega0 10 --a 3 --b 3
//   casimir sweep --mode magnetic --b 3 --from 3.1 --to 6 --points 30 --out fig.csv
//   casimir kernel --from 0 --to 6 --points 121
//   casimir permittivity --model drude-gain --axis imag --from 0 --to 50
//   casimir levitate --thickness 0.5e-6 --density 2700
//
// A JSON config document (--config file, or '-' for stdin) supplies any
// of the option values; explicit flags override config fields. Every
// sweep echoes its resolved configuration into the CSV header, so the
// emitted "# config:" line reproduces the run when fed back in.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "casimir/dispersion.hpp"
#include "casimir/errors.hpp"
#include "casimir/geometry.hpp"
#include "casimir/ideal.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/magnetic.hpp"
#include "casimir/polylog.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/sweep.hpp"
#include "casimir/units.hpp"

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

bool is_set(double v) { return std::isfinite(v); }

// ---------------------------------------------------------------------------
// config handling
// ---------------------------------------------------------------------------

json load_config(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
    } else {
        std::ifstream in(path);
        if (!in) throw UsageError("config: cannot open '" + path + "'");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    }
    json cfg = json::parse(text, nullptr, false);
    if (cfg.is_discarded() || !cfg.is_object())
        throw UsageError("config: '" + path + "' does not hold a JSON object");
    return cfg;
}

// Flags override config fields: a config value is applied only when the
// corresponding flag was not given on the command line.
template <typename T>
void merge_option(const CLI::App& cmd, const std::string& flag, const json& cfg,
                  const std::string& key, T& value) {
    const CLI::Option* opt = cmd.get_option_no_throw(flag);
    if (opt != nullptr && opt->count() > 0) return;
    if (!cfg.contains(key)) return;
    try {
        value = cfg.at(key).get<T>();
    } catch (const std::exception&) {
        throw UsageError("config: field '" + key + "' has the wrong type");
    }
}

// ---------------------------------------------------------------------------
// shared option packs
// ---------------------------------------------------------------------------

struct ModelOptions {
    std::string model;
    double omega0 = 10.0;
    double gamma = 0.0;
    double Omega = 5.0;
    double eps = -1.0;

    void attach(CLI::App* cmd, std::string default_model) {
        model = std::move(default_model);
        cmd->add_option("--model", model,
                        "material model: vacuum|constant-lens|drude-gain|magnetic-drude");
        cmd->add_option("--omega0", omega0, "resonance frequency");
        cmd->add_option("--gamma", gamma, "gain linewidth");
        cmd->add_option("--Omega", Omega, "magnetic coupling strength");
        cmd->add_option("--eps", eps, "constant-lens permittivity");
    }

    void merge(const CLI::App& cmd, const json& cfg) {
        merge_option(cmd, "--model", cfg, "model", model);
        merge_option(cmd, "--omega0", cfg, "omega0", omega0);
        merge_option(cmd, "--gamma", cfg, "gamma", gamma);
        merge_option(cmd, "--Omega", cfg, "Omega", Omega);
        merge_option(cmd, "--eps", cfg, "eps", eps);
    }

    casimir::DispersionModel build() const {
        if (model == "vacuum") return casimir::DispersionModel::vacuum();
        if (model == "constant-lens") return casimir::DispersionModel::constant_lens(eps);
        if (model == "drude-gain") return casimir::DispersionModel::drude_gain(omega0, gamma);
        if (model == "magnetic-drude") return casimir::DispersionModel::magnetic_drude(Omega, omega0);
        throw UsageError("model: unknown model '" + model + "'");
    }

    void echo(ordered_json& j) const {
        j["model"] = model;
        j["omega0"] = omega0;
        j["gamma"] = gamma;
        j["Omega"] = Omega;
        j["eps"] = eps;
    }
};

casimir::UnitsContext parse_units(const std::string& name) {
    if (name == "natural") return casimir::UnitsContext::natural();
    if (name == "si") return casimir::UnitsContext::si();
    throw UsageError("units: expected natural|si, got '" + name + "'");
}

std::vector<double> linspace(double from, double to, int points) {
    if (!(std::isfinite(from) && std::isfinite(to)))
        throw UsageError("from/to: bounds must be finite");
    if (from > to) throw UsageError("from/to: need from <= to");
    if (points < 2) throw UsageError("points: need at least 2 grid points");
    std::vector<double> grid(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i)
        grid[static_cast<std::size_t>(i)] = from + (to - from) * i / (points - 1);
    return grid;
}

int emit_profile(const casimir::SweepProfile& profile, const std::string& out_path) {
    const std::string csv = profile.to_csv();
    if (out_path.empty()) {
        std::fputs(csv.c_str(), stdout);
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw UsageError("out: cannot write '" + out_path + "'");
        out << csv;
    }
    return profile.all_converged() ? 0 : 2;
}

bool row_ok(const std::vector<double>& row, bool converged) {
    if (!converged) return false;
    for (double v : row)
        if (!std::isfinite(v)) return false;
    return true;
}

// A row that cannot be computed (singular configuration, non-finite
// integrand) is flagged, never dropped and never fatal to the sweep.
void guarded_row(casimir::SweepProfile& profile, std::size_t i, double parameter,
                 const std::function<void()>& body) {
    try {
        body();
    } catch (const casimir::Error&) {
        profile.rows[i].assign(profile.columns.size(), std::numeric_limits<double>::quiet_NaN());
        profile.rows[i][0] = parameter;
        profile.row_converged[i] = false;
    }
}

void print_force(const casimir::ForceResult& result, const std::string& mode, bool has_eta,
                 double eta, bool as_json) {
    const bool si = result.units.mode == casimir::UnitsMode::SI;
    if (as_json) {
        ordered_json j;
        j["mode"] = mode;
        j["force_per_area"] = result.force_per_area;
        j["effective_distance"] = result.effective_distance;
        j["error_estimate"] = result.error_estimate;
        j["evaluations"] = result.evaluations;
        j["converged"] = result.converged;
        j["units"] = si ? "si" : "natural";
        if (has_eta) j["eta"] = eta;
        std::printf("%s\n", j.dump().c_str());
        return;
    }
    std::printf("mode               : %s\n", mode.c_str());
    std::printf("force per area     : %s%s\n", casimir::format_full(result.force_per_area).c_str(),
                si ? " N/m^2" : " (natural units)");
    std::printf("effective distance : %s%s\n",
                casimir::format_full(result.effective_distance).c_str(), si ? " m" : "");
    std::printf("error estimate     : %s\n", casimir::format_full(result.error_estimate).c_str());
    if (has_eta) std::printf("eta                : %s\n", casimir::format_full(eta).c_str());
    std::printf("converged          : %s\n", result.converged ? "yes" : "no");
}

// ---------------------------------------------------------------------------
// force
// ---------------------------------------------------------------------------

struct ForceCmd {
    CLI::App* cmd = nullptr;
    std::string config_path;
    std::string mode = "ideal";
    std::string units_name = "natural";
    double a = kUnset, b = kUnset, a_prime = kUnset;
    double rel_tol = 1e-8;
    bool as_json = false;
    ModelOptions model;

    void attach(CLI::App& app) {
        cmd = app.add_subcommand("force", "evaluate a single force configuration");
        cmd->add_option("--config", config_path, "JSON config file ('-' for stdin)");
        cmd->add_option("--mode", mode, "ideal|lifshitz|magnetic");
        cmd->add_option("--a", a, "cavity size");
        cmd->add_option("--b", b, "slab thickness");
        cmd->add_option("--a-prime", a_prime, "effective distance (ideal mode)");
        cmd->add_option("--units", units_name, "natural|si");
        cmd->add_option("--rel-tol", rel_tol, "quadrature relative tolerance");
        cmd->add_flag("--json", as_json, "structured stdout");
        model.attach(cmd, "");
    }

    int run() {
        json cfg = config_path.empty() ? json::object() : load_config(config_path);
        merge_option(*cmd, "--mode", cfg, "mode", mode);
        merge_option(*cmd, "--a", cfg, "a", a);
        merge_option(*cmd, "--b", cfg, "b", b);
        merge_option(*cmd, "--a-prime", cfg, "a_prime", a_prime);
        merge_option(*cmd, "--units", cfg, "units", units_name);
        merge_option(*cmd, "--rel-tol", cfg, "rel_tol", rel_tol);
        model.merge(*cmd, cfg);

        const casimir::UnitsContext units = parse_units(units_name);
        casimir::QuadratureSpec spec;
        spec.rel_tol = rel_tol;

        if (mode == "ideal") {
            double distance = a_prime;
            if (!is_set(distance)) {
                if (!(is_set(a) && is_set(b)))
                    throw UsageError("a-prime: ideal mode needs --a-prime or both --a and --b");
                distance = casimir::effective_distance(casimir::CavityGeometry::slab_interior(a, b));
            }
            const auto result = casimir::ideal_casimir_force(distance, units);
            print_force(result, mode, false, 0.0, as_json);
            return 0;
        }
        if (mode == "lifshitz") {
            if (!(is_set(a) && is_set(b))) throw UsageError("a/b: lifshitz mode needs --a and --b");
            if (model.model.empty()) model.model = "drude-gain";
            const auto geometry = casimir::CavityGeometry::slab_interior(a, b);
            const auto medium = model.build();
            const auto result = casimir::casimir_force_dispersive(geometry, medium, spec, units);
            bool has_eta = a != 2.0 * b;
            double eta = 0.0;
            if (has_eta) eta = casimir::ratio_eta(geometry, medium, spec, units);
            print_force(result, mode, has_eta, eta, as_json);
            return result.converged ? 0 : 2;
        }
        if (mode == "magnetic") {
            if (!(is_set(a) && is_set(b))) throw UsageError("a/b: magnetic mode needs --a and --b");
            if (model.model.empty()) model.model = "magnetic-drude";
            const auto stack = casimir::LayerStack::on_lower_mirror(a, b, model.build());
            const auto result = casimir::magnetic_force(stack, spec, units);
            print_force(result, mode, false, 0.0, as_json);
            return result.converged ? 0 : 2;
        }
        throw UsageError("mode: expected ideal|lifshitz|magnetic, got '" + mode + "'");
    }
};

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

struct SweepCmd {
    CLI::App* cmd = nullptr;
    std::string config_path;
    std::string mode = "lifshitz";
    std::string units_name = "natural";
    std::string out_path;
    double b = kUnset;
    double from = kUnset, to = kUnset;
    int points = 0;
    double rel_tol = 1e-8;
    ModelOptions model;

    void attach(CLI::App& app) {
        cmd = app.add_subcommand("sweep", "sweep the cavity size a and write CSV");
        cmd->add_option("--config", config_path, "JSON config file ('-' for stdin)");
        cmd->add_option("--mode", mode, "ideal|lifshitz|magnetic");
        cmd->add_option("--b", b, "slab thickness");
        cmd->add_option("--from", from, "first cavity size");
        cmd->add_option("--to", to, "last cavity size");
        cmd->add_option("--points", points, "grid points");
        cmd->add_option("--out", out_path, "CSV output path (stdout when omitted)");
        cmd->add_option("--units", units_name, "natural|si");
        cmd->add_option("--rel-tol", rel_tol, "quadrature relative tolerance");
        model.attach(cmd, "");
    }

    int run() {
        json cfg = config_path.empty() ? json::object() : load_config(config_path);
        merge_option(*cmd, "--mode", cfg, "mode", mode);
        merge_option(*cmd, "--b", cfg, "b", b);
        merge_option(*cmd, "--from", cfg, "from", from);
        merge_option(*cmd, "--to", cfg, "to", to);
        merge_option(*cmd, "--points", cfg, "points", points);
        merge_option(*cmd, "--out", cfg, "out", out_path);
        merge_option(*cmd, "--units", cfg, "units", units_name);
        merge_option(*cmd, "--rel-tol", cfg, "rel_tol", rel_tol);
        model.merge(*cmd, cfg);

        if (!is_set(b)) throw UsageError("b: sweeps need the slab thickness --b");
        if (!(is_set(from) && is_set(to)) || points == 0)
            throw UsageError("from/to/points: sweep grid is not fully specified");

        const casimir::UnitsContext units = parse_units(units_name);
        casimir::QuadratureSpec spec;
        spec.rel_tol = rel_tol;
        const std::vector<double> grid = linspace(from, to, points);

        casimir::SweepProfile profile;
        if (mode == "ideal") {
            profile = sweep_ideal(grid, units);
        } else if (mode == "lifshitz") {
            if (model.model.empty()) model.model = "drude-gain";
            profile = sweep_lifshitz(grid, spec, units);
        } else if (mode == "magnetic") {
            if (model.model.empty()) model.model = "magnetic-drude";
            const auto tmpl = casimir::LayerStack::on_lower_mirror(grid.front(), b, model.build());
            profile = casimir::rescaled_force_curve(tmpl, grid, spec);
        } else {
            throw UsageError("mode: expected ideal|lifshitz|magnetic, got '" + mode + "'");
        }

        profile.parameter_name = "a";
        profile.metadata = {{"tool", "casimir sweep"}, {"config", echo().dump()}};
        return emit_profile(profile, out_path);
    }

    ordered_json echo() const {
        ordered_json j;
        j["command"] = "sweep";
        j["mode"] = mode;
        model.echo(j);
        j["b"] = b;
        j["from"] = from;
        j["to"] = to;
        j["points"] = points;
        j["units"] = units_name;
        j["rel_tol"] = rel_tol;
        return j;
    }

    casimir::SweepProfile sweep_ideal(const std::vector<double>& grid,
                                      const casimir::UnitsContext& units) const {
        casimir::SweepProfile profile;
        profile.columns = {"a", "a_prime", "force"};
        profile.rows.assign(grid.size(), {});
        profile.row_converged.assign(grid.size(), false);
        casimir::for_each_index(grid.size(), casimir::ExecMode::Parallel, [&](std::size_t i) {
            const double a = grid[i];
            guarded_row(profile, i, a, [&] {
                const double folded = a - 2.0 * b;
                double force = std::numeric_limits<double>::quiet_NaN();
                if (folded != 0.0) {
                    const double magnitude =
                        casimir::ideal_casimir_force(std::abs(folded), units).force_per_area;
                    force = folded < 0.0 ? magnitude : -magnitude;
                }
                profile.rows[i] = {a, std::abs(folded), force};
                profile.row_converged[i] = row_ok(profile.rows[i], true);
            });
        });
        return profile;
    }

    casimir::SweepProfile sweep_lifshitz(const std::vector<double>& grid,
                                         const casimir::QuadratureSpec& spec,
                                         const casimir::UnitsContext& units) const {
        const auto medium = model.build();
        casimir::SweepProfile profile;
        profile.columns = {"a", "a_prime", "force", "eta", "error_estimate"};
        profile.rows.assign(grid.size(), {});
        profile.row_converged.assign(grid.size(), false);
        casimir::for_each_index(grid.size(), casimir::ExecMode::Parallel, [&](std::size_t i) {
            const double a = grid[i];
            guarded_row(profile, i, a, [&] {
                const auto geometry = casimir::CavityGeometry::slab_interior(a, b);
                const auto result = casimir::casimir_force_dispersive(geometry, medium, spec, units);
                double eta = std::numeric_limits<double>::quiet_NaN();
                if (a != 2.0 * b) eta = casimir::ratio_eta(geometry, medium, spec, units);
                profile.rows[i] = {a, result.effective_distance, result.force_per_area, eta,
                                   result.error_estimate};
                profile.row_converged[i] = row_ok(profile.rows[i], result.converged);
            });
        });
        return profile;
    }
};

// ---------------------------------------------------------------------------
// kernel / permittivity data files
// ---------------------------------------------------------------------------

struct KernelCmd {
    CLI::App* cmd = nullptr;
    std::string config_path;
    std::string out_path;
    double from = 0.0, to = 6.0;
    int points = 121;

    void attach(CLI::App& app) {
        cmd = app.add_subcommand("kernel", "tabulate the force kernel h(q)");
        cmd->add_option("--config", config_path, "JSON config file ('-' for stdin)");
        cmd->add_option("--from", from, "first q");
        cmd->add_option("--to", to, "last q");
        cmd->add_option("--points", points, "grid points");
        cmd->add_option("--out", out_path, "CSV output path (stdout when omitted)");
    }

    int run() {
        json cfg = config_path.empty() ? json::object() : load_config(config_path);
        merge_option(*cmd, "--from", cfg, "from", from);
        merge_option(*cmd, "--to", cfg, "to", to);
        merge_option(*cmd, "--points", cfg, "points", points);
        merge_option(*cmd, "--out", cfg, "out", out_path);
        if (from < 0.0) throw UsageError("from: the kernel argument q must be >= 0");

        const std::vector<double> grid = linspace(from, to, points);
        casimir::SweepProfile profile;
        profile.parameter_name = "q";
        profile.columns = {"q", "h"};
        profile.rows.reserve(grid.size());
        for (double q : grid) {
            profile.rows.push_back({q, casimir::kernel_h(q)});
            profile.row_converged.push_back(true);
        }
        ordered_json j;
        j["command"] = "kernel";
        j["from"] = from;
        j["to"] = to;
        j["points"] = points;
        profile.metadata = {{"tool", "casimir kernel"}, {"config", j.dump()}};
        return emit_profile(profile, out_path);
    }
};

struct PermittivityCmd {
    CLI::App* cmd = nullptr;
    std::string config_path;
    std::string out_path;
    std::string axis = "imag";
    double from = 0.0, to = 50.0;
    int points = 101;
    ModelOptions model;

    void attach(CLI::App& app) {
        cmd = app.add_subcommand("permittivity", "tabulate eps and mu along a frequency axis");
        cmd->add_option("--config", config_path, "JSON config file ('-' for stdin)");
        cmd->add_option("--axis", axis, "imag|real");
        cmd->add_option("--from", from, "first frequency");
        cmd->add_option("--to", to, "last frequency");
        cmd->add_option("--points", points, "grid points");
        cmd->add_option("--out", out_path, "CSV output path (stdout when omitted)");
        model.attach(cmd, "drude-gain");
    }

    int run() {
        json cfg = config_path.empty() ? json::object() : load_config(config_path);
        merge_option(*cmd, "--axis", cfg, "axis", axis);
        merge_option(*cmd, "--from", cfg, "from", from);
        merge_option(*cmd, "--to", cfg, "to", to);
        merge_option(*cmd, "--points", cfg, "points", points);
        merge_option(*cmd, "--out", cfg, "out", out_path);
        model.merge(*cmd, cfg);
        if (from < 0.0) throw UsageError("from: frequencies must be >= 0");

        const auto medium = model.build();
        const std::vector<double> grid = linspace(from, to, points);
        casimir::SweepProfile profile;
        const bool imag_axis = axis == "imag";
        if (!imag_axis && axis != "real")
            throw UsageError("axis: expected imag|real, got '" + axis + "'");

        if (imag_axis) {
            profile.parameter_name = "xi";
            profile.columns = {"xi", "eps", "mu"};
            for (double xi : grid) {
                profile.rows.push_back(
                    {xi, casimir::eps_at_imag(medium, xi), casimir::mu_at_imag(medium, xi)});
                profile.row_converged.push_back(true);
            }
        } else {
            profile.parameter_name = "omega";
            profile.columns = {"omega", "eps_re", "eps_im", "mu_re", "mu_im"};
            const double nan = std::numeric_limits<double>::quiet_NaN();
            for (double omega : grid) {
                try {
                    const auto eps = casimir::eps_at_real(medium, omega);
                    const auto mu = casimir::mu_at_real(medium, omega);
                    profile.rows.push_back({omega, eps.real(), eps.imag(), mu.real(), mu.imag()});
                    profile.row_converged.push_back(true);
                } catch (const casimir::SingularityError&) {
                    profile.rows.push_back({omega, nan, nan, nan, nan});
                    profile.row_converged.push_back(false);
                }
            }
        }
        ordered_json j;
        j["command"] = "permittivity";
        model.echo(j);
        j["axis"] = axis;
        j["from"] = from;
        j["to"] = to;
        j["points"] = points;
        profile.metadata = {{"tool", "casimir permittivity"}, {"config", j.dump()}};
        return emit_profile(profile, out_path);
    }
};

// ---------------------------------------------------------------------------
// levitate
// ---------------------------------------------------------------------------

struct LevitateCmd {
    CLI::App* cmd = nullptr;
    std::string config_path;
    double thickness = 0.5e-6;
    double density = 2700.0;
    double gravity = 9.81;
    double a_prime = kUnset;
    bool as_json = false;

    void attach(CLI::App& app) {
        cmd = app.add_subcommand("levitate", "balance a foil's weight against the cavity force (SI)");
        cmd->add_option("--config", config_path, "JSON config file ('-' for stdin)");
        cmd->add_option("--thickness", thickness, "foil thickness in m");
        cmd->add_option("--density", density, "foil density in kg/m^3");
        cmd->add_option("--gravity", gravity, "gravitational acceleration in m/s^2");
        cmd->add_option("--a-prime", a_prime, "candidate effective distance in m");
        cmd->add_flag("--json", as_json, "structured stdout");
    }

    int run() {
        json cfg = config_path.empty() ? json::object() : load_config(config_path);
        merge_option(*cmd, "--thickness", cfg, "thickness", thickness);
        merge_option(*cmd, "--density", cfg, "density", density);
        merge_option(*cmd, "--gravity", cfg, "gravity", gravity);
        merge_option(*cmd, "--a-prime", cfg, "a_prime", a_prime);

        const auto si = casimir::UnitsContext::si();
        const double weight = casimir::weight_per_area(thickness, density, gravity);
        const double balance = casimir::levitation_balance(thickness, density, gravity, si);
        double candidate_force = kUnset;
        if (is_set(a_prime))
            candidate_force = casimir::ideal_casimir_force(a_prime, si).force_per_area;

        if (as_json) {
            ordered_json j;
            j["weight_per_area"] = weight;
            if (std::isfinite(balance))
                j["balance_a_prime"] = balance;
            else
                j["balance_a_prime"] = "unbounded";
            if (is_set(a_prime)) {
                j["candidate_a_prime"] = a_prime;
                j["candidate_force"] = candidate_force;
            }
            std::printf("%s\n", j.dump().c_str());
            return 0;
        }
        std::printf("weight per area    : %s N/m^2\n", casimir::format_full(weight).c_str());
        if (std::isfinite(balance))
            std::printf("balance distance   : %s m\n", casimir::format_full(balance).c_str());
        else
            std::printf("balance distance   : unbounded\n");
        if (is_set(a_prime))
            std::printf("force at a'        : %s N/m^2\n",
                        casimir::format_full(candidate_force).c_str());
        return 0;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Casimir forces in planar cavities with left-handed and magnetic media"};
    app.require_subcommand(1);

    ForceCmd force;
    SweepCmd sweep;
    KernelCmd kernel;
    PermittivityCmd permittivity;
    LevitateCmd levitate;
    force.attach(app);
    sweep.attach(app);
    kernel.attach(app);
    permittivity.attach(app);
    levitate.attach(app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (force.cmd->parsed()) return force.run();
        if (sweep.cmd->parsed()) return sweep.run();
        if (kernel.cmd->parsed()) return kernel.run();
        if (permittivity.cmd->parsed()) return permittivity.run();
        if (levitate.cmd->parsed()) return levitate.run();
    } catch (const UsageError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const casimir::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
