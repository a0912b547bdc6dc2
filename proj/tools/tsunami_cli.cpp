#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "tsunami/config.hpp"
#include "tsunami/errors.hpp"
#include "tsunami/run.hpp"

namespace {

struct Overrides {
    std::optional<double> k, q_ref, z_f, phi_deg, grid_step, cfl, t_max, lambda;
    std::optional<std::string> form, out;
    std::optional<int> workers;
    std::optional<long> cells;
};

void apply(const Overrides& o, tsunami::RunConfig& cfg) {
    if (o.k) cfg.scenario.k = *o.k;
    if (o.q_ref) cfg.scenario.q_ref = *o.q_ref;
    if (o.z_f) cfg.scenario.z_f = *o.z_f;
    if (o.phi_deg) cfg.scenario.phi_deg = *o.phi_deg;
    if (o.grid_step) cfg.solver.grid_step = *o.grid_step;
    if (o.cfl) cfg.solver.cfl = *o.cfl;
    if (o.t_max) cfg.solver.t_max = *o.t_max;
    if (o.cells) cfg.solver.cells = *o.cells;
    if (o.form) cfg.solver.form = tsunami::parse_form(*o.form);
    if (o.lambda) cfg.criterion.lambda = *o.lambda;
    if (o.out) cfg.output.directory = *o.out;
    if (o.workers) cfg.output.workers = *o.workers;
    cfg.validate();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"One-dimensional tsunami generation simulator"};
    app.require_subcommand(1);

    const std::map<std::string, tsunami::Command> commands{
        {"profile", tsunami::Command::profile},
        {"shock", tsunami::Command::shock},
        {"sweep", tsunami::Command::sweep},
        {"fvm", tsunami::Command::fvm},
        {"criterion", tsunami::Command::criterion},
        {"annex", tsunami::Command::annex},
    };
    const std::map<std::string, std::string> help{
        {"profile", "Strain-wave profile for one case"},
        {"shock", "Profile, front-shock path, composite waves and criterion for one case"},
        {"sweep", "Shock runs over every (k, phi) pair of the sweep section"},
        {"fvm", "Finite-volume front speed of the bottom Riemann problem"},
        {"criterion", "Wavelength criterion verdict"},
        {"annex", "Source-wave construction and residual checks"},
    };

    std::string config_path;
    Overrides o;
    for (const auto& [name, cmd] : commands) {
        CLI::App* sub = app.add_subcommand(name, help.at(name));
        sub->add_option("config", config_path, "JSON configuration file");
        sub->add_option("--k", o.k, "Friction coefficient");
        sub->add_option("--q-ref", o.q_ref, "Forcing strain at the sea floor");
        sub->add_option("--z-f", o.z_f, "Sea floor elevation [m]");
        sub->add_option("--phi-deg", o.phi_deg, "Incidence angle [deg]");
        sub->add_option("--form", o.form, "Profile equation form: corrected or literal");
        sub->add_option("--grid-step", o.grid_step, "Profile step [m]");
        sub->add_option("--cfl", o.cfl, "Finite-volume CFL number");
        sub->add_option("--cells", o.cells, "Finite-volume cell count");
        sub->add_option("--t-max", o.t_max, "Shock tracking horizon [s]");
        sub->add_option("--lambda", o.lambda, "Candidate wavelength [m]");
        sub->add_option("--out", o.out, "Output directory");
        sub->add_option("--workers", o.workers, "Concurrent sweep cases");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : tsunami::kExitConfig;
    }

    tsunami::Command command = tsunami::Command::profile;
    for (const auto& [name, cmd] : commands) {
        if (app.got_subcommand(name)) command = cmd;
    }

    tsunami::RunConfig cfg;
    try {
        cfg = config_path.empty() ? tsunami::parse_config("") : tsunami::load_config(config_path);
        apply(o, cfg);
    } catch (const tsunami::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return tsunami::kExitConfig;
    }

    try {
        return tsunami::run(cfg, command, std::cerr);
    } catch (const tsunami::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return tsunami::kExitNumerical;
    } catch (const tsunami::DomainError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return tsunami::kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
