#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tsunami/profile.hpp"

namespace tsunami {

struct MaterialOverrides {
    std::optional<double> rho0, c0, s0, g, p_a;

    MaterialParams resolve() const;
};

struct ScenarioConfig {
    double z_f = -3700.0;
    double q_ref = 1.1296;
    double k = 1.0;
    double phi_deg = 0.0;
};

struct SolverConfig {
    double grid_step = 1.0;
    double ode_tolerance = 1e-8;
    double cfl = 0.45;
    long cells = 8000;
    double t_max = 10.0;
    EquationForm form = EquationForm::corrected;
};

struct SweepConfig {
    std::vector<double> k_values{0.05, 0.15, 0.5, 1.0, 2.0, 5.0, 10.0};
    std::vector<double> phi_values{0.0}; ///< degrees
};

struct CriterionConfig {
    int N = 25;
    double c_s = 1647.0;
    double lambda = 21400.0;
};

struct FvmConfig {
    double t_final = 0.0;           ///< 0 = automatic
    double domain_length = 8000.0;
    long snapshot_every = 0;        ///< 0 = no snapshots
};

struct OutputConfig {
    std::string directory = "out";
    bool emit_plots = false;
    std::vector<double> composite_times; ///< empty = four instants spanning the shock path
    int workers = 1;
};

struct RunConfig {
    MaterialOverrides material;
    ScenarioConfig scenario;
    SolverConfig solver;
    SweepConfig sweep;
    CriterionConfig criterion;
    FvmConfig fvm;
    OutputConfig output;

    /// Throws ConfigError naming the first violated constraint.
    void validate() const;

    /// Scenario for friction k and incidence phi (degrees), incidence already applied.
    Scenario scenario_for(double k, double phi_deg) const;
    Scenario base_scenario() const { return scenario_for(scenario.k, scenario.phi_deg); }
};

/// JSON document to a fully defaulted, validated config. Empty text gives the defaults.
RunConfig parse_config(std::string_view text);

RunConfig load_config(const std::string& path);

std::string_view to_string(EquationForm form);
EquationForm parse_form(std::string_view text);

} // namespace tsunami
