#include "tsunami/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <numbers>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "tsunami/criterion.hpp"
#include "tsunami/errors.hpp"

namespace tsunami {

namespace {

using nlohmann::json;

class Section {
public:
    Section(const json& doc, std::string name, std::initializer_list<const char*> keys)
        : name_(std::move(name)) {
        if (doc.is_null()) return;
        if (!doc.is_object()) throw ConfigError(fmt::format("section '{}' must be an object", name_));
        for (const auto& [key, value] : doc.items()) {
            if (std::find_if(keys.begin(), keys.end(), [&](const char* k) { return key == k; }) ==
                keys.end()) {
                throw ConfigError(fmt::format("unknown key '{}.{}'", name_, key));
            }
        }
        node_ = &doc;
    }

    template <class T>
    void read(const char* key, T& out) const {
        if (!node_ || !node_->contains(key)) return;
        out = convert<T>((*node_)[key], key);
    }

    template <class T>
    void read(const char* key, std::optional<T>& out) const {
        if (!node_ || !node_->contains(key)) return;
        out = convert<T>((*node_)[key], key);
    }

private:
    template <class T>
    T convert(const json& v, const char* key) const {
        const std::string field = name_ + "." + key;
        if constexpr (std::is_same_v<T, bool>) {
            if (!v.is_boolean()) throw ConfigError(fmt::format("{} must be a boolean", field));
            return v.get<bool>();
        } else if constexpr (std::is_same_v<T, std::string>) {
            if (!v.is_string()) throw ConfigError(fmt::format("{} must be a string", field));
            return v.get<std::string>();
        } else if constexpr (std::is_same_v<T, EquationForm>) {
            if (!v.is_string()) throw ConfigError(fmt::format("{} must be a string", field));
            return parse_form(v.get<std::string>());
        } else if constexpr (std::is_same_v<T, std::vector<double>>) {
            if (!v.is_array()) throw ConfigError(fmt::format("{} must be a list of numbers", field));
            std::vector<double> out;
            for (const json& x : v) {
                if (!x.is_number()) throw ConfigError(fmt::format("{} must be a list of numbers", field));
                out.push_back(x.get<double>());
            }
            return out;
        } else if constexpr (std::is_integral_v<T>) {
            if (!v.is_number_integer()) throw ConfigError(fmt::format("{} must be an integer", field));
            return v.get<T>();
        } else {
            if (!v.is_number()) throw ConfigError(fmt::format("{} must be a number", field));
            return v.get<double>();
        }
    }

    std::string name_;
    const json* node_ = nullptr;
};

const json& member(const json& doc, const char* key) {
    static const json null_value;
    return doc.contains(key) ? doc[key] : null_value;
}

void require(bool ok, const std::string& message) {
    if (!ok) throw ConfigError(message);
}

bool finite_all(const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

} // namespace

MaterialParams MaterialOverrides::resolve() const {
    const MaterialParams d = water_defaults();
    return MaterialParams(rho0.value_or(d.rho0()), c0.value_or(d.c0()), s0.value_or(d.s0()),
                          g.value_or(d.g()), p_a.value_or(d.p_a()));
}

std::string_view to_string(EquationForm form) {
    return form == EquationForm::literal ? "literal" : "corrected";
}

EquationForm parse_form(std::string_view text) {
    if (text == "corrected") return EquationForm::corrected;
    if (text == "literal") return EquationForm::literal;
    throw ConfigError(fmt::format("solver.form must be 'corrected' or 'literal' (got '{}')", text));
}

void RunConfig::validate() const {
    const auto positive = [](const std::optional<double>& v) { return !v || *v > 0.0; };
    const auto non_negative = [](const std::optional<double>& v) { return !v || *v >= 0.0; };
    require(positive(material.rho0), "material.rho0 must satisfy rho0 > 0");
    require(positive(material.c0), "material.c0 must satisfy c0 > 0");
    require(positive(material.s0), "material.s0 must satisfy s0 > 0");
    require(non_negative(material.g), "material.g must satisfy g >= 0");
    require(non_negative(material.p_a), "material.p_a must satisfy p_a >= 0");

    require(scenario.z_f < 0.0, "scenario.z_f must satisfy z_f < 0");
    require(std::isfinite(scenario.q_ref), "scenario.q_ref must be finite");
    require(scenario.k >= 0.0 && std::isfinite(scenario.k), "scenario.k must satisfy k ≥ 0");
    require(scenario.phi_deg >= 0.0 && scenario.phi_deg < 90.0,
            "scenario.phi_deg must satisfy 0 <= phi_deg < 90");

    require(solver.grid_step > 0.0, "solver.grid_step must satisfy grid_step > 0");
    require(solver.ode_tolerance > 0.0, "solver.ode_tolerance must satisfy ode_tolerance > 0");
    require(solver.cfl > 0.0 && solver.cfl < 1.0, "solver.cfl must satisfy 0 < cfl < 1");
    require(solver.cells >= 16, "solver.cells must satisfy cells >= 16");
    require(solver.t_max > 0.0, "solver.t_max must satisfy t_max > 0");

    require(finite_all(sweep.k_values) && !sweep.k_values.empty(), "sweep.k_values must be a non-empty list of numbers");
    for (double k : sweep.k_values) require(k >= 0.0, "sweep.k_values entries must satisfy k ≥ 0");
    require(finite_all(sweep.phi_values) && !sweep.phi_values.empty(), "sweep.phi_values must be a non-empty list of numbers");
    for (double p : sweep.phi_values) {
        require(p >= 0.0 && p < 90.0, "sweep.phi_values entries must satisfy 0 <= phi < 90 (degrees)");
    }

    require(criterion.N >= 0, "criterion.N must satisfy N >= 0");
    require(criterion.c_s > 0.0, "criterion.c_s must satisfy c_s > 0");
    require(criterion.lambda >= 0.0, "criterion.lambda must satisfy lambda >= 0");

    require(fvm.t_final >= 0.0, "fvm.t_final must satisfy t_final >= 0");
    require(fvm.domain_length > 0.0, "fvm.domain_length must satisfy domain_length > 0");
    require(fvm.snapshot_every >= 0, "fvm.snapshot_every must satisfy snapshot_every >= 0");

    require(!output.directory.empty(), "output.directory must not be empty");
    require(output.workers >= 1, "output.workers must satisfy workers >= 1");
    require(finite_all(output.composite_times), "output.composite_times must be numbers");
    for (double t : output.composite_times) require(t >= 0.0, "output.composite_times entries must be >= 0");

    try {
        material.resolve();
        for (double k : sweep.k_values) scenario_for(k, scenario.phi_deg).validate();
        for (double p : sweep.phi_values) scenario_for(scenario.k, p).validate();
        base_scenario().validate();
    } catch (const DomainError& e) {
        throw ConfigError(fmt::format("invalid scenario: {}", e.what()));
    }
}

Scenario RunConfig::scenario_for(double k, double phi_deg) const {
    Scenario sc{Column(scenario.z_f, material.resolve()), scenario.q_ref, k, solver.grid_step,
                solver.ode_tolerance, solver.form};
    return incidence_transform(sc, phi_deg * std::numbers::pi / 180.0);
}

RunConfig parse_config(std::string_view text) {
    json doc;
    const bool blank = std::all_of(text.begin(), text.end(),
                                   [](char c) { return c == ' ' || c == '\n' || c == '\t' || c == '\r'; });
    if (!blank) {
        try {
            doc = json::parse(text.begin(), text.end());
        } catch (const json::parse_error& e) {
            throw ConfigError(fmt::format("config parse error: {}", e.what()));
        }
        if (!doc.is_object()) throw ConfigError("config document must be an object");
    }

    RunConfig cfg;
    const Section top(doc, "config",
                      {"material", "scenario", "solver", "sweep", "criterion", "fvm", "output"});

    const Section material(member(doc, "material"), "material", {"rho0", "c0", "s0", "g", "p_a"});
    material.read("rho0", cfg.material.rho0);
    material.read("c0", cfg.material.c0);
    material.read("s0", cfg.material.s0);
    material.read("g", cfg.material.g);
    material.read("p_a", cfg.material.p_a);

    const Section scenario(member(doc, "scenario"), "scenario", {"z_f", "q_ref", "k", "phi_deg"});
    scenario.read("z_f", cfg.scenario.z_f);
    scenario.read("q_ref", cfg.scenario.q_ref);
    scenario.read("k", cfg.scenario.k);
    scenario.read("phi_deg", cfg.scenario.phi_deg);

    const Section solver(member(doc, "solver"), "solver",
                         {"grid_step", "ode_tolerance", "cfl", "cells", "t_max", "form"});
    solver.read("grid_step", cfg.solver.grid_step);
    solver.read("ode_tolerance", cfg.solver.ode_tolerance);
    solver.read("cfl", cfg.solver.cfl);
    solver.read("cells", cfg.solver.cells);
    solver.read("t_max", cfg.solver.t_max);
    solver.read("form", cfg.solver.form);

    const Section sweep(member(doc, "sweep"), "sweep", {"k_values", "phi_values"});
    sweep.read("k_values", cfg.sweep.k_values);
    sweep.read("phi_values", cfg.sweep.phi_values);

    const Section criterion(member(doc, "criterion"), "criterion", {"N", "c_s", "lambda"});
    criterion.read("N", cfg.criterion.N);
    criterion.read("c_s", cfg.criterion.c_s);
    criterion.read("lambda", cfg.criterion.lambda);

    const Section fvm(member(doc, "fvm"), "fvm", {"t_final", "domain_length", "snapshot_every"});
    fvm.read("t_final", cfg.fvm.t_final);
    fvm.read("domain_length", cfg.fvm.domain_length);
    fvm.read("snapshot_every", cfg.fvm.snapshot_every);

    const Section output(member(doc, "output"), "output",
                         {"directory", "emit_plots", "composite_times", "workers"});
    output.read("directory", cfg.output.directory);
    output.read("emit_plots", cfg.output.emit_plots);
    output.read("composite_times", cfg.output.composite_times);
    output.read("workers", cfg.output.workers);

    cfg.validate();
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(fmt::format("cannot open config file '{}'", path));
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

} // namespace tsunami
