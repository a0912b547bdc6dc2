#include "tsunami/run.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <ostream>
#include <thread>

#include <fmt/format.h>

#include "tsunami/criterion.hpp"
#include "tsunami/errors.hpp"
#include "tsunami/fvm.hpp"
#include "tsunami/source_wave.hpp"

namespace tsunami {

namespace fs = std::filesystem;

namespace {

std::string num(double v) { return fmt::format("{:.17g}", v); }

std::ofstream open_csv(const fs::path& file, const char* header) {
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error(fmt::format("cannot write '{}'", file.string()));
    out << header << '\n';
    return out;
}

std::string csv_safe(std::string text) {
    std::replace(text.begin(), text.end(), ',', ';');
    std::replace(text.begin(), text.end(), '\n', ' ');
    return text;
}

const char* outcome_name(ShockStop stop) {
    switch (stop) {
    case ShockStop::surface: return "surface";
    case ShockStop::exhausted: return "exhausted";
    case ShockStop::time_limit: return "time_limit";
    }
    return "time_limit";
}

void write_profile(const WaveProfile& p, const fs::path& file) {
    auto out = open_csv(file, "z,q0,eta,q,w,p");
    for (const ProfileSample& s : p.samples) {
        out << num(s.z) << ',' << num(s.q0) << ',' << num(s.eta) << ',' << num(s.q) << ','
            << num(s.w) << ',' << num(s.p) << '\n';
    }
}

void write_shock(const ShockPath& path, const fs::path& file) {
    auto out = open_csv(file, "t,z,q_s,speed,lower_bound,upper_bound");
    for (const ShockSample& s : path.samples) {
        out << num(s.t) << ',' << num(s.z) << ',' << num(s.q_s) << ',' << num(s.speed) << ','
            << num(s.lower_bound) << ',' << num(s.upper_bound) << '\n';
    }
}

void write_composites(const WaveProfile& profile, const ShockPath& path,
                      const std::vector<double>& requested, const fs::path& dir) {
    std::vector<double> times = requested;
    if (times.empty()) {
        for (int i = 0; i <= 3; ++i) times.push_back(path.t_end() * i / 3.0);
    }
    auto index = open_csv(dir / "composite_index.csv", "index,t,shock_position,file");
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double t = times[i];
        if (t > path.t_end()) {
            index << i << ',' << num(t) << ",,outside_shock_path\n";
            continue;
        }
        const CompositeWave wave = composite_wave(profile, path, t);
        const std::string name = fmt::format("composite_{}.csv", i);
        auto out = open_csv(dir / name, "z,q,part");
        for (const CompositePoint& p : wave.kept) out << num(p.z) << ',' << num(p.q) << ",kept\n";
        for (const CompositePoint& p : wave.eliminated) {
            out << num(p.z) << ',' << num(p.q) << ",eliminated\n";
        }
        index << i << ',' << num(t) << ',' << num(wave.shock_position) << ',' << name << '\n';
    }
}

void write_criterion(const RunConfig& cfg, const Scenario& sc, const fs::path& file) {
    const MaterialParams& m = sc.column.params();
    const double H = sc.column.depth();
    const double bound = min_wavelength(H, cfg.criterion.N, cfg.criterion.c_s, m);
    const bool verdict = is_tsunami(cfg.criterion.lambda, H, cfg.criterion.N, cfg.criterion.c_s, m);
    auto out = open_csv(file, "H,N,c_s,bound,candidate,verdict");
    out << num(H) << ',' << cfg.criterion.N << ',' << num(cfg.criterion.c_s) << ',' << num(bound)
        << ',' << num(cfg.criterion.lambda) << ',' << (verdict ? "tsunami" : "no_tsunami") << '\n';
}

void write_plot_script(const fs::path& dir) {
    std::ofstream out(dir / "plots.py", std::ios::binary | std::ios::trunc);
    out << R"(import csv
import glob
import os
import sys

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

root = os.path.dirname(os.path.abspath(__file__)) if len(sys.argv) < 2 else sys.argv[1]


def rows(path):
    with open(path) as f:
        return list(csv.DictReader(f))


def column(data, key):
    return [float(r[key]) for r in data if r[key] != ""]


fig, ax = plt.subplots()
for path in sorted(glob.glob(os.path.join(root, "**", "profile.csv"), recursive=True)):
    data = rows(path)
    ax.plot(column(data, "z"), column(data, "q"), label=os.path.relpath(os.path.dirname(path), root))
ax.set_xlabel("z [m]")
ax.set_ylabel("q")
ax.legend(fontsize="small")
fig.savefig(os.path.join(root, "profiles.png"), dpi=120)

fig, ax = plt.subplots()
for path in sorted(glob.glob(os.path.join(root, "**", "shock.csv"), recursive=True)):
    data = rows(path)
    ax.plot(column(data, "t"), column(data, "z"), label=os.path.relpath(os.path.dirname(path), root))
ax.set_xlabel("t [s]")
ax.set_ylabel("shock position z [m]")
ax.legend(fontsize="small")
fig.savefig(os.path.join(root, "shock_paths.png"), dpi=120)

for path in sorted(glob.glob(os.path.join(root, "**", "composite_*.csv"), recursive=True)):
    if path.endswith("composite_index.csv"):
        continue
    data = rows(path)
    fig, ax = plt.subplots()
    for part, colour in (("kept", "red"), ("eliminated", "blue")):
        sel = [r for r in data if r["part"] == part]
        ax.plot(column(sel, "z"), column(sel, "q"), ".", ms=1, color=colour, label=part)
    ax.set_xlabel("z [m]")
    ax.set_ylabel("q")
    ax.legend()
    fig.savefig(path[:-4] + ".png", dpi=120)
    plt.close(fig)
)";
}

void remove_files(const std::vector<fs::path>& files) {
    std::error_code ec;
    for (const fs::path& f : files) fs::remove(f, ec);
}

int run_cases(const RunConfig& cfg, Command command, std::ostream& log) {
    const fs::path root = cfg.output.directory;
    fs::create_directories(root);

    struct Case {
        double k, phi;
    };
    std::vector<Case> cases;
    if (command == Command::sweep) {
        for (double phi : cfg.sweep.phi_values) {
            for (double k : cfg.sweep.k_values) cases.push_back({k, phi});
        }
    } else {
        cases.push_back({cfg.scenario.k, cfg.scenario.phi_deg});
    }

    std::vector<CaseSummary> rows(cases.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cases.size(); i = next++) {
            const fs::path dir = command == Command::sweep ? root / fmt::format("case_{:03d}", i) : root;
            rows[i] = run_case(cfg, cases[i].k, cases[i].phi, dir, command != Command::profile);
        }
    };
    const int workers = std::clamp<int>(cfg.output.workers, 1, static_cast<int>(cases.size()));
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    write_summary(rows, root / "summary.csv");
    if (cfg.output.emit_plots) write_plot_script(root);

    std::size_t failed = 0;
    for (const CaseSummary& r : rows) {
        if (r.status != "ok") {
            ++failed;
            log << fmt::format("case k = {}, phi = {} deg failed: {}\n", r.k, r.phi_deg, r.status);
        }
    }
    if (failed == 0) return kExitOk;
    return command == Command::sweep ? kExitPartial : kExitNumerical;
}

int run_fvm(const RunConfig& cfg, std::ostream& log) {
    const fs::path root = cfg.output.directory;
    fs::create_directories(root);
    const Scenario sc = cfg.base_scenario();
    const MaterialParams m = sc.column.params();
    const ReferenceState ref = reference_state(sc);

    const fvm::RiemannData data{ref.q_ref, ref.A * (1.0 - ref.q_bottom / ref.q_ref), ref.q_bottom, 0.0};
    const fvm::FvModel model{m.with_gravity(0.0), 0.0, fvm::Boundary::transmissive, {}};

    fvm::FrontSpeedOptions options;
    options.cells = static_cast<std::size_t>(cfg.solver.cells);
    options.length = cfg.fvm.domain_length;
    options.t_final = cfg.fvm.t_final;
    options.cfl = cfg.solver.cfl;

    std::vector<fs::path> written{root / "fvm.csv", root / "fvm_front.csv"};
    std::ofstream snapshots;
    if (cfg.fvm.snapshot_every > 0) {
        written.push_back(root / "fvm_snapshots.csv");
        snapshots = open_csv(written.back(), "t,z_center,q,m,w");
        options.observer = [&](const fvm::FvState& s, long n) {
            if (n % cfg.fvm.snapshot_every != 0) return;
            for (std::size_t i = 0; i < s.cells.size(); ++i) {
                const auto& c = s.cells[i];
                snapshots << num(s.t) << ',' << num(s.z_center(i)) << ',' << num(c.q) << ','
                          << num(c.m) << ',' << num(c.m / c.q) << '\n';
            }
        };
    }

    try {
        const double rh = rh_speed(data.q_left, data.w_left, data.q_right, data.w_right, m);
        const fvm::FrontSpeedReport r = fvm::measure_front_speed(data, model, options);
        auto out = open_csv(root / "fvm.csv",
                            "cells,domain_length,q_left,w_left,q_right,w_right,rh_speed,fv_speed,relative_gap,fit_rms");
        out << r.cells << ',' << num(options.length) << ',' << num(data.q_left) << ','
            << num(data.w_left) << ',' << num(data.q_right) << ',' << num(data.w_right) << ','
            << num(rh) << ',' << num(r.speed) << ',' << num((r.speed - rh) / rh) << ','
            << num(r.fit_rms) << '\n';
        auto front = open_csv(root / "fvm_front.csv", "t,position");
        for (std::size_t i = 0; i < r.times.size(); ++i) {
            front << num(r.times[i]) << ',' << num(r.positions[i]) << '\n';
        }
        log << fmt::format("front speed {:.6g} m/s, Rankine-Hugoniot {:.6g} m/s, gap {:.3g} %\n",
                           r.speed, rh, 100.0 * (r.speed - rh) / rh);
    } catch (const std::exception&) {
        snapshots.close();
        remove_files(written);
        throw;
    }
    return kExitOk;
}

int run_criterion(const RunConfig& cfg, std::ostream& log) {
    const fs::path root = cfg.output.directory;
    fs::create_directories(root);
    const Scenario sc = cfg.base_scenario();
    write_criterion(cfg, sc, root / "criterion.csv");
    const double bound =
        min_wavelength(sc.column.depth(), cfg.criterion.N, cfg.criterion.c_s, sc.column.params());
    log << fmt::format("minimum wavelength {:.6g} m, candidate {:.6g} m: {}\n", bound,
                       cfg.criterion.lambda, cfg.criterion.lambda >= bound ? "tsunami" : "no tsunami");
    return kExitOk;
}

struct AnnexRow {
    std::string case_name;
    double h;
    double max_q;
    double max_m;
};

int run_annex(const RunConfig& cfg, std::ostream& log) {
    const fs::path root = cfg.output.directory;
    fs::create_directories(root);
    const Scenario sc = cfg.base_scenario();
    const MaterialParams& m = sc.column.params();
    const ReferenceState ref = reference_state(sc);
    const SystemDescription system = water_column_system(m, sc.k);
    const double A = ref.A;
    const double B = A * ref.q_bottom;
    const double eta_ref = ref.q_ref - ref.q_bottom;

    const MonotoneInterval iv = locate_monotone_interval(system, A, B, ref.q_bottom + 1e-6 * eta_ref,
                                                         ref.q_ref + 2.0 * eta_ref);
    const SourceWave wave = build_wave(system, A, B, iv.q_left, iv.q_right);
    const double L = wave.psi_max() - wave.psi_min();
    const double T = 0.25 * L / std::abs(A);
    std::vector<double> xs;
    for (int i = 1; i < 20; ++i) xs.push_back(wave.psi_min() + std::abs(A) * T + (L - std::abs(A) * T) * i / 20.0);
    const std::vector<double> ts{0.0, T};

    std::vector<AnnexRow> rows;
    ResidualReport finest_t, finest_n;
    for (double div : {20.0, 40.0, 80.0, 160.0}) {
        finest_t = verify_transport(wave, xs, ts, L / div);
        finest_n = verify_nonlinear(wave, system, xs, ts, L / div);
        rows.push_back({"transport", L / div, finest_t.max_q, finest_t.max_m});
        rows.push_back({"nonlinear", L / div, finest_n.max_q, finest_n.max_m});
    }
    {
        std::ofstream out(root / "annex_transport.csv", std::ios::binary | std::ios::trunc);
        finest_t.write_csv(out);
    }
    {
        std::ofstream out(root / "annex_nonlinear.csv", std::ios::binary | std::ios::trunc);
        finest_n.write_csv(out);
    }

    const double q_const = 0.5 * (iv.q_left + iv.q_right);
    const SourceWave constant = build_wave(system, A, B, q_const, q_const);
    const std::vector<double> cx{0.0, 100.0}, ct{0.0, 1.0};
    const ResidualReport cres = verify_nonlinear(constant, system, cx, ct);
    {
        std::ofstream out(root / "annex_constant.csv", std::ios::binary | std::ios::trunc);
        cres.write_csv(out);
    }
    rows.push_back({"constant_state", 1e-3, cres.max_q, cres.max_m});

    auto out = open_csv(root / "annex.csv", "case,h,max_res_q,max_res_m");
    for (const AnnexRow& r : rows) {
        out << r.case_name << ',' << num(r.h) << ',' << num(r.max_q) << ',' << num(r.max_m) << '\n';
    }
    log << fmt::format("source wave on q in [{:.8g}, {:.8g}], psi range {:.6g} m; "
                       "finest nonlinear residuals q {:.3g}, m {:.3g}; constant state m residual {:.3g}\n",
                       iv.q_left, iv.q_right, L, finest_n.max_q, finest_n.max_m, cres.max_m);
    return kExitOk;
}

} // namespace

CaseSummary run_case(const RunConfig& cfg, double k, double phi_deg, const fs::path& dir, bool track) {
    CaseSummary row;
    row.k = k;
    row.phi_deg = phi_deg;
    row.outcome = "not_tracked";
    std::vector<fs::path> written;
    try {
        fs::create_directories(dir);
        const Scenario sc = cfg.scenario_for(k, phi_deg);
        row.reference = reference_state(sc);
        const WaveProfile profile = integrate_profile(sc);
        row.admissible = profile.monotone_increasing;
        written.push_back(dir / "profile.csv");
        write_profile(profile, written.back());
        if (track) {
            written.push_back(dir / "criterion.csv");
            write_criterion(cfg, sc, written.back());
            if (!profile.monotone_increasing) {
                row.outcome = "not_admissible";
            } else {
                const ShockPath path = track_shock(profile, sc, cfg.solver.t_max);
                row.tracked = true;
                row.outcome = outcome_name(path.stop);
                row.arrival_time = path.t_end();
                row.exhaustion_depth = -path.z_end();
                row.min_lower_margin = INFINITY;
                row.min_upper_margin = INFINITY;
                for (const ShockSample& s : path.samples) {
                    row.min_lower_margin = std::min(row.min_lower_margin, s.speed - s.lower_bound);
                    row.min_upper_margin = std::min(row.min_upper_margin, s.upper_bound - s.speed);
                }
                written.push_back(dir / "shock.csv");
                write_shock(path, written.back());
                written.push_back(dir / "composite_index.csv");
                write_composites(profile, path, cfg.output.composite_times, dir);
                for (std::size_t i = 0; i < std::max<std::size_t>(cfg.output.composite_times.size(), 4); ++i) {
                    written.push_back(dir / fmt::format("composite_{}.csv", i));
                }
            }
        }
    } catch (const std::exception& e) {
        remove_files(written);
        std::error_code ec;
        if (fs::is_directory(dir, ec) && fs::is_empty(dir, ec)) fs::remove(dir, ec);
        row.status = csv_safe(fmt::format("failed: {}", e.what()));
        row.tracked = false;
    }
    return row;
}

void write_summary(const std::vector<CaseSummary>& rows, const fs::path& file) {
    auto out = open_csv(file,
                        "k,phi_deg,A,w_ref,c_ref,admissible,outcome,arrival_time,exhaustion_depth,"
                        "min_speed_over_sound,min_gap_to_A,status");
    for (const CaseSummary& r : rows) {
        const bool ok = r.status == "ok";
        out << num(r.k) << ',' << num(r.phi_deg) << ',';
        if (r.reference.A > 0.0) {
            out << num(r.reference.A) << ',' << num(r.reference.w_ref) << ',' << num(r.reference.c_ref) << ',';
        } else {
            out << ",,,";
        }
        out << (ok ? (r.admissible ? "true" : "false") : "") << ',' << (ok ? r.outcome : "") << ',';
        out << (r.tracked && r.outcome == "surface" ? num(r.arrival_time) : "") << ',';
        out << (r.tracked && r.outcome == "exhausted" ? num(r.exhaustion_depth) : "") << ',';
        out << (r.tracked ? num(r.min_lower_margin) : "") << ',' << (r.tracked ? num(r.min_upper_margin) : "")
            << ',' << r.status << '\n';
    }
}

int run(const RunConfig& cfg, Command command, std::ostream& log) {
    switch (command) {
    case Command::profile:
    case Command::shock:
    case Command::sweep: return run_cases(cfg, command, log);
    case Command::fvm: return run_fvm(cfg, log);
    case Command::criterion: return run_criterion(cfg, log);
    case Command::annex: return run_annex(cfg, log);
    }
    return kExitConfig;
}

} // namespace tsunami
