#include "tsunami/fvm.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tsunami/errors.hpp"

namespace tsunami::fvm {

namespace {

void require_positive(Conserved u, const char* what) {
    if (!(u.q > 0.0)) throw PositivityLoss(std::string(what) + ": strain density must be > 0");
}

double signal_speed(Conserved u, const MaterialParams& p) {
    return std::abs(u.m / u.q) + sound_speed_q(u.q, p);
}

} // namespace

FvModel FvModel::from(const Scenario& scenario) {
    return FvModel{scenario.column.params(), scenario.k, Boundary::transmissive, {}};
}

double FvState::total_strain() const {
    double sum = 0.0;
    for (const Conserved& c : cells) sum += c.q;
    return sum * dz;
}

void FvState::validate() const {
    if (cells.empty()) throw DomainError("FvState needs at least one cell");
    if (!(dz > 0.0)) throw DomainError("FvState cell width must be > 0");
    for (const Conserved& c : cells) require_positive(c, "FvState");
}

Conserved physical_flux(Conserved u, const MaterialParams& params) {
    require_positive(u, "physical_flux");
    return {u.m, u.m * u.m / u.q + strain_pressure(u.q, params)};
}

double max_signal_speed(const FvState& state, const MaterialParams& params) {
    double s = 0.0;
    for (const Conserved& c : state.cells) s = std::max(s, signal_speed(c, params));
    return s;
}

Conserved numerical_flux(Conserved left, Conserved right, const MaterialParams& params) {
    const Conserved fl = physical_flux(left, params);
    const Conserved fr = physical_flux(right, params);
    const double s = std::max(signal_speed(left, params), signal_speed(right, params));
    return 0.5 * (fl + fr) - (0.5 * s) * (right - left);
}

FvState step_dt(const FvState& state, const FvModel& model, double dt) {
    const std::size_t n = state.cells.size();
    if (n == 0) throw DomainError("FvState needs at least one cell");
    const MaterialParams& p = model.params;
    const auto& u = state.cells;

    auto cell = [&](std::ptrdiff_t i) -> Conserved {
        const auto ni = static_cast<std::ptrdiff_t>(n);
        if (model.boundary == Boundary::periodic) return u[static_cast<std::size_t>((i % ni + ni) % ni)];
        return u[static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(i, 0, ni - 1))];
    };

    // flux[i] sits on the left face of cell i
    std::vector<Conserved> flux(n + 1);
    for (std::size_t f = 0; f <= n; ++f) {
        const auto i = static_cast<std::ptrdiff_t>(f);
        flux[f] = numerical_flux(cell(i - 1), cell(i), p);
    }

    FvState next = state;
    next.t = state.t + dt;
    const double ratio = dt / state.dz;
    for (std::size_t i = 0; i < n; ++i) {
        const Conserved ui = u[i];
        const double w = ui.m / ui.q;
        Conserved source{0.0, -p.g() * ui.q - model.k / p.rho0() * ui.q * std::abs(w) * w};
        if (model.extra_source) source = source + model.extra_source(state.z_center(i), state.t);
        next.cells[i] = ui - ratio * (flux[i + 1] - flux[i]) + dt * source;
        if (!(next.cells[i].q > 0.0)) {
            throw PositivityLoss("positivity lost at z = " + std::to_string(state.z_center(i)) +
                                 ", t = " + std::to_string(next.t));
        }
    }
    return next;
}

FvState step(const FvState& state, const FvModel& model, double cfl) {
    if (!(cfl > 0.0 && cfl < 1.0)) throw DomainError("cfl must satisfy 0 < cfl < 1");
    const double dt = cfl * state.dz / max_signal_speed(state, model.params);
    return step_dt(state, model, dt);
}

FvState step(const FvState& state, const Scenario& scenario, double cfl) {
    return step(state, FvModel::from(scenario), cfl);
}

FvState advance(FvState state, const FvModel& model, double cfl, double t_final,
                const std::function<void(const FvState&, long)>& observer) {
    if (!(cfl > 0.0 && cfl < 1.0)) throw DomainError("cfl must satisfy 0 < cfl < 1");
    long n = 0;
    while (state.t < t_final) {
        double dt = cfl * state.dz / max_signal_speed(state, model.params);
        const bool last = state.t + dt >= t_final;
        if (last) dt = t_final - state.t;
        state = step_dt(state, model, dt);
        if (last) state.t = t_final;
        ++n;
        if (observer) observer(state, n);
    }
    return state;
}

FvState riemann_state(const RiemannData& data, std::size_t cells, double length) {
    if (cells < 2) throw DomainError("riemann_state needs >= 2 cells");
    FvState s;
    s.dz = length / static_cast<double>(cells);
    s.z_origin = 0.0;
    s.cells.resize(cells);
    for (std::size_t i = 0; i < cells; ++i) {
        s.cells[i] = 2 * i < cells ? Conserved{data.q_left, data.q_left * data.w_left}
                                   : Conserved{data.q_right, data.q_right * data.w_right};
    }
    s.validate();
    return s;
}

FrontSpeedReport measure_front_speed(const RiemannData& data, const FvModel& model,
                                     const FrontSpeedOptions& options) {
    FvState state = riemann_state(data, options.cells, options.length);
    const std::size_t n = state.cells.size();
    const std::size_t first_face = n / 2;

    double t_final = options.t_final;
    if (t_final <= 0.0) t_final = 0.4 * options.length / max_signal_speed(state, model.params);
    if (options.records < 2) throw DomainError("measure_front_speed needs >= 2 records");

    const double jump_scale = std::abs(data.q_left - data.q_right);
    if (!(jump_scale > 1e-12 * std::max(data.q_left, data.q_right))) {
        throw NumericalError("fit failure: no front in equal-state Riemann data");
    }

    FrontSpeedReport report;
    report.cells = n;
    long steps = 0;
    const auto observe = [&](const FvState& st, long) {
        ++steps;
        if (options.observer) options.observer(st, steps);
    };
    for (int r = 0; r < options.records; ++r) {
        const double t_rec = t_final * (0.25 + 0.75 * r / (options.records - 1));
        state = advance(std::move(state), model, options.cfl, t_rec, observe);

        // steepest jump on faces first_face .. n-1 (face f between cells f-1 and f)
        std::size_t best = first_face;
        double best_jump = -1.0;
        for (std::size_t f = std::max<std::size_t>(first_face, 1); f < n; ++f) {
            const double jump = std::abs(state.cells[f].q - state.cells[f - 1].q);
            if (jump > best_jump) {
                best_jump = jump;
                best = f;
            }
        }
        if (best_jump < 1e-9 * jump_scale) throw NumericalError("fit failure: front not found");
        if (best + 3 >= n) throw NumericalError("fit failure: front left the grid");
        auto jump_at = [&](std::size_t f) { return std::abs(state.cells[f].q - state.cells[f - 1].q); };
        double offset = 0.0;
        if (best > first_face && best + 1 < n) {
            const double gm = jump_at(best - 1);
            const double g0 = jump_at(best);
            const double gp = jump_at(best + 1);
            const double curv = gm - 2.0 * g0 + gp;
            if (curv < 0.0) offset = std::clamp(0.5 * (gm - gp) / curv, -0.5, 0.5);
        }
        report.times.push_back(state.t);
        report.positions.push_back(state.z_origin + (static_cast<double>(best) + offset) * state.dz);
    }

    const auto k = static_cast<double>(report.times.size());
    double st = 0.0, sz = 0.0;
    for (std::size_t i = 0; i < report.times.size(); ++i) {
        st += report.times[i];
        sz += report.positions[i];
    }
    const double tm = st / k;
    const double zm = sz / k;
    double stt = 0.0, stz = 0.0;
    for (std::size_t i = 0; i < report.times.size(); ++i) {
        stt += (report.times[i] - tm) * (report.times[i] - tm);
        stz += (report.times[i] - tm) * (report.positions[i] - zm);
    }
    report.speed = stz / stt;
    double rss = 0.0;
    for (std::size_t i = 0; i < report.times.size(); ++i) {
        const double r = report.positions[i] - (zm + report.speed * (report.times[i] - tm));
        rss += r * r;
    }
    report.fit_rms = std::sqrt(rss / k);
    return report;
}

} // namespace tsunami::fvm
