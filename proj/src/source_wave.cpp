#include "tsunami/source_wave.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include <fmt/format.h>

#include "tsunami/errors.hpp"

namespace tsunami {

namespace {

constexpr double kQuadratureTolerance = 1e-10;

// d/dv of f at v with step d: centred when both neighbours are admissible, otherwise one-sided second order.
template <class F, class Ok>
double difference(F&& f, Ok&& ok, double v, double d) {
    const bool fwd = ok(v + d) && ok(v + 2 * d);
    const bool bwd = ok(v - d) && ok(v - 2 * d);
    if (ok(v + d) && ok(v - d)) return (f(v + d) - f(v - d)) / (2 * d);
    if (fwd) return (-3 * f(v) + 4 * f(v + d) - f(v + 2 * d)) / (2 * d);
    if (bwd) return (3 * f(v) - 4 * f(v - d) + f(v - 2 * d)) / (2 * d);
    throw DomainError("finite-difference stencil does not fit the tabulated range");
}

double default_step(const SourceWave& wave, double h) {
    if (h > 0.0) return h;
    if (wave.constant()) return 1e-3;
    return 1e-3 * (wave.psi_max() - wave.psi_min());
}

struct Derivatives {
    double q, q_x, q_t;
};

Derivatives derivatives(const SourceWave& wave, double x, double t, double h) {
    if (!wave.in_range(x - wave.x0() - wave.A() * t)) {
        throw DomainError(fmt::format("point (x = {}, t = {}) outside the tabulated range", x, t));
    }
    const double tau = wave.A() != 0.0 ? 0.5 * h / std::abs(wave.A()) : h;
    auto in_x = [&](double xv) { return wave.in_range(xv - wave.x0() - wave.A() * t); };
    auto in_t = [&](double tv) { return wave.in_range(x - wave.x0() - wave.A() * tv); };
    return {wave.q(x, t),
            difference([&](double xv) { return wave.q(xv, t); }, in_x, x, h),
            difference([&](double tv) { return wave.q(x, tv); }, in_t, t, tau)};
}

template <class Residual>
ResidualReport collect(std::span<const double> x_grid, std::span<const double> t_grid,
                       Residual&& residual) {
    ResidualReport report;
    report.samples.reserve(x_grid.size() * t_grid.size());
    for (double t : t_grid) {
        for (double x : x_grid) {
            ResidualSample s = residual(x, t);
            report.max_q = std::max(report.max_q, std::abs(s.res_q));
            report.max_m = std::max(report.max_m, std::abs(s.res_m));
            report.samples.push_back(s);
        }
    }
    return report;
}

} // namespace

SystemDescription water_column_system(const MaterialParams& params, double k) {
    return SystemDescription{
        [](double q, double m) { return m / q; },
        [params](double q, double) { return sound_speed_q(q, params); },
        [params, k](double q, double m) {
            const double w = m / q;
            return -params.g() * q - k / params.rho0() * q * std::abs(w) * w;
        }};
}

double psi_prime(double q, const SystemDescription& system, double A, double B) {
    const double m = A * q - B;
    const double rel = system.u(q, m) - A;
    const double c = system.c(q, m);
    const double source = system.S(q, m);
    const double numerator = c * c - rel * rel;
    const double scale = c * c + rel * rel;
    if (!(std::abs(source) > 1e-14 * scale)) {
        throw DomainError(fmt::format("psi_prime: zero source at q = {}", q));
    }
    return numerator / source;
}

double SourceWave::psi_min() const {
    return constant_ ? 0.0 : std::min(psi_nodes_.front(), psi_nodes_.back());
}

double SourceWave::psi_max() const {
    return constant_ ? 0.0 : std::max(psi_nodes_.front(), psi_nodes_.back());
}

bool SourceWave::in_range(double s) const {
    if (constant_) return true;
    const double slack = 1e-12 * (psi_max() - psi_min());
    return s >= psi_min() - slack && s <= psi_max() + slack;
}

double SourceWave::psi(double q) const {
    if (constant_) return 0.0;
    if (!(q >= q_left_ && q <= q_right_)) {
        throw DomainError(fmt::format("psi: q = {} outside [{}, {}]", q, q_left_, q_right_));
    }
    auto it = std::upper_bound(q_nodes_.begin(), q_nodes_.end(), q);
    const auto i = static_cast<std::size_t>(std::max<std::ptrdiff_t>(it - q_nodes_.begin() - 1, 0));
    if (q == q_nodes_[i]) return psi_nodes_[i];
    const auto f = [this](double v) { return psi_prime(v, system_, A_, B_); };
    return psi_nodes_[i] + numerics::adaptive_trapezoid(f, q_nodes_[i], q, kQuadratureTolerance);
}

double SourceWave::q_of_psi(double s) const {
    if (constant_) return q_left_;
    if (!in_range(s)) {
        throw DomainError(fmt::format("psi argument {} outside [{}, {}]", s, psi_min(), psi_max()));
    }
    const double sc = std::clamp(s, inverse_.front(), inverse_.back());
    double q = std::clamp(inverse_(sc), q_left_, q_right_);
    const double q_tol = 1e-15 * std::max(std::abs(q_left_), std::abs(q_right_));
    for (int it = 0; it < 8; ++it) {
        const double step = (psi(q) - s) / psi_prime(q, system_, A_, B_);
        const double next = std::clamp(q - step, q_left_, q_right_);
        const double moved = std::abs(next - q);
        q = next;
        if (moved <= q_tol) break;
    }
    return q;
}

SourceWave build_wave(const SystemDescription& system, double A, double B, double q_left,
                      double q_right, double x0, std::size_t nodes) {
    if (!(q_right >= q_left)) throw DomainError("build_wave: need q_left <= q_right");
    if (!(q_left > 0.0)) throw DomainError("build_wave: strain densities must be > 0");
    if (nodes < 3) throw DomainError("build_wave: need at least 3 nodes");

    SourceWave wave;
    wave.system_ = system;
    wave.A_ = A;
    wave.B_ = B;
    wave.x0_ = x0;
    wave.q_left_ = q_left;
    wave.q_right_ = q_right;
    if (q_right == q_left) {
        wave.constant_ = true;
        return wave;
    }

    std::vector<double> q(nodes), slope(nodes);
    int sign = 0;
    for (std::size_t i = 0; i < nodes; ++i) {
        q[i] = i + 1 == nodes ? q_right
                              : q_left + (q_right - q_left) * static_cast<double>(i) /
                                             static_cast<double>(nodes - 1);
        slope[i] = psi_prime(q[i], system, A, B);
        const int s = (slope[i] > 0.0) - (slope[i] < 0.0);
        if (s == 0 || (sign != 0 && s != sign)) {
            throw DomainError(fmt::format(
                "build_wave: psi is not monotone on [{}, {}] (psi' changes sign near q = {})",
                q_left, q_right, q[i]));
        }
        sign = s;
    }

    std::vector<double> psi(nodes, 0.0);
    const auto f = [&](double v) { return psi_prime(v, system, A, B); };
    for (std::size_t i = 1; i < nodes; ++i) {
        psi[i] = psi[i - 1] + numerics::adaptive_trapezoid(f, q[i - 1], q[i], kQuadratureTolerance);
    }

    std::vector<double> s_nodes = psi;
    std::vector<double> q_vals = q;
    std::vector<double> dq_ds(nodes);
    for (std::size_t i = 0; i < nodes; ++i) dq_ds[i] = 1.0 / slope[i];
    if (sign < 0) {
        std::reverse(s_nodes.begin(), s_nodes.end());
        std::reverse(q_vals.begin(), q_vals.end());
        std::reverse(dq_ds.begin(), dq_ds.end());
    }
    wave.inverse_ = numerics::MonotoneCubic(s_nodes, q_vals, dq_ds);
    wave.q_nodes_ = std::move(q);
    wave.psi_nodes_ = std::move(psi);
    return wave;
}

MonotoneInterval locate_monotone_interval(const SystemDescription& system, double A, double B,
                                          double q_lo, double q_hi, std::size_t samples) {
    if (!(q_hi > q_lo) || samples < 2) throw DomainError("locate_monotone_interval: bad range");
    auto sign_at = [&](double q) {
        try {
            const double v = psi_prime(q, system, A, B);
            return (v > 0.0) - (v < 0.0);
        } catch (const DomainError&) {
            return 0;
        }
    };
    auto node = [&](std::size_t i) {
        return q_lo + (q_hi - q_lo) * static_cast<double>(i) / static_cast<double>(samples - 1);
    };
    MonotoneInterval best;
    std::size_t run_start = 0;
    int run_sign = sign_at(node(0));
    auto close = [&](std::size_t end) {
        if (run_sign == 0 || end <= run_start) return;
        const double a = node(run_start);
        const double b = node(end);
        if (b - a > best.q_right - best.q_left) best = {a, b, run_sign};
    };
    for (std::size_t i = 1; i < samples; ++i) {
        const int s = sign_at(node(i));
        if (s != run_sign) {
            close(i - 1);
            run_start = i;
            run_sign = s;
        }
    }
    close(samples - 1);
    if (best.sign == 0) throw DomainError("locate_monotone_interval: no sign-definite interval");
    return best;
}

void ResidualReport::write_csv(std::ostream& out) const {
    out << "x,t,res_q,res_m\n";
    for (const ResidualSample& s : samples) {
        out << fmt::format("{:.17g},{:.17g},{:.17g},{:.17g}\n", s.x, s.t, s.res_q, s.res_m);
    }
}

ResidualReport verify_transport(const SourceWave& wave, std::span<const double> x_grid,
                                std::span<const double> t_grid, double h) {
    const double step = default_step(wave, h);
    const double A = wave.A();
    return collect(x_grid, t_grid, [&](double x, double t) {
        const Derivatives d = derivatives(wave, x, t, step);
        const double rq = d.q_t + A * d.q_x;
        // m = A q - B is affine, so its differences are A times those of q
        const double rm = A * d.q_t + A * (A * d.q_x);
        return ResidualSample{x, t, rq, rm};
    });
}

ResidualReport verify_nonlinear(const SourceWave& wave, const SystemDescription& system,
                                std::span<const double> x_grid, std::span<const double> t_grid,
                                double h) {
    const double step = default_step(wave, h);
    const double A = wave.A();
    return collect(x_grid, t_grid, [&](double x, double t) {
        const Derivatives d = derivatives(wave, x, t, step);
        const double m = wave.m_of_q(d.q);
        const double m_x = A * d.q_x;
        const double m_t = A * d.q_t;
        const double u = system.u(d.q, m);
        const double c = system.c(d.q, m);
        const double rq = d.q_t + m_x;
        const double rm = m_t + 2 * u * m_x + (c * c - u * u) * d.q_x - system.S(d.q, m);
        return ResidualSample{x, t, rq, rm};
    });
}

} // namespace tsunami
