#include "tsunami/profile.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "tsunami/errors.hpp"
#include "tsunami/numerics.hpp"

namespace tsunami {

namespace {

using numerics::Vec2;

constexpr int kMaxRefinements = 10;

struct Node {
    double z;
    double eta;
};

struct Trace {
    std::vector<Node> nodes;
    ProfileStop stop = ProfileStop::extent_reached;
};

std::string where(double z) { return " near z = " + std::to_string(z) + " m"; }

// Follows the solution curve through the sonic forcing state in the
// normalised arc length s of the plane (x, y) = ((z - z_f)/H, eta/eta_ref).
// Along the curve dz/deta = -coefficient/source, so the unit tangent is
// proportional to (-coefficient eta_ref, source H).
Trace trace_sonic_branch(const Scenario& sc, const ReferenceState& ref, double step) {
    const double H = sc.column.depth();
    const double z_f = sc.column.z_f();
    const double eta_ref = ref.q_ref - ref.q_bottom;

    const ProfileTerms at_ref = profile_terms(z_f, eta_ref, sc, ref);
    const double scale =
        std::abs(at_ref.gravity) + std::abs(at_ref.equilibrium) + std::abs(at_ref.friction);
    if (!(std::abs(at_ref.source()) > 1e-12 * scale)) {
        throw SonicSingularity("degenerate sonic point: net source vanishes at the forcing state");
    }
    // Orientation along which eta decreases away from the forcing state.
    const double sigma = at_ref.source() > 0.0 ? -1.0 : 1.0;
    const double dir = sigma < 0.0 ? -1.0 : 1.0;
    const double z_end = sigma < 0.0 ? z_f - H : 0.0;

    auto field = [&](double, Vec2 s) -> Vec2 {
        const double z = z_f + H * s.x;
        const double eta = eta_ref * s.y;
        const ProfileTerms t = profile_terms(z, eta, sc, ref);
        const Vec2 v{-sigma * t.coefficient * eta_ref, sigma * t.source() * H};
        const double n = std::hypot(v.x, v.y);
        if (!(n > 0.0) || !std::isfinite(n)) {
            throw SonicSingularity("profile tangent undefined" + where(z));
        }
        return {v.x / n, v.y / n};
    };
    // >= 0 once the trace reaches the end of the extent or eta reaches zero
    auto boundary = [&](Vec2 s) {
        const double z = z_f + H * s.x;
        return std::max((z - z_end) * dir / H, -s.y);
    };

    const double ds = step / H;
    const long max_steps = static_cast<long>(50.0 * 2.0 * H / step) + 1000;

    Trace trace;
    trace.nodes.push_back({z_f, eta_ref});
    Vec2 s{0.0, 1.0};
    for (long i = 0; i < max_steps; ++i) {
        Vec2 next = numerics::rk4_step(field, 0.0, s, ds);
        // tangents within roundoff of vertical do not count as turning back
        if ((next.x - s.x) * dir < -1e-6 * ds) {
            throw SonicSingularity("profile folds back at a second sonic point" + where(z_f + H * s.x));
        }
        if (boundary(next) >= 0.0) {
            const double h = numerics::bisect(
                [&](double hh) { return boundary(numerics::rk4_step(field, 0.0, s, hh)); }, 0.0,
                ds, 1e-14 * ds);
            next = numerics::rk4_step(field, 0.0, s, h);
            Node last{z_f + H * next.x, eta_ref * next.y};
            if ((last.z - z_end) * dir / H >= -next.y) {
                last.z = z_end;
                trace.stop = ProfileStop::extent_reached;
            } else {
                last.eta = 0.0;
                trace.stop = ProfileStop::eta_exhausted;
            }
            if (std::abs(last.z - trace.nodes.back().z) <= 1e-12 * H && trace.nodes.size() > 1) {
                trace.nodes.back() = last;
            } else {
                trace.nodes.push_back(last);
            }
            return trace;
        }
        trace.nodes.push_back({z_f + H * next.x, eta_ref * next.y});
        s = next;
    }
    throw NumericalError("profile integration exceeded its step budget");
}

Trace trace_from_bottom(const Scenario& sc, const ReferenceState& ref, double eta_bottom,
                        double step) {
    const double z_f = sc.column.z_f();
    const double H = sc.column.depth();
    const bool positive_start = eta_bottom > 0.0;
    auto rhs = [&](double z, double eta) { return profile_rhs(z, eta, sc, ref); };

    Trace trace;
    trace.nodes.push_back({z_f, eta_bottom});
    const long full_steps = static_cast<long>(std::floor(H / step));
    double eta = eta_bottom;
    for (long i = 0;; ++i) {
        const double z = z_f + static_cast<double>(i) * step;
        if (z >= 0.0) break;
        const bool last = i >= full_steps || z + step >= 0.0;
        const double h = last ? -z : step;
        double next = numerics::rk4_step(rhs, z, eta, h);
        if (positive_start && next <= 0.0) {
            const double hz = numerics::bisect(
                [&](double hh) { return numerics::rk4_step(rhs, z, eta, hh); }, 0.0, h, 1e-14 * h);
            trace.nodes.push_back({z + hz, 0.0});
            trace.stop = ProfileStop::eta_exhausted;
            return trace;
        }
        eta = next;
        trace.nodes.push_back({last ? 0.0 : z + h, eta});
        if (last) break;
    }
    trace.stop = ProfileStop::extent_reached;
    return trace;
}

double trace_distance(const Trace& coarse, const Trace& fine, double z_scale) {
    if (coarse.stop != fine.stop) return INFINITY;
    double err = 0.0;
    const std::size_t n = coarse.nodes.size();
    for (std::size_t j = 0; j + 1 < n; ++j) {
        if (2 * j >= fine.nodes.size()) return INFINITY;
        const Node& a = coarse.nodes[j];
        const Node& b = fine.nodes[2 * j];
        err = std::max({err, std::abs(a.eta - b.eta), std::abs(a.z - b.z) / z_scale});
    }
    const Node& a = coarse.nodes.back();
    const Node& b = fine.nodes.back();
    return std::max({err, std::abs(a.eta - b.eta), std::abs(a.z - b.z) / z_scale});
}

Trace subsample(const Trace& t, std::size_t stride) {
    Trace out;
    out.stop = t.stop;
    for (std::size_t i = 0; i + 1 < t.nodes.size(); i += stride) out.nodes.push_back(t.nodes[i]);
    out.nodes.push_back(t.nodes.back());
    return out;
}

std::pair<Trace, int> refine(const std::function<Trace(double)>& trace, double step, double tol,
                             double z_scale) {
    Trace coarse = trace(step);
    for (int r = 1; r <= kMaxRefinements; ++r) {
        const std::size_t stride = std::size_t{1} << r;
        Trace fine = trace(step / static_cast<double>(stride));
        if (trace_distance(coarse, fine, z_scale) <= tol) {
            return {subsample(fine, stride), r};
        }
        coarse = std::move(fine);
    }
    throw NumericalError("profile did not converge under step halving");
}

WaveProfile assemble(const Scenario& sc, const ReferenceState& ref, Trace trace, int refinements) {
    const MaterialParams& m = sc.column.params();
    std::stable_sort(trace.nodes.begin(), trace.nodes.end(),
              [](const Node& a, const Node& b) { return a.z < b.z; });

    // nodes closer than the resolution of z collapse onto the later one
    std::reverse(trace.nodes.begin(), trace.nodes.end());
    trace.nodes.erase(std::unique(trace.nodes.begin(), trace.nodes.end(),
                                  [](const Node& a, const Node& b) { return a.z == b.z; }),
                      trace.nodes.end());
    std::reverse(trace.nodes.begin(), trace.nodes.end());

    WaveProfile profile{sc.column, ref, {}, false, trace.stop, refinements};
    profile.samples.reserve(trace.nodes.size());
    for (const Node& n : trace.nodes) {
        ProfileSample s;
        s.z = n.z;
        s.q0 = hydrostatic_strain(n.z, m);
        s.eta = n.eta;
        s.q = s.q0 + n.eta;
        if (!(s.q > 0.0)) throw PositivityLoss("profile strain became non-positive" + where(n.z));
        s.w = ref.A * n.eta / s.q;
        s.p = pressure_of_strain(s.q, m);
        profile.samples.push_back(s);
    }
    bool increasing = profile.samples.size() > 1;
    for (std::size_t i = 1; i < profile.samples.size(); ++i) {
        if (!(profile.samples[i].z > profile.samples[i - 1].z)) {
            throw NumericalError("profile samples are not strictly ordered in z" + where(profile.samples[i].z));
        }
        increasing = increasing && profile.samples[i].eta > profile.samples[i - 1].eta;
    }
    profile.monotone_increasing = increasing;
    return profile;
}

} // namespace

void Scenario::validate() const {
    if (!(k >= 0.0) || !std::isfinite(k)) throw DomainError("k must satisfy k ≥ 0");
    if (!(grid_step > 0.0)) throw DomainError("grid_step must satisfy grid_step > 0");
    if (!(ode_tolerance > 0.0)) throw DomainError("ode_tolerance must satisfy ode_tolerance > 0");
    const double qb = q0(column.z_f(), column);
    if (!(q_ref > qb)) {
        throw DomainError("q_ref must satisfy q_ref > q0(z_f) = " + std::to_string(qb));
    }
}

Scenario default_scenario(double k) {
    return Scenario{Column(-3700.0, water_defaults()), 1.1296, k};
}

ReferenceState reference_state(const Scenario& scenario) {
    scenario.validate();
    const MaterialParams& m = scenario.column.params();
    ReferenceState r;
    r.q_ref = scenario.q_ref;
    r.q_bottom = q0(scenario.column.z_f(), scenario.column);
    r.c_ref = sound_speed_q(r.q_ref, m);
    r.A = r.c_ref * r.q_ref / r.q_bottom;
    r.w_ref = r.c_ref * (r.q_ref / r.q_bottom - 1.0);
    return r;
}

ProfileTerms profile_terms(double z, double eta, const Scenario& scenario,
                           const ReferenceState& reference) {
    const MaterialParams& m = scenario.column.params();
    const double q0z = hydrostatic_strain(z, m);
    const double q = q0z + eta;
    if (!(q > 0.0)) throw PositivityLoss("profile strain became non-positive" + where(z));
    const double c = sound_speed_q(q, m);
    const double c_rest = sound_speed_q(q0z, m);
    const double A2 = reference.A * reference.A;

    ProfileTerms t;
    t.coefficient = q * q * c * c - q0z * q0z * A2;
    // 1 - (q/q0)^(2 c0/alpha0 - 1), accurate for small eta
    const double ratio_term = -std::expm1((2.0 * m.speed_exponent() - 1.0) * std::log1p(eta / q0z));
    t.gravity = m.g() * q * q * q * ratio_term;
    t.equilibrium = m.g() * A2 * q0z / (c_rest * c_rest);
    if (scenario.form == EquationForm::corrected) t.equilibrium *= eta * eta;
    t.friction = scenario.k * q * A2 * eta * eta / m.rho0();
    return t;
}

double profile_rhs(double z, double eta, const Scenario& scenario,
                   const ReferenceState& reference) {
    const ProfileTerms t = profile_terms(z, eta, scenario, reference);
    const double q0z = hydrostatic_strain(z, scenario.column.params());
    const double scale = q0z * q0z * reference.A * reference.A;
    if (std::abs(t.coefficient) < kSonicTolerance * scale) {
        throw SonicSingularity("sonic singularity: q^2 c^2 - q0^2 A^2 vanishes" + where(z));
    }
    return -t.source() / t.coefficient;
}

WaveProfile integrate_profile(const Scenario& scenario) {
    const ReferenceState ref = reference_state(scenario);
    auto [trace, r] = refine(
        [&](double h) { return trace_sonic_branch(scenario, ref, h); }, scenario.grid_step,
        scenario.ode_tolerance, scenario.column.depth());
    return assemble(scenario, ref, std::move(trace), r);
}

WaveProfile integrate_profile_fixed(const Scenario& scenario, double step) {
    if (!(step > 0.0)) throw DomainError("step must be > 0");
    const ReferenceState ref = reference_state(scenario);
    return assemble(scenario, ref, trace_sonic_branch(scenario, ref, step), 0);
}

WaveProfile integrate_from_bottom(const Scenario& scenario, const ReferenceState& reference,
                                  double eta_bottom) {
    scenario.validate();
    auto [trace, r] = refine(
        [&](double h) { return trace_from_bottom(scenario, reference, eta_bottom, h); },
        scenario.grid_step, scenario.ode_tolerance, scenario.column.depth());
    return assemble(scenario, reference, std::move(trace), r);
}

} // namespace tsunami
