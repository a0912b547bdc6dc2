#include "tsunami/shock.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "tsunami/errors.hpp"

namespace tsunami {

namespace {

constexpr double kExhaustionFraction = 1e-6;

std::vector<double> column_of(const WaveProfile& p, double ProfileSample::*field) {
    std::vector<double> v;
    v.reserve(p.samples.size());
    for (const auto& s : p.samples) v.push_back(s.*field);
    return v;
}

} // namespace

double rh_speed(double q_left, double w_left, double q_right, double w_right,
                const MaterialParams& m) {
    if (!(q_left > 0.0) || !(q_right > 0.0)) throw DomainError("rh_speed: strains must be > 0");
    if (std::abs(q_left - q_right) < 1e-14) {
        throw DomainError("rh_speed: degenerate states, use rh_speed_limit");
    }
    const double slope =
        (strain_pressure(q_right, m) - strain_pressure(q_left, m)) / (q_right - q_left);
    return 0.5 * (w_left + w_right) +
           0.5 * (q_left + q_right) * std::sqrt(slope / (q_left * q_right));
}

double rh_speed_limit(double q, double w, const MaterialParams& m) {
    return w + sound_speed_q(q, m);
}

double front_shock_speed(double q_s, double q_rest, double A, const MaterialParams& m) {
    const double w_s = A * (1.0 - q_rest / q_s);
    if (std::abs(q_s - q_rest) < 1e-14) return rh_speed_limit(q_rest, 0.0, m);
    return rh_speed(q_s, w_s, q_rest, 0.0, m);
}

double mean_value_strain(double q_rest, double q_s, const MaterialParams& m) {
    const double lo = std::min(q_rest, q_s);
    const double hi = std::max(q_rest, q_s);
    if (!(hi > lo)) throw DomainError("mean_value_strain: states coincide");
    const double secant = (strain_pressure(hi, m) - strain_pressure(lo, m)) / (hi - lo);
    return numerics::bisect(
        [&](double xi) { return strain_pressure_derivative(xi, m) - secant; }, lo, hi,
        1e-15 * hi);
}

AdvectedProfile::AdvectedProfile(const WaveProfile& profile)
    : table_(column_of(profile, &ProfileSample::z), column_of(profile, &ProfileSample::eta)),
      A_(profile.reference.A) {}

double AdvectedProfile::eta(double z, double t) const {
    const double xi = z - A_ * t;
    if (xi < table_.front()) return 0.0;
    if (xi > table_.back()) return 0.0;
    return table_(xi);
}

ShockPath track_shock(const WaveProfile& profile, const Scenario& scenario, double t_max) {
    return track_shock(profile, scenario, t_max, scenario.grid_step / profile.reference.A);
}

ShockPath track_shock(const WaveProfile& profile, const Scenario& scenario, double t_max,
                      double dt) {
    if (!profile.monotone_increasing) {
        throw DomainError("track_shock needs an admissible profile (eta increasing toward the front)");
    }
    if (!(t_max > 0.0)) throw DomainError("track_shock: t_max must be > 0");
    if (!(dt > 0.0)) throw DomainError("track_shock: dt must be > 0");

    const MaterialParams& m = scenario.column.params();
    const AdvectedProfile wave(profile);
    const double A = profile.reference.A;
    const double z_f = scenario.column.z_f();
    const double eta_floor =
        kExhaustionFraction * (profile.reference.q_ref - profile.reference.q_bottom);

    auto speed = [&](double t, double z) {
        const double rest = hydrostatic_strain(z, m);
        return front_shock_speed(rest + wave.eta(z, t), rest, A, m);
    };
    auto sample = [&](double t, double z) {
        const double rest = hydrostatic_strain(z, m);
        const double q_s = rest + wave.eta(z, t);
        return ShockSample{t, z, q_s, front_shock_speed(q_s, rest, A, m),
                           sound_speed_q(rest, m), A};
    };
    // Each stop condition becomes >= 0 once met.
    auto surface = [](double, double z) { return z; };
    auto consumed = [&](double t, double z) { return wave.tail() - (z - A * t); };
    auto eroded = [&](double t, double z) { return eta_floor - wave.eta(z, t); };

    ShockPath path;
    path.samples.push_back(sample(0.0, z_f));
    double t = 0.0;
    double z = z_f;
    const long max_steps = static_cast<long>(std::ceil(t_max / dt)) + 2;
    for (long i = 0; i < max_steps; ++i) {
        const bool last = t + dt >= t_max;
        const double h = last ? t_max - t : dt;
        const double z_new = numerics::rk4_step(speed, t, z, h);

        ShockStop stop = ShockStop::time_limit;
        std::function<double(double, double)> crossing;
        if (surface(t + h, z_new) >= 0.0) {
            stop = ShockStop::surface;
            crossing = surface;
        } else if (consumed(t + h, z_new) > 0.0) {
            stop = ShockStop::exhausted;
            crossing = consumed;
        } else if (eroded(t + h, z_new) > 0.0) {
            stop = ShockStop::exhausted;
            crossing = eroded;
        }
        if (crossing) {
            // keep lo on the side where the condition is not yet met
            double lo = 0.0;
            double hi = h;
            for (int it = 0; it < 200 && hi - lo > 1e-14 * h; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (crossing(t + mid, numerics::rk4_step(speed, t, z, mid)) >= 0.0) {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            ShockSample s = stop == ShockStop::surface
                                ? sample(t + hi, 0.0)
                                : sample(t + lo, numerics::rk4_step(speed, t, z, lo));
            if (s.t > path.samples.back().t && s.z > path.samples.back().z) {
                path.samples.push_back(s);
            }
            path.stop = stop;
            return path;
        }
        t = last ? t_max : t + h;
        z = z_new;
        path.samples.push_back(sample(t, z));
        if (last) {
            path.stop = ShockStop::time_limit;
            return path;
        }
    }
    path.stop = ShockStop::time_limit;
    return path;
}

double shock_position(const ShockPath& path, double t) {
    const auto& s = path.samples;
    if (s.empty() || t < s.front().t || t > s.back().t) {
        throw DomainError("time outside the shock path span");
    }
    auto it = std::upper_bound(s.begin(), s.end(), t,
                               [](double v, const ShockSample& x) { return v < x.t; });
    if (it == s.begin()) return s.front().z;
    if (it == s.end()) return s.back().z;
    const ShockSample& a = *(it - 1);
    const ShockSample& b = *it;
    const double h = b.t - a.t;
    const double u = (t - a.t) / h;
    const double u2 = u * u;
    const double u3 = u2 * u;
    return (2 * u3 - 3 * u2 + 1) * a.z + (u3 - 2 * u2 + u) * h * a.speed +
           (-2 * u3 + 3 * u2) * b.z + (u3 - u2) * h * b.speed;
}

CompositeWave composite_wave(const WaveProfile& profile, const ShockPath& path, double t) {
    const double zs = shock_position(path, t);
    const MaterialParams& m = profile.column.params();
    const double A = profile.reference.A;
    const double z_f = profile.column.z_f();

    CompositeWave out;
    out.t = t;
    out.shock_position = zs;
    for (const ProfileSample& s : profile.samples) {
        const double z = s.z + A * t;
        if (z < z_f || z > 0.0) continue;
        const CompositePoint p{z, hydrostatic_strain(z, m) + s.eta};
        if (z < zs) {
            out.kept.push_back(p);
        } else if (z > zs) {
            out.eliminated.push_back(p);
        }
    }
    const AdvectedProfile wave(profile);
    out.kept.push_back({zs, hydrostatic_strain(zs, m) + wave.eta(zs, t)});
    return out;
}

} // namespace tsunami
