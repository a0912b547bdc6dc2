#pragma once

#include <vector>

#include "tsunami/numerics.hpp"
#include "tsunami/profile.hpp"

namespace tsunami {

/// Rankine-Hugoniot speed of a discontinuity between (q_left, w_left) and (q_right, w_right).
/// Throws DomainError when the two strains coincide to 1e-14; use rh_speed_limit() there.
double rh_speed(double q_left, double w_left, double q_right, double w_right,
                const MaterialParams& m);

/// Equal-state limit of rh_speed: the characteristic speed w + c(q).
double rh_speed_limit(double q, double w, const MaterialParams& m);

/// Speed of the front shock between the strain wave state q_s (fluid velocity
/// A (1 - q0/q_s)) and the rest state q0 ahead of it.
double front_shock_speed(double q_s, double q_rest, double A, const MaterialParams& m);

/// Point xi in (q_rest, q_s) with P'(xi) equal to the secant slope of P, by bisection.
double mean_value_strain(double q_rest, double q_s, const MaterialParams& m);

struct ShockSample {
    double t = 0.0;
    double z = 0.0;
    double q_s = 0.0;         ///< strain just behind the shock
    double speed = 0.0;       ///< z'(t)
    double lower_bound = 0.0; ///< c(q0(z))
    double upper_bound = 0.0; ///< A
};

enum class ShockStop {
    time_limit,
    surface,   ///< reached z = 0
    exhausted, ///< consumed the whole profile, amplitude eroded
};

struct ShockPath {
    std::vector<ShockSample> samples;
    ShockStop stop = ShockStop::time_limit;

    bool exhausted() const { return stop == ShockStop::exhausted; }
    double t_end() const { return samples.back().t; }
    double z_end() const { return samples.back().z; }
};

/// Strain deviation of the rigidly advected profile, eta_p(z - A t), zero behind its tail.
class AdvectedProfile {
public:
    explicit AdvectedProfile(const WaveProfile& profile);

    double eta(double z, double t) const;
    double tail() const { return table_.front(); }
    double front() const { return table_.back(); }
    double A() const { return A_; }

private:
    numerics::MonotoneCubic table_;
    double A_;
};

/**
 * Integrates z'(t) = front_shock_speed(q_s(t), q0(z(t))) from z(0) = z_f with
 * q_s(t) = q0(z) + eta_p(z - A t). Stops at t_max, at the surface, or once the
 * shock has fallen behind the profile tail (amplitude below
 * 1e-6 (q_ref - q0(z_f))). Default dt is grid_step / A.
 */
ShockPath track_shock(const WaveProfile& profile, const Scenario& scenario, double t_max);
ShockPath track_shock(const WaveProfile& profile, const Scenario& scenario, double t_max,
                      double dt);

/// Shock position at any t within the path, cubic Hermite in (z, speed).
double shock_position(const ShockPath& path, double t);

struct CompositePoint {
    double z = 0.0;
    double q = 0.0;
};

/// Advected profile at time t split at the shock, restricted to the water column.
struct CompositeWave {
    double t = 0.0;
    double shock_position = 0.0;
    std::vector<CompositePoint> kept;       ///< z <= z(t); ends with the shock state itself
    std::vector<CompositePoint> eliminated; ///< z > z(t), overtaken part of the strain wave
};

CompositeWave composite_wave(const WaveProfile& profile, const ShockPath& path, double t);

} // namespace tsunami
