#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "tsunami/profile.hpp"

namespace tsunami::fvm {

/// Conserved pair (q, m = q w).
struct Conserved {
    double q = 0.0;
    double m = 0.0;
};

inline Conserved operator+(Conserved a, Conserved b) { return {a.q + b.q, a.m + b.m}; }
inline Conserved operator-(Conserved a, Conserved b) { return {a.q - b.q, a.m - b.m}; }
inline Conserved operator*(double s, Conserved a) { return {s * a.q, s * a.m}; }

enum class Boundary { transmissive, periodic };

/// Right-hand side of q_t + (q w)_z = 0, m_t + (m w + P(q))_z = -g q - (k/rho0) q |w| w.
struct FvModel {
    MaterialParams params;
    double k = 0.0;
    Boundary boundary = Boundary::transmissive;
    /// Optional extra source added to both equations (manufactured solutions).
    std::function<Conserved(double z, double t)> extra_source;

    static FvModel from(const Scenario& scenario);
};

/// Cell averages on a uniform grid starting at z_origin.
struct FvState {
    std::vector<Conserved> cells;
    double dz = 1.0;
    double z_origin = 0.0;
    double t = 0.0;

    double z_center(std::size_t i) const { return z_origin + (static_cast<double>(i) + 0.5) * dz; }
    double z_end() const { return z_origin + static_cast<double>(cells.size()) * dz; }
    double total_strain() const;
    void validate() const;
};

/// (m, m^2/q + P(q)).
Conserved physical_flux(Conserved u, const MaterialParams& params);

/// max(|w| + c(q)) over the state.
double max_signal_speed(const FvState& state, const MaterialParams& params);

/// Local Lax-Friedrichs (Rusanov) flux.
Conserved numerical_flux(Conserved left, Conserved right, const MaterialParams& params);

/// One forward-Euler update with dt = cfl dz / max(|w| + c).
FvState step(const FvState& state, const FvModel& model, double cfl);
FvState step(const FvState& state, const Scenario& scenario, double cfl);

/// One forward-Euler update with a prescribed dt.
FvState step_dt(const FvState& state, const FvModel& model, double dt);

/// Steps until t_final (last step clipped). The observer sees every accepted state.
FvState advance(FvState state, const FvModel& model, double cfl, double t_final,
                const std::function<void(const FvState&, long)>& observer = {});

struct RiemannData {
    double q_left = 0.0;
    double w_left = 0.0;
    double q_right = 0.0;
    double w_right = 0.0;
};

struct FrontSpeedOptions {
    std::size_t cells = 8000;
    double length = 8000.0; ///< domain length [m], jump at the centre
    double t_final = 0.0;   ///< 0 selects 0.4 length / max initial signal speed
    double cfl = 0.45;
    int records = 40;       ///< front positions sampled in [t_final/4, t_final]
    /// Called with every accepted state and the running step count.
    std::function<void(const FvState&, long)> observer;
};

struct FrontSpeedReport {
    double speed = 0.0;
    std::vector<double> times;
    std::vector<double> positions;
    double fit_rms = 0.0;
    std::size_t cells = 0;
};

/// Riemann data on a uniform grid, jump at the centre of the domain.
FvState riemann_state(const RiemannData& data, std::size_t cells, double length);

/**
 * Evolves the Riemann problem and fits the right-moving front position (the
 * steepest strain jump right of the initial discontinuity, refined to
 * sub-cell accuracy) linearly in time.
 */
FrontSpeedReport measure_front_speed(const RiemannData& data, const FvModel& model,
                                     const FrontSpeedOptions& options = {});

} // namespace tsunami::fvm
