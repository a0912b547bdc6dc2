#pragma once

#include <vector>

#include "tsunami/equilibrium.hpp"

namespace tsunami {

/// Which third term the profile equation uses.
///
/// `corrected` carries the factor (q - q0)^2 that the multiplication by q^2
/// produces, so that eta = 0 is an equilibrium. `literal` drops it.
enum class EquationForm { corrected, literal };

/// One simulation case: column, bottom forcing, friction and solver settings.
struct Scenario {
    Column column;
    double q_ref = 1.1296;       ///< strain of the seismic forcing at the sea floor
    double k = 1.0;              ///< Strickler friction coefficient
    double grid_step = 1.0;      ///< vertical step [m]
    double ode_tolerance = 1e-8; ///< agreement required between two step halvings
    EquationForm form = EquationForm::corrected;

    /// Throws DomainError naming the violated constraint.
    void validate() const;
};

/// Water defaults, z_f = -3700 m, q_ref = 1.1296.
Scenario default_scenario(double k = 1.0);

/// Reference wave velocity A and the forcing state it is built from.
struct ReferenceState {
    double A = 0.0;        ///< reference (strain wave) velocity [m/s]
    double w_ref = 0.0;    ///< fluid velocity of the forcing state [m/s]
    double c_ref = 0.0;    ///< c(q_ref) [m/s]
    double q_ref = 0.0;
    double q_bottom = 0.0; ///< q0(z_f)
};

ReferenceState reference_state(const Scenario& scenario);

/// The four groups of the profile equation
///   coefficient * eta_z + gravity + equilibrium + friction = 0.
struct ProfileTerms {
    double coefficient = 0.0; ///< q^2 c(q)^2 - q0^2 A^2
    double gravity = 0.0;     ///< g q^3 (1 - (q/q0)^(2 c0/alpha0 - 1))
    double equilibrium = 0.0; ///< g A^2 q0 / c(q0)^2, times (q - q0)^2 in the corrected form
    double friction = 0.0;    ///< k q A^2 (q - q0)^2 / rho0

    double source() const { return gravity + equilibrium + friction; }
};

/// Terms at elevation z (any z where the hydrostatic law is defined) and deviation eta.
ProfileTerms profile_terms(double z, double eta, const Scenario& scenario,
                           const ReferenceState& reference);

/// Relative size |coefficient| / (q0 A)^2 below which profile_rhs reports a sonic point.
inline constexpr double kSonicTolerance = 1e-10;

/// d(eta)/dz from the profile equation. Throws SonicSingularity near a sonic point.
double profile_rhs(double z, double eta, const Scenario& scenario,
                   const ReferenceState& reference);

struct ProfileSample {
    double z = 0.0;
    double q0 = 0.0;
    double eta = 0.0;
    double q = 0.0;
    double w = 0.0;
    double p = 0.0;
};

enum class ProfileStop {
    extent_reached, ///< covered one column height
    eta_exhausted,  ///< deviation decayed to zero
};

/**
 * Sampled strain-wave profile.
 *
 * Samples are ordered by strictly increasing z. A profile from
 * integrate_profile() is given in the frame of t = 0: the reference state
 * sits at the sea floor z_f, where the wave enters the water.
 */
struct WaveProfile {
    Column column;
    ReferenceState reference;
    std::vector<ProfileSample> samples;
    /// eta strictly increases toward the front (upwards), the admissible shape.
    bool monotone_increasing = false;
    ProfileStop stop = ProfileStop::extent_reached;
    /// Number of step halvings needed to meet ode_tolerance.
    int refinements = 0;
};

/**
 * Strain-wave profile through the forcing state.
 *
 * By construction of A the forcing state is a sonic point of the profile
 * equation (q_ref c_ref = q0(z_f) A), so eta(z) has a square-root fold
 * there. The solution curve is followed in a normalised arc length of the
 * (z, eta) plane along the branch on which eta decreases away from q_ref.
 * When the net source is positive at the forcing state the branch lies
 * behind the front (z < z_f, q increasing toward the front); otherwise it
 * runs up the column with q decreasing toward the front.
 *
 * Fixed-step RK4 with step halving until two consecutive refinements agree
 * within ode_tolerance; samples are reported at the nominal grid_step
 * spacing in arc length.
 */
WaveProfile integrate_profile(const Scenario& scenario);

/// One fixed-step pass of integrate_profile() with arc-length step `step` [m], no refinement.
WaveProfile integrate_profile_fixed(const Scenario& scenario, double step);

/**
 * Plain bottom-up integration of eta_z = profile_rhs(z, eta) over [z_f, 0]
 * from eta(z_f) = eta_bottom, with the same step-halving control.
 * Stops at the surface, when a positive eta reaches zero, or throws
 * SonicSingularity.
 */
WaveProfile integrate_from_bottom(const Scenario& scenario, const ReferenceState& reference,
                                  double eta_bottom);

} // namespace tsunami
