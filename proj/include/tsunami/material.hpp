#pragma once

namespace tsunami {

/**
 * Material constants of the velocity-pressure model.
 *
 * Only (rho0, c0, s0, g, p_a) are inputs. The Hugoniot scales alpha0, beta0
 * and the adiabatic exponent gamma0 are derived at construction so that
 * alpha0 * beta0 * rho0 * c0 == 2 holds by construction.
 */
class MaterialParams {
public:
    MaterialParams(double rho0, double c0, double s0, double g, double p_a);

    double rho0() const { return rho0_; }    ///< mass density [kg/m^3]
    double c0() const { return c0_; }        ///< sound speed at rest [m/s]
    double s0() const { return s0_; }        ///< Hugoniot slope
    double g() const { return g_; }          ///< gravity [m/s^2]
    double p_a() const { return p_a_; }      ///< atmospheric (gauge) pressure [Pa]

    double alpha0() const { return alpha0_; } ///< c0 / (2 s0) [m/s]
    double beta0() const { return beta0_; }   ///< 4 s0 / (rho0 c0^2) [1/Pa]
    double gamma0() const { return gamma0_; } ///< 2 c0 / alpha0 + 1

    /// Exponent c0/alpha0 in c(q) = c0 q^(c0/alpha0).
    double speed_exponent() const { return c0_ / alpha0_; }
    /// Exponent alpha0/(2 c0) in q(p) = (1 + beta0 p)^(alpha0/(2 c0)).
    double strain_exponent() const { return alpha0_ / (2.0 * c0_); }

    MaterialParams with_gravity(double g) const;

private:
    double rho0_, c0_, s0_, g_, p_a_;
    double alpha0_, beta0_, gamma0_;
};

/// Hugoniot slope used by water_defaults(): the value for which alpha0 = 429 m/s.
inline constexpr double kWaterHugoniotSlope = 1647.0 / (2.0 * 429.0);

/// Water: rho0 = 1000, c0 = 1647, alpha0 = 429 m/s, g = 9.8, p_a = 1e5 Pa.
MaterialParams water_defaults();

/// Positive branch of the Hugoniot curve, w(p) = alpha0 (sqrt(1 + beta0 p) - 1).
double hugoniot_velocity(double p, const MaterialParams& m);

/// c(p) = c0 sqrt(1 + beta0 p).
double sound_speed_p(double p, const MaterialParams& m);

/// q(p) = (1 + beta0 p)^(alpha0 / (2 c0)), normalised so that q(0) = 1.
double strain_density(double p, const MaterialParams& m);

/// Inverse of strain_density.
double pressure_of_strain(double q, const MaterialParams& m);

/// c(q) = c0 q^(c0 / alpha0).
double sound_speed_q(double q, const MaterialParams& m);

/// Strain pressure P(q) = (c0^2 / gamma0) q^gamma0, the flux term of the momentum law.
double strain_pressure(double q, const MaterialParams& m);

/// P'(q) = c0^2 q^(gamma0 - 1) = c(q)^2.
double strain_pressure_derivative(double q, const MaterialParams& m);

} // namespace tsunami
