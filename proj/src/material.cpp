#include "tsunami/material.hpp"

#include <cmath>
#include <string>

#include "tsunami/errors.hpp"

namespace tsunami {

namespace {

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw DomainError(std::string("material parameter ") + name + " must be > 0");
    }
}

double check_pressure(double p, const MaterialParams& m) {
    const double x = 1.0 + m.beta0() * p;
    if (!(x > 0.0)) {
        throw DomainError("pressure below the state-law domain (1 + beta0 p <= 0)");
    }
    return x;
}

void check_strain(double q) {
    if (!(q > 0.0)) {
        throw DomainError("strain density must be > 0");
    }
}

} // namespace

MaterialParams::MaterialParams(double rho0, double c0, double s0, double g, double p_a)
    : rho0_(rho0), c0_(c0), s0_(s0), g_(g), p_a_(p_a) {
    require_positive(rho0, "rho0");
    require_positive(c0, "c0");
    require_positive(s0, "s0");
    if (!(g >= 0.0) || !std::isfinite(g)) throw DomainError("material parameter g must be >= 0");
    if (!(p_a >= 0.0) || !std::isfinite(p_a)) throw DomainError("material parameter p_a must be >= 0");
    alpha0_ = c0 / (2.0 * s0);
    beta0_ = 4.0 * s0 / (rho0 * c0 * c0);
    gamma0_ = 2.0 * c0 / alpha0_ + 1.0;
}

MaterialParams MaterialParams::with_gravity(double g) const {
    return MaterialParams(rho0_, c0_, s0_, g, p_a_);
}

MaterialParams water_defaults() {
    return MaterialParams(1000.0, 1647.0, kWaterHugoniotSlope, 9.8, 1.0e5);
}

double hugoniot_velocity(double p, const MaterialParams& m) {
    return m.alpha0() * (std::sqrt(check_pressure(p, m)) - 1.0);
}

double sound_speed_p(double p, const MaterialParams& m) {
    return m.c0() * std::sqrt(check_pressure(p, m));
}

double strain_density(double p, const MaterialParams& m) {
    check_pressure(p, m);
    return std::exp(m.strain_exponent() * std::log1p(m.beta0() * p));
}

double pressure_of_strain(double q, const MaterialParams& m) {
    check_strain(q);
    // q^(2 c0 / alpha0) = 1 + beta0 p
    return std::expm1(2.0 * m.speed_exponent() * std::log(q)) / m.beta0();
}

double sound_speed_q(double q, const MaterialParams& m) {
    check_strain(q);
    return m.c0() * std::pow(q, m.speed_exponent());
}

double strain_pressure(double q, const MaterialParams& m) {
    check_strain(q);
    return m.c0() * m.c0() / m.gamma0() * std::pow(q, m.gamma0());
}

double strain_pressure_derivative(double q, const MaterialParams& m) {
    check_strain(q);
    return m.c0() * m.c0() * std::pow(q, m.gamma0() - 1.0);
}

} // namespace tsunami
