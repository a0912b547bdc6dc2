#pragma once

#include "tsunami/material.hpp"

namespace tsunami {

/// Water column between the sea floor z_f < 0 and the surface z = 0 (z points upwards).
class Column {
public:
    Column(double z_f, MaterialParams params);

    double z_f() const { return z_f_; }
    double depth() const { return -z_f_; }
    const MaterialParams& params() const { return params_; }
    bool contains(double z) const { return z >= z_f_ && z <= 0.0; }

private:
    double z_f_;
    MaterialParams params_;
};

// Hydrostatic law p = p_a - rho0 g z continued to any elevation where the state
// law is defined. The moving-frame profile uses it below the sea floor.
double hydrostatic_pressure(double z, const MaterialParams& m);
double hydrostatic_strain(double z, const MaterialParams& m);
double hydrostatic_strain_gradient(double z, const MaterialParams& m);

/// Pressure at rest, p0(z) = p_a - rho0 g z, for z in [z_f, 0].
double p0(double z, const Column& column);

/// Strain density at rest, q0(z) = q(p0(z)).
double q0(double z, const Column& column);

/// dq0/dz = -g q0 / c(q0)^2.
double dq0_dz(double z, const Column& column);

} // namespace tsunami
