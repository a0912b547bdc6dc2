#include "tsunami/equilibrium.hpp"

#include <cmath>
#include <string>

#include "tsunami/errors.hpp"

namespace tsunami {

namespace {

void check_in_column(double z, const Column& column) {
    if (!column.contains(z)) {
        throw DomainError("elevation " + std::to_string(z) + " outside the column [" +
                          std::to_string(column.z_f()) + ", 0]");
    }
}

} // namespace

Column::Column(double z_f, MaterialParams params) : z_f_(z_f), params_(params) {
    if (!(z_f < 0.0) || !std::isfinite(z_f)) throw DomainError("column bottom z_f must be < 0");
}

double hydrostatic_pressure(double z, const MaterialParams& m) {
    return m.p_a() - m.rho0() * m.g() * z;
}

double hydrostatic_strain(double z, const MaterialParams& m) {
    return strain_density(hydrostatic_pressure(z, m), m);
}

double hydrostatic_strain_gradient(double z, const MaterialParams& m) {
    const double q = hydrostatic_strain(z, m);
    const double c = sound_speed_q(q, m);
    return -m.g() * q / (c * c);
}

double p0(double z, const Column& column) {
    check_in_column(z, column);
    return hydrostatic_pressure(z, column.params());
}

double q0(double z, const Column& column) {
    check_in_column(z, column);
    return hydrostatic_strain(z, column.params());
}

double dq0_dz(double z, const Column& column) {
    check_in_column(z, column);
    return hydrostatic_strain_gradient(z, column.params());
}

} // namespace tsunami
