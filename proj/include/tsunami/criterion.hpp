#pragma once

#include "tsunami/profile.hpp"

namespace tsunami {

struct CriterionInput {
    double H = 3700.0;          ///< mean ocean depth [m]
    int N = 25;                 ///< sonic back-and-forth count
    double c_s = 1647.0;        ///< sonic interaction speed [m/s]
    double lambda_candidate = 0.0;

    void validate() const;
};

/// 2 N H sqrt(g H) / c_s.
double min_wavelength(double H, int N, double c_s, const MaterialParams& params);

/// lambda >= min_wavelength(H, N, c_s).
bool is_tsunami(double lambda, double H, int N, double c_s, const MaterialParams& params);

double min_wavelength(const CriterionInput& in, const MaterialParams& params);
bool is_tsunami(const CriterionInput& in, const MaterialParams& params);

/// Oblique incidence at angle phi [rad] in [0, pi/2): g -> g cos(phi), z_f -> z_f / cos(phi).
Scenario incidence_transform(const Scenario& scenario, double phi);

} // namespace tsunami
