#include "tsunami/criterion.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "tsunami/errors.hpp"

namespace tsunami {

void CriterionInput::validate() const {
    if (!(H > 0.0)) throw DomainError(fmt::format("H must satisfy H > 0 (got {})", H));
    if (N < 0) throw DomainError(fmt::format("N must satisfy N >= 0 (got {})", N));
    if (!(c_s > 0.0)) throw DomainError(fmt::format("c_s must satisfy c_s > 0 (got {})", c_s));
}

double min_wavelength(double H, int N, double c_s, const MaterialParams& params) {
    CriterionInput{H, N, c_s, 0.0}.validate();
    return 2.0 * N * H * std::sqrt(params.g() * H) / c_s;
}

bool is_tsunami(double lambda, double H, int N, double c_s, const MaterialParams& params) {
    return lambda >= min_wavelength(H, N, c_s, params);
}

double min_wavelength(const CriterionInput& in, const MaterialParams& params) {
    return min_wavelength(in.H, in.N, in.c_s, params);
}

bool is_tsunami(const CriterionInput& in, const MaterialParams& params) {
    return is_tsunami(in.lambda_candidate, in.H, in.N, in.c_s, params);
}

Scenario incidence_transform(const Scenario& scenario, double phi) {
    if (!(phi >= 0.0 && phi < std::numbers::pi / 2)) {
        throw DomainError(fmt::format("phi must satisfy 0 <= phi < pi/2 (got {})", phi));
    }
    if (phi == 0.0) return scenario;
    const double c = std::cos(phi);
    Scenario out = scenario;
    out.column = Column(scenario.column.z_f() / c, scenario.column.params().with_gravity(
                                                       scenario.column.params().g() * c));
    return out;
}

} // namespace tsunami
