#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "tsunami/material.hpp"
#include "tsunami/numerics.hpp"

namespace tsunami {

/// Quasilinear 2x2 system q_t + m_x = 0, m_t + 2u m_x + (c^2 - u^2) q_x = S.
struct SystemDescription {
    std::function<double(double q, double m)> u; ///< mean eigenvalue
    std::function<double(double q, double m)> c; ///< half eigenvalue gap, >= 0
    std::function<double(double q, double m)> S; ///< source
};

/// u = m/q, c = c(q) of the Hugoniot law, S = -g q - (k/rho0) q |w| w.
SystemDescription water_column_system(const MaterialParams& params, double k);

/// dpsi/dq along the linkage m = A q - B: (c^2 - (u - A)^2) / S.
double psi_prime(double q, const SystemDescription& system, double A, double B);

/// Travelling solution q(x, t) = psi^{-1}(x - x0 - A t), m = A q - B.
class SourceWave {
public:
    double A() const { return A_; }
    double B() const { return B_; }
    double x0() const { return x0_; }
    double q_left() const { return q_left_; }
    double q_right() const { return q_right_; }
    bool constant() const { return constant_; }

    /// Range of psi over [q_left, q_right].
    double psi_min() const;
    double psi_max() const;
    bool in_range(double s) const;

    /// psi(q) = integral of psi_prime from q_left.
    double psi(double q) const;
    /// psi^{-1}(s); DomainError outside [psi_min, psi_max].
    double q_of_psi(double s) const;

    double m_of_q(double q) const { return A_ * q - B_; }
    double q(double x, double t) const { return q_of_psi(x - x0_ - A_ * t); }
    double m(double x, double t) const { return m_of_q(q(x, t)); }

    std::span<const double> q_nodes() const { return q_nodes_; }
    std::span<const double> psi_nodes() const { return psi_nodes_; }

private:
    friend SourceWave build_wave(const SystemDescription&, double, double, double, double,
                                 double, std::size_t);

    SystemDescription system_;
    double A_ = 0.0;
    double B_ = 0.0;
    double x0_ = 0.0;
    double q_left_ = 0.0;
    double q_right_ = 0.0;
    bool constant_ = false;
    std::vector<double> q_nodes_;
    std::vector<double> psi_nodes_;
    numerics::MonotoneCubic inverse_;
};

/**
 * Tabulates psi on [q_left, q_right] and builds its monotone inverse.
 * q_left == q_right gives a constant wave valid for every argument.
 * Throws DomainError when psi_prime vanishes or changes sign on the interval.
 */
SourceWave build_wave(const SystemDescription& system, double A, double B, double q_left,
                      double q_right, double x0 = 0.0, std::size_t nodes = 257);

struct MonotoneInterval {
    double q_left = 0.0;
    double q_right = 0.0;
    int sign = 0;
};

/// Widest run of constant nonzero psi_prime sign among n uniform samples of [q_lo, q_hi].
MonotoneInterval locate_monotone_interval(const SystemDescription& system, double A, double B,
                                          double q_lo, double q_hi, std::size_t samples = 2001);

struct ResidualSample {
    double x = 0.0;
    double t = 0.0;
    double res_q = 0.0;
    double res_m = 0.0;
};

struct ResidualReport {
    std::vector<ResidualSample> samples;
    double max_q = 0.0;
    double max_m = 0.0;

    void write_csv(std::ostream& out) const;
};

/// Finite-difference residuals of q_t + A q_x and m_t + A m_x. h = 0 picks 1e-3 of the psi range.
ResidualReport verify_transport(const SourceWave& wave, std::span<const double> x_grid,
                                std::span<const double> t_grid, double h = 0.0);

/// Finite-difference residuals of the nonlinear sourced system on the same wave.
ResidualReport verify_nonlinear(const SourceWave& wave, const SystemDescription& system,
                                std::span<const double> x_grid, std::span<const double> t_grid,
                                double h = 0.0);

} // namespace tsunami
