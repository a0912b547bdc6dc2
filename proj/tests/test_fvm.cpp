#include <doctest.h>

#include <cmath>
#include <numbers>

#include "support/oracles.hpp"
#include "tsunami/errors.hpp"
#include "tsunami/fvm.hpp"
#include "tsunami/shock.hpp"

using namespace tsunami;
using namespace tsunami::fvm;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

FvModel frictionless(double g = 0.0) {
    return FvModel{water_defaults().with_gravity(g), 0.0, Boundary::transmissive, {}};
}

FvState uniform(std::size_t n, double dz, Conserved u) {
    FvState s;
    s.cells.assign(n, u);
    s.dz = dz;
    return s;
}

RiemannData bottom_riemann() {
    const ReferenceState r = reference_state(default_scenario(1.0));
    return {r.q_ref, r.A * (1 - r.q_bottom / r.q_ref), r.q_bottom, 0.0};
}

} // namespace

TEST_CASE("physical flux") {
    const MaterialParams m = water_defaults();
    const Conserved rest = physical_flux({1.0, 0.0}, m);
    CHECK(rest.q == 0.0);
    CHECK(rel(rest.m, 1647.0 * 1647.0 / m.gamma0()) < 1e-15);

    const double q = 1.1296;
    const double w = 303.0;
    const Conserved f = physical_flux({q, q * w}, m);
    CHECK(std::abs(f.q - 342.3) < 0.05);
    CHECK(rel(f.m, (q * w) * w + strain_pressure(q, m)) < 1e-14);

    const Conserved f2 = physical_flux({q, 2 * q * w}, m);
    CHECK(f2.q == 2 * f.q);
    CHECK_THROWS_AS(physical_flux({0.0, 1.0}, m), PositivityLoss);
    CHECK_THROWS_AS(physical_flux({-1.0, 0.0}, m), PositivityLoss);
}

TEST_CASE("Rusanov flux") {
    const MaterialParams m = water_defaults();
    oracle::SplitMix gen(53);
    for (int i = 0; i < 200; ++i) {
        const Conserved u{gen.uniform(0.9, 1.3), gen.uniform(-400.0, 400.0)};
        const Conserved f = numerical_flux(u, u, m);
        const Conserved p = physical_flux(u, m);
        CHECK(f.q == p.q);
        CHECK(f.m == p.m);
        const Conserved mirrored = numerical_flux(u, {u.q, -u.m}, m);
        const Conserved opposite = numerical_flux({u.q, -u.m}, u, m);
        const double a = std::abs(u.m / u.q) + sound_speed_q(u.q, m);
        CHECK(std::abs(mirrored.q) <= 1e-12 * std::abs(u.m));
        CHECK(std::abs(opposite.q) <= 1e-12 * std::abs(u.m));
        CHECK(mirrored.m - opposite.m == doctest::Approx(2.0 * a * u.m).epsilon(1e-12));
        CHECK(mirrored.m + opposite.m == doctest::Approx(2.0 * p.m).epsilon(1e-12));
    }
    const ReferenceState r = reference_state(default_scenario(1.0));
    const Conserved f = numerical_flux({r.q_ref, r.q_ref * r.w_ref}, {r.q_bottom, 0.0}, m);
    CHECK(std::isfinite(f.q));
    CHECK(std::isfinite(f.m));
    CHECK_THROWS_AS(numerical_flux({0.0, 0.0}, {1.0, 0.0}, m), PositivityLoss);
}

TEST_CASE("opposite momenta at equal strain give zero strain flux") {
    const MaterialParams m = water_defaults();
    const Conserved f = numerical_flux({1.05, 100.0}, {1.05, -100.0}, m);
    CHECK(f.q == 0.0);
}

TEST_CASE("uniform rest state is preserved without sources") {
    FvState s = uniform(64, 10.0, {1.0, 0.0});
    const FvModel model = frictionless();
    for (int i = 0; i < 50; ++i) s = step(s, model, 0.45);
    for (const Conserved& c : s.cells) {
        CHECK(c.q == 1.0);
        CHECK(c.m == 0.0);
    }
    CHECK(s.t > 0.0);
}

TEST_CASE("step preconditions and positivity") {
    FvState s = uniform(8, 1.0, {1.0, 0.0});
    const FvModel model = frictionless();
    CHECK_THROWS_AS(step(s, model, 0.0), DomainError);
    CHECK_THROWS_AS(step(s, model, 1.0), DomainError);
    FvState bad = s;
    bad.cells[3].q = 1e-9;
    bad.cells[4].m = -5000.0;
    CHECK_THROWS_AS(step_dt(bad, model, 1e-3), PositivityLoss);
    FvState empty;
    CHECK_THROWS_AS(empty.validate(), DomainError);
}

TEST_CASE("step from a scenario uses its gravity and friction") {
    const Scenario sc = default_scenario(2.0);
    FvState s = uniform(16, 5.0, {1.05, 1.05 * 50.0});
    const FvState next = step(s, sc, 0.45);
    const double dt = next.t;
    const MaterialParams& m = sc.column.params();
    const double w = 50.0;
    const double expected = 1.05 * 50.0 + dt * (-m.g() * 1.05 - 2.0 / m.rho0() * 1.05 * w * w);
    CHECK(next.cells[8].m == doctest::Approx(expected).epsilon(1e-14));
    CHECK(next.cells[8].q == 1.05);
}

TEST_CASE("periodic conservation") {
    const FvModel model{water_defaults().with_gravity(0.0), 0.0, Boundary::periodic, {}};
    FvState s;
    s.dz = 2.0;
    for (int i = 0; i < 200; ++i) {
        const double x = 2 * std::numbers::pi * i / 200.0;
        s.cells.push_back({1.05 + 0.03 * std::sin(x), 20.0 * std::cos(2 * x)});
    }
    double q_total = s.total_strain();
    double m_total = 0.0;
    for (const Conserved& c : s.cells) m_total += c.m * s.dz;
    for (int i = 0; i < 100; ++i) s = step(s, model, 0.45);
    double m_after = 0.0;
    for (const Conserved& c : s.cells) m_after += c.m * s.dz;
    CHECK(rel(s.total_strain(), q_total) < 1e-12);
    CHECK(std::abs(m_after - m_total) < 1e-12 * std::abs(q_total) * 1000.0);
}

TEST_CASE("hydrostatic drift shrinks at first order") {
    const Column column(-3700.0, water_defaults());
    const FvModel model = FvModel::from(default_scenario(0.0));
    double previous = 0.0;
    for (std::size_t n : {400u, 800u, 1600u}) {
        FvState s;
        s.dz = column.depth() / static_cast<double>(n);
        s.z_origin = column.z_f();
        for (std::size_t i = 0; i < n; ++i) s.cells.push_back({q0(s.z_center(i), column), 0.0});
        s = advance(s, model, 0.45, 0.4);
        double drift = 0.0;
        // the disturbance from the transmissive ends travels about 700 m by t = 0.4
        for (std::size_t i = n / 4; i < 3 * n / 4; ++i) drift = std::max(drift, std::abs(s.cells[i].m));
        MESSAGE("cells " << n << " interior drift max |m| = " << drift << " at t = " << s.t);
        if (previous > 0.0) {
            CHECK(previous / drift > 1.5);
            CHECK(previous / drift < 2.5);
        }
        previous = drift;
    }
}

TEST_CASE("manufactured solution converges at first order") {
    const MaterialParams m = water_defaults();
    const double L = 1000.0;
    const double kx = 2 * std::numbers::pi / L;
    const double om = 2 * std::numbers::pi * 5.0;
    const double kf = 1.0;
    // q = 1.05 + a sin(kx z - om t), w = b + d cos(kx z - om t)
    const double a = 0.01, b = 30.0, d = 10.0;
    auto exact = [&](double z, double t) {
        const double ph = kx * z - om * t;
        const double q = 1.05 + a * std::sin(ph);
        return Conserved{q, q * (b + d * std::cos(ph))};
    };
    auto source = [&](double z, double t) {
        const double ph = kx * z - om * t;
        const double q = 1.05 + a * std::sin(ph);
        const double w = b + d * std::cos(ph);
        const double q_z = a * kx * std::cos(ph), q_t = -a * om * std::cos(ph);
        const double w_z = -d * kx * std::sin(ph), w_t = d * om * std::sin(ph);
        const double m_z = q_z * w + q * w_z, m_t = q_t * w + q * w_t;
        const double flux_m_z = 2 * w * m_z - w * w * q_z + strain_pressure_derivative(q, m) * q_z;
        const double sq = q_t + m_z;
        const double sm = m_t + flux_m_z + m.g() * q + kf / m.rho0() * q * std::abs(w) * w;
        return Conserved{sq, sm};
    };
    const FvModel model{m, kf, Boundary::periodic, source};
    const double T = 0.1;
    std::vector<double> errors;
    for (std::size_t n : {100u, 200u, 400u}) {
        FvState s;
        s.dz = L / static_cast<double>(n);
        for (std::size_t i = 0; i < n; ++i) s.cells.push_back(exact(s.z_center(i), 0.0));
        s = advance(std::move(s), model, 0.45, T);
        double err = 0.0;
        for (std::size_t i = 0; i < n; ++i) err += std::abs(s.cells[i].q - exact(s.z_center(i), T).q) * s.dz;
        errors.push_back(err);
    }
    const double r1 = errors[0] / errors[1];
    const double r2 = errors[1] / errors[2];
    MESSAGE("L1 errors " << errors[0] << " " << errors[1] << " " << errors[2]);
    CHECK(r1 == doctest::Approx(2.0).epsilon(0.15));
    CHECK(r2 == doctest::Approx(2.0).epsilon(0.15));
}

TEST_CASE("advance lands on the final time") {
    FvState s = uniform(32, 10.0, {1.0, 0.0});
    long calls = 0;
    const FvState out = advance(s, frictionless(), 0.45, 0.01, [&](const FvState&, long n) { calls = n; });
    CHECK(out.t == 0.01);
    CHECK(calls > 1);
}

TEST_CASE("front speed matches the exact Riemann solution") {
    const RiemannData d = bottom_riemann();
    const oracle::Water w{};
    const auto exact = oracle::solve_riemann(d.q_left, d.w_left, d.q_right, d.w_right, w);
    FrontSpeedOptions opt;
    opt.cells = 2000;
    const FrontSpeedReport r = measure_front_speed(d, frictionless(), opt);
    MESSAGE("front speed " << r.speed << " exact " << static_cast<double>(exact.right_speed)
                           << " q* " << static_cast<double>(exact.q_star));
    CHECK(rel(r.speed, static_cast<double>(exact.right_speed)) < 2e-3);
    const double rh = rh_speed(d.q_left, d.w_left, d.q_right, d.w_right, water_defaults());
    CHECK(rel(r.speed, rh) < 0.02);
    CHECK(r.times.size() == 40);
}

TEST_CASE("acoustic limit") {
    const MaterialParams m = water_defaults();
    const RiemannData d{1.0 + 1e-5, 0.0, 1.0, 0.0};
    FrontSpeedOptions opt;
    opt.cells = 1000;
    const FrontSpeedReport r = measure_front_speed(d, frictionless(), opt);
    CHECK(rel(r.speed, sound_speed_q(1.0, m)) < 0.05);
}

TEST_CASE("front speed failures") {
    FrontSpeedOptions opt;
    opt.cells = 200;
    CHECK_THROWS_AS(measure_front_speed({1.05, 0.0, 1.05, 0.0}, frictionless(), opt), NumericalError);
    opt.t_final = 10.0;
    CHECK_THROWS_AS(measure_front_speed(bottom_riemann(), frictionless(), opt), NumericalError);
}
