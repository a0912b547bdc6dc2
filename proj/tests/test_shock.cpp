#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "support/oracles.hpp"
#include "tsunami/errors.hpp"
#include "tsunami/shock.hpp"

using namespace tsunami;

namespace {

using oracle::real;

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

real oracle_rh(real q1, real w1, real q2, real w2) {
    const oracle::Water w{};
    const real slope = (oracle::strain_pressure(q2, w) - oracle::strain_pressure(q1, w)) / (q2 - q1);
    return (w1 + w2) / 2 + (q1 + q2) / 2 * std::sqrt(slope / (q1 * q2));
}

const WaveProfile& default_profile() {
    static const WaveProfile p = integrate_profile(default_scenario(1.0));
    return p;
}

const ShockPath& default_path() {
    static const ShockPath path = track_shock(default_profile(), default_scenario(1.0), 10.0);
    return path;
}

// Short linear ramp behind the front: the shock consumes it long before the surface.
WaveProfile ramp_profile(const Scenario& sc, double length) {
    const ReferenceState ref = reference_state(sc);
    const MaterialParams& m = sc.column.params();
    WaveProfile p{sc.column, ref, {}, true, ProfileStop::extent_reached, 0};
    const int n = 200;
    for (int i = 0; i <= n; ++i) {
        const double z = sc.column.z_f() - length + length * i / n;
        ProfileSample s;
        s.z = z;
        s.q0 = hydrostatic_strain(z, m);
        s.eta = (ref.q_ref - ref.q_bottom) * i / n;
        s.q = s.q0 + s.eta;
        s.w = ref.A * s.eta / s.q;
        s.p = pressure_of_strain(s.q, m);
        p.samples.push_back(s);
    }
    return p;
}

} // namespace

TEST_CASE("Rankine-Hugoniot speed against an independent evaluation") {
    const MaterialParams m = water_defaults();
    oracle::SplitMix gen(31);
    for (int i = 0; i < 1000; ++i) {
        const double q1 = gen.uniform(0.95, 1.4);
        const double q2 = gen.uniform(0.95, 1.4);
        if (std::abs(q1 - q2) < 1e-6) continue;
        const double w1 = gen.uniform(-500.0, 500.0);
        const double w2 = gen.uniform(-500.0, 500.0);
        const double s = rh_speed(q1, w1, q2, w2, m);
        CHECK(std::abs(s - static_cast<double>(oracle_rh(q1, w1, q2, w2))) < 1e-9 * (std::abs(s) + 2000.0));
        CHECK(s == doctest::Approx(rh_speed(q2, w2, q1, w1, m)).epsilon(1e-14));
    }
}

TEST_CASE("Rankine-Hugoniot degenerate and invalid states") {
    const MaterialParams m = water_defaults();
    CHECK_THROWS_AS(rh_speed(1.1, 0.0, 1.1, 0.0, m), DomainError);
    CHECK_THROWS_AS(rh_speed(1.1, 0.0, 1.1 + 1e-15, 0.0, m), DomainError);
    CHECK_THROWS_AS(rh_speed(0.0, 0.0, 1.1, 0.0, m), DomainError);
    CHECK_THROWS_AS(rh_speed(1.1, 0.0, -1.0, 0.0, m), DomainError);
    const double q = 1.05;
    const double near = rh_speed(q + 1e-7, 0.0, q, 0.0, m);
    CHECK(rel(near, rh_speed_limit(q, 0.0, m)) < 1e-6);
}

TEST_CASE("characteristic limit") {
    const MaterialParams m = water_defaults();
    CHECK(rh_speed_limit(1.0, 0.0, m) == 1647.0);
    CHECK(std::abs(rh_speed_limit(1.1296, 303.0, m) - 2932.5) <= 1.0);
    CHECK(std::abs(rh_speed_limit(1.01288, 0.0, m) - 1730.0) < 2.0);
    CHECK(rh_speed_limit(1.01288, 0.0, m) == sound_speed_q(1.01288, m));
}

TEST_CASE("front shock of the forcing state") {
    const MaterialParams m = water_defaults();
    const ReferenceState r = reference_state(default_scenario(1.0));
    const double s = rh_speed(r.q_ref, r.A * (1 - r.q_bottom / r.q_ref), r.q_bottom, 0.0, m);
    CHECK(std::abs(s - 2330.0) < 10.0);
    CHECK(s > sound_speed_q(r.q_bottom, m));
    CHECK(s < r.A);
    CHECK(s == front_shock_speed(r.q_ref, r.q_bottom, r.A, m));
}

TEST_CASE("front shock speed bounds on random states") {
    const MaterialParams m = water_defaults();
    oracle::SplitMix gen(37);
    for (int i = 0; i < 1000; ++i) {
        const double z = gen.uniform(-8000.0, 0.0);
        const double q0 = hydrostatic_strain(z, m);
        const double q_ref = q0 + gen.log_uniform(1e-6, 0.3);
        const double A = sound_speed_q(q_ref, m) * q_ref / q0;
        const double q_s = q0 + (q_ref - q0) * gen.uniform(1e-6, 1.0);
        const double s = front_shock_speed(q_s, q0, A, m);
        CHECK(s > sound_speed_q(q0, m));
        CHECK(s < A);
    }
}

TEST_CASE("front shock speed increases with the shock strain") {
    const MaterialParams m = water_defaults();
    oracle::SplitMix gen(41);
    for (int i = 0; i < 1000; ++i) {
        const double q0 = hydrostatic_strain(gen.uniform(-8000.0, 0.0), m);
        const double A = gen.uniform(1800.0, 3500.0);
        double a = q0 + gen.log_uniform(1e-7, 0.4);
        double b = q0 + gen.log_uniform(1e-7, 0.4);
        if (std::abs(a - b) < 1e-9) continue;
        if (a > b) std::swap(a, b);
        CHECK(front_shock_speed(a, q0, A, m) < front_shock_speed(b, q0, A, m));
    }
}

TEST_CASE("small-amplitude shocks travel at the local sound speed") {
    const MaterialParams m = water_defaults();
    const double q0 = hydrostatic_strain(-2000.0, m);
    const double A = 2932.67;
    for (double eps : {1e-4, 1e-6, 1e-8}) {
        const double s = front_shock_speed(q0 + eps, q0, A, m);
        CHECK(std::abs(s - sound_speed_q(q0, m)) < 10.0 * A * eps);
    }
    CHECK(front_shock_speed(q0, q0, A, m) == sound_speed_q(q0, m));
}

TEST_CASE("mean-value strain") {
    const MaterialParams m = water_defaults();
    oracle::SplitMix gen(43);
    for (int i = 0; i < 200; ++i) {
        const double q0 = gen.uniform(1.0, 1.02);
        const double qs = q0 + gen.log_uniform(1e-4, 0.3);
        const double xi = mean_value_strain(q0, qs, m);
        CHECK(xi > q0);
        CHECK(xi < qs);
        const double secant = (strain_pressure(qs, m) - strain_pressure(q0, m)) / (qs - q0);
        CHECK(rel(strain_pressure_derivative(xi, m), secant) < 1e-10);
    }
    CHECK_THROWS_AS(mean_value_strain(1.1, 1.1, m), DomainError);
}

TEST_CASE("default scenario shock path") {
    const Scenario sc = default_scenario(1.0);
    const WaveProfile& p = default_profile();
    const ShockPath& path = default_path();
    const MaterialParams& m = sc.column.params();
    REQUIRE(path.samples.size() > 100);
    CHECK(path.stop == ShockStop::surface);
    CHECK_FALSE(path.exhausted());
    CHECK(path.z_end() == 0.0);
    CHECK(path.samples.front().z == sc.column.z_f());
    CHECK(path.samples.front().q_s == doctest::Approx(p.reference.q_ref).epsilon(1e-14));

    double amplitude = INFINITY;
    for (std::size_t i = 0; i < path.samples.size(); ++i) {
        const ShockSample& s = path.samples[i];
        if (i > 0) {
            CHECK(s.t > path.samples[i - 1].t);
            CHECK(s.z > path.samples[i - 1].z);
        }
        CHECK(s.lower_bound == sound_speed_q(hydrostatic_strain(s.z, m), m));
        CHECK(s.upper_bound == p.reference.A);
        CHECK(s.lower_bound < s.speed);
        CHECK(s.speed < s.upper_bound);
        const double q0z = hydrostatic_strain(s.z, m);
        CHECK(s.q_s > q0z);
        const double xi = mean_value_strain(q0z, s.q_s, m);
        const double secant = (strain_pressure(s.q_s, m) - strain_pressure(q0z, m)) / (s.q_s - q0z);
        CHECK(rel(strain_pressure_derivative(xi, m), secant) < 1e-10);
        const double a = s.q_s - q0z;
        CHECK(a <= amplitude * (1 + 1e-12));
        amplitude = a;
    }
}

TEST_CASE("shock path is stable under time-step halving") {
    const Scenario sc = default_scenario(1.0);
    const WaveProfile& p = default_profile();
    const double dt = sc.grid_step / p.reference.A;
    const ShockPath a = track_shock(p, sc, 10.0, 4 * dt);
    const ShockPath b = track_shock(p, sc, 10.0, 2 * dt);
    for (std::size_t i = 0; i + 1 < a.samples.size(); ++i) {
        const ShockSample& s = a.samples[i];
        CHECK(std::abs(shock_position(b, s.t) - s.z) <= 1e-6 * std::abs(sc.column.z_f()));
    }
    CHECK(rel(a.t_end(), b.t_end()) < 1e-6);
}

TEST_CASE("friction changes the shock position") {
    double previous = INFINITY;
    for (double k : {0.5, 1.0, 5.0}) {
        const Scenario sc = default_scenario(k);
        const ShockPath path = track_shock(integrate_profile(sc), sc, 10.0);
        const double z = shock_position(path, 1.0);
        CHECK(z < previous);
        previous = z;
    }
}

TEST_CASE("track_shock preconditions") {
    const Scenario sc = default_scenario(1.0);
    CHECK_THROWS_AS(track_shock(default_profile(), sc, 0.0), DomainError);
    CHECK_THROWS_AS(track_shock(default_profile(), sc, 1.0, -1.0), DomainError);
    const Scenario weak = default_scenario(0.05);
    CHECK_THROWS_AS(track_shock(integrate_profile(weak), weak, 1.0), DomainError);
}

TEST_CASE("time limit stop") {
    const Scenario sc = default_scenario(1.0);
    const ShockPath path = track_shock(default_profile(), sc, 0.5);
    CHECK(path.stop == ShockStop::time_limit);
    CHECK(path.t_end() == 0.5);
    CHECK(path.z_end() < 0.0);
}

TEST_CASE("a short wave is exhausted before the surface") {
    const Scenario sc = default_scenario(1.0);
    const WaveProfile p = ramp_profile(sc, 50.0);
    const ShockPath path = track_shock(p, sc, 10.0);
    CHECK(path.exhausted());
    CHECK(path.z_end() < -3000.0);
    const CompositeWave end = composite_wave(p, path, path.t_end());
    const MaterialParams& m = sc.column.params();
    const double amplitude = end.kept.back().q - hydrostatic_strain(end.shock_position, m);
    CHECK(amplitude < 1e-3 * (p.reference.q_ref - p.reference.q_bottom));
}

TEST_CASE("shock position interpolation") {
    const ShockPath& path = default_path();
    for (std::size_t i = 0; i < path.samples.size(); i += 97) {
        CHECK(shock_position(path, path.samples[i].t) == doctest::Approx(path.samples[i].z).epsilon(1e-12));
    }
    CHECK_THROWS_AS(shock_position(path, -0.1), DomainError);
    CHECK_THROWS_AS(shock_position(path, path.t_end() + 0.1), DomainError);
}

TEST_CASE("composite wave") {
    const WaveProfile& p = default_profile();
    const ShockPath& path = default_path();

    const CompositeWave start = composite_wave(p, path, 0.0);
    CHECK(start.eliminated.empty());
    CHECK(start.shock_position == -3700.0);

    const ShockSample& mid = path.samples[path.samples.size() / 2];
    const CompositeWave w = composite_wave(p, path, mid.t);
    CHECK_FALSE(w.kept.empty());
    CHECK_FALSE(w.eliminated.empty());
    CHECK(w.kept.back().z == doctest::Approx(mid.z).epsilon(1e-12));
    CHECK(w.kept.back().q == doctest::Approx(mid.q_s).epsilon(1e-12));
    for (const CompositePoint& c : w.kept) {
        CHECK(c.z <= w.shock_position);
        CHECK(c.z >= -3700.0);
    }
    for (const CompositePoint& c : w.eliminated) {
        CHECK(c.z > w.shock_position);
        CHECK(c.z <= 0.0);
    }
    CHECK_THROWS_AS(composite_wave(p, path, path.t_end() + 1.0), DomainError);
}
