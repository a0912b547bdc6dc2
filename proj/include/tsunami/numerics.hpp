#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace tsunami::numerics {

/// Plane vector for two-component ODE systems.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }

/// One classical fourth-order Runge-Kutta step of y' = f(t, y).
template <class F, class Y>
Y rk4_step(F&& f, double t, const Y& y, double h) {
    const Y k1 = f(t, y);
    const Y k2 = f(t + 0.5 * h, y + (0.5 * h) * k1);
    const Y k3 = f(t + 0.5 * h, y + (0.5 * h) * k2);
    const Y k4 = f(t + h, y + h * k3);
    return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

/**
 * Monotone piecewise-cubic Hermite interpolant.
 *
 * Nodes must be strictly increasing. Without explicit slopes the
 * Fritsch-Carlson construction is used; explicit slopes are clipped to the
 * Fritsch-Carlson region interval by interval, so monotone data always gives
 * a monotone interpolant.
 */
class MonotoneCubic {
public:
    MonotoneCubic() = default;
    MonotoneCubic(std::vector<double> x, std::vector<double> y);
    MonotoneCubic(std::vector<double> x, std::vector<double> y, std::vector<double> slopes);

    double operator()(double x) const;
    double derivative(double x) const;

    double front() const { return x_.front(); }
    double back() const { return x_.back(); }
    bool contains(double x) const { return x >= x_.front() && x <= x_.back(); }
    std::span<const double> nodes() const { return x_; }
    std::span<const double> values() const { return y_; }

private:
    std::size_t interval(double x) const;
    void limit_slopes();

    std::vector<double> x_, y_, d_;
};

/// Adaptive trapezoid quadrature with interval bisection until the relative change drops below rel_tol.
double adaptive_trapezoid(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, int max_depth = 40);

/// Root of a sign-changing continuous function on [a, b] by bisection.
double bisect(const std::function<double(double)>& f, double a, double b, double x_tol,
              int max_iter = 200);

} // namespace tsunami::numerics
