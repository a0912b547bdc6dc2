#include "tsunami/numerics.hpp"

#include <algorithm>
#include <cmath>

#include "tsunami/errors.hpp"

namespace tsunami::numerics {

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    if (n < 2 || y_.size() != n) throw DomainError("MonotoneCubic needs >= 2 matching nodes");
    d_.assign(n, 0.0);
    std::vector<double> delta(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double h = x_[i + 1] - x_[i];
        if (!(h > 0.0)) throw DomainError("MonotoneCubic nodes must be strictly increasing");
        delta[i] = (y_[i + 1] - y_[i]) / h;
    }
    d_.front() = delta.front();
    d_.back() = delta.back();
    for (std::size_t i = 1; i + 1 < n; ++i) {
        d_[i] = (delta[i - 1] * delta[i] > 0.0) ? 0.5 * (delta[i - 1] + delta[i]) : 0.0;
    }
    limit_slopes();
}

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y, std::vector<double> slopes)
    : x_(std::move(x)), y_(std::move(y)), d_(std::move(slopes)) {
    const std::size_t n = x_.size();
    if (n < 2 || y_.size() != n || d_.size() != n) {
        throw DomainError("MonotoneCubic needs >= 2 matching nodes");
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (!(x_[i + 1] > x_[i])) throw DomainError("MonotoneCubic nodes must be strictly increasing");
    }
    limit_slopes();
}

void MonotoneCubic::limit_slopes() {
    for (std::size_t i = 0; i + 1 < x_.size(); ++i) {
        const double delta = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]);
        if (delta == 0.0) {
            d_[i] = 0.0;
            d_[i + 1] = 0.0;
            continue;
        }
        if (d_[i] * delta < 0.0) d_[i] = 0.0;
        if (d_[i + 1] * delta < 0.0) d_[i + 1] = 0.0;
        const double a = d_[i] / delta;
        const double b = d_[i + 1] / delta;
        const double r = a * a + b * b;
        if (r > 9.0) {
            const double tau = 3.0 / std::sqrt(r);
            d_[i] = tau * a * delta;
            d_[i + 1] = tau * b * delta;
        }
    }
}

std::size_t MonotoneCubic::interval(double x) const {
    if (!contains(x)) throw DomainError("MonotoneCubic evaluated outside its nodes");
    auto it = std::upper_bound(x_.begin(), x_.end(), x);
    std::size_t i = static_cast<std::size_t>(it - x_.begin());
    return i == 0 ? 0 : std::min(i - 1, x_.size() - 2);
}

double MonotoneCubic::operator()(double x) const {
    const std::size_t i = interval(x);
    const double h = x_[i + 1] - x_[i];
    const double s = (x - x_[i]) / h;
    const double s2 = s * s;
    const double s3 = s2 * s;
    const double h00 = 2.0 * s3 - 3.0 * s2 + 1.0;
    const double h10 = s3 - 2.0 * s2 + s;
    const double h01 = -2.0 * s3 + 3.0 * s2;
    const double h11 = s3 - s2;
    return h00 * y_[i] + h10 * h * d_[i] + h01 * y_[i + 1] + h11 * h * d_[i + 1];
}

double MonotoneCubic::derivative(double x) const {
    const std::size_t i = interval(x);
    const double h = x_[i + 1] - x_[i];
    const double s = (x - x_[i]) / h;
    const double s2 = s * s;
    const double dh00 = (6.0 * s2 - 6.0 * s) / h;
    const double dh10 = 3.0 * s2 - 4.0 * s + 1.0;
    const double dh01 = (-6.0 * s2 + 6.0 * s) / h;
    const double dh11 = 3.0 * s2 - 2.0 * s;
    return dh00 * y_[i] + dh10 * d_[i] + dh01 * y_[i + 1] + dh11 * d_[i + 1];
}

namespace {

double trapezoid_recurse(const std::function<double(double)>& f, double a, double b, double fa,
                         double fb, double whole, double tol_per_length, int depth) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    const double left = 0.5 * (m - a) * (fa + fm);
    const double right = 0.5 * (b - m) * (fm + fb);
    const double refined = left + right;
    if (depth <= 0 || std::abs(refined - whole) <= tol_per_length * (b - a)) {
        // Richardson step: the trapezoid error scales with h^2
        return refined + (refined - whole) / 3.0;
    }
    return trapezoid_recurse(f, a, m, fa, fm, left, tol_per_length, depth - 1) +
           trapezoid_recurse(f, m, b, fm, fb, right, tol_per_length, depth - 1);
}

} // namespace

double adaptive_trapezoid(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, int max_depth) {
    if (a == b) return 0.0;
    const double fa = f(a);
    const double fb = f(b);
    // scale from a coarse composite rule on |f|
    constexpr int panels = 16;
    double scale = 0.0;
    for (int i = 0; i <= panels; ++i) {
        scale += std::abs(f(a + (b - a) * i / panels));
    }
    scale *= std::abs(b - a) / (panels + 1);
    if (scale == 0.0) return 0.0;
    const double whole = 0.5 * (b - a) * (fa + fb);
    const double tol_per_length = rel_tol * scale / std::abs(b - a);
    const double sign = b > a ? 1.0 : -1.0;
    return trapezoid_recurse(f, a, b, fa, fb, whole, sign * tol_per_length, max_depth);
}

double bisect(const std::function<double(double)>& f, double a, double b, double x_tol,
              int max_iter) {
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0) throw NumericalError("bisect: root is not bracketed");
    for (int it = 0; it < max_iter && std::abs(b - a) > x_tol; ++it) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if (fm == 0.0) return m;
        if (fa * fm < 0.0) {
            b = m;
            fb = fm;
        } else {
            a = m;
            fa = fm;
        }
    }
    return 0.5 * (a + b);
}

} // namespace tsunami::numerics
