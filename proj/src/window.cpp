#include "spectral/window.hpp"

#include <cmath>
#include <numbers>

namespace spectral {

namespace {

// cos(2*pi*j/n) with exact values at the quarter points and exact reflection
// symmetry across them. The symmetry is what makes the Hann power and
// coherent sums land on their closed forms (3n/8, n/2) at full double
// precision instead of picking up stray ulps.
double cos_full_period(std::size_t j, std::size_t n) {
    std::size_t m = j % n;
    if (2 * m > n) m = n - m;
    if (m == 0) return 1.0;
    if (2 * m == n) return -1.0;
    if (4 * m == n) return 0.0;
    if (4 * m < n)
        return std::cos(2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n));
    return -std::cos(std::numbers::pi * static_cast<double>(n - 2 * m) / static_cast<double>(n));
}

double hann_at(std::size_t j, std::size_t period) {
    return 0.5 * (1.0 - cos_full_period(j, period));
}

template <typename F>
double kahan_sum(const std::vector<double>& v, F term) {
    double sum = 0.0;
    double carry = 0.0;
    for (double x : v) {
        const double y = term(x) - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    return sum;
}

}  // namespace

WindowVector make_window(WindowKind kind, std::size_t n, WindowSymmetry symmetry) {
    if (n == 0)
        throw ParamError("make_window: length must be >= 1");

    WindowVector w;
    w.kind = kind;
    w.symmetry = symmetry;
    w.coefficients.resize(n);

    if (kind == WindowKind::rectangular) {
        for (double& c : w.coefficients) c = 1.0;
        return w;
    }

    if (symmetry == WindowSymmetry::periodic) {
        for (std::size_t j = 0; j < n; ++j) w.coefficients[j] = hann_at(j, n);
    } else {
        if (n == 1) {
            w.coefficients[0] = 1.0;
        } else {
            for (std::size_t j = 0; j < n; ++j) w.coefficients[j] = hann_at(j, n - 1);
        }
    }
    return w;
}

double window_power_sum(const WindowVector& w) {
    return kahan_sum(w.coefficients, [](double c) { return c * c; });
}

double window_coherent_sum(const WindowVector& w) {
    return kahan_sum(w.coefficients, [](double c) { return c; });
}

}  // namespace spectral
