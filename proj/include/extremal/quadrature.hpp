#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>

namespace extremal {

// Tanh-sinh (double-exponential) quadrature on a finite interval.
// The integrand is called as f(x, dl, dr) where dl = x - a and dr = b - x
// are computed without cancellation, so inverse-square-root endpoint
// singularities can be evaluated accurately from the distances alone.
template <class F>
double tanh_sinh(F&& f, double a, double b, double tol = 1e-12) {
    const double c = 0.5 * (b - a);
    const double pi_half = std::numbers::pi / 2.0;

    auto weighted_eval = [&](double t) -> double {
        const double s = pi_half * std::sinh(t);
        if (s > 350.0 || s < -350.0) return 0.0;
        const double ch = std::cosh(s);
        const double w = pi_half * std::cosh(t) / (ch * ch);
        // 1 -/+ tanh(s) without cancellation
        const double one_minus = 2.0 / (std::exp(2.0 * s) + 1.0);
        const double one_plus = 2.0 / (std::exp(-2.0 * s) + 1.0);
        const double dl = c * one_plus;
        const double dr = c * one_minus;
        if (dl <= 0.0 || dr <= 0.0) return 0.0;
        const double x = (t > 0.0) ? b - dr : a + dl;
        return w * f(x, dl, dr);
    };

    const double t_max = 6.5;
    double h = 1.0;
    double sum = weighted_eval(0.0);
    for (int j = 1; j * h <= t_max; ++j)
        sum += weighted_eval(j * h) + weighted_eval(-j * h);
    double integral = h * c * sum;

    for (int level = 1; level <= 12; ++level) {
        h *= 0.5;
        for (int j = 1; j * h <= t_max; j += 2)
            sum += weighted_eval(j * h) + weighted_eval(-j * h);
        const double refined = h * c * sum;
        const double change = std::fabs(refined - integral);
        integral = refined;
        if (level >= 3 && change <= tol * (std::fabs(integral) + 1.0))
            break;
    }
    return integral;
}

namespace detail {

// 16-point Gauss-Legendre nodes/weights on [-1, 1] (positive half; symmetric).
inline constexpr std::array<double, 8> gl16_nodes = {
    0.0950125098376374401853,  0.2816035507792589132304,
    0.4580167776572273863424,  0.6178762444026437484467,
    0.7554044083550030338951,  0.8656312023878317438805,
    0.9445750230732325760780,  0.9894009349916499325962};
inline constexpr std::array<double, 8> gl16_weights = {
    0.1894506104550684962854,  0.1826034150449235888667,
    0.1691565193950025381893,  0.1495959888165767320815,
    0.1246289712555338720525,  0.0951585116824927848099,
    0.0622535239386478928628,  0.0271524594117540948518};

}  // namespace detail

// Fixed 16-point Gauss-Legendre rule on [a, b]; for smooth integrands only.
template <class F>
double gauss_legendre_16(F&& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t i = 0; i < detail::gl16_nodes.size(); ++i) {
        const double d = half * detail::gl16_nodes[i];
        sum += detail::gl16_weights[i] * (f(mid + d) + f(mid - d));
    }
    return half * sum;
}

// Composite Gauss-Legendre over n_panels equal panels.
template <class F>
double gauss_legendre_composite(F&& f, double a, double b, int n_panels) {
    const double h = (b - a) / n_panels;
    double sum = 0.0;
    for (int i = 0; i < n_panels; ++i)
        sum += gauss_legendre_16(f, a + i * h, a + (i + 1) * h);
    return sum;
}

}  // namespace extremal
