#pragma once

// Otsuki tori O_{p/q}: the angle function Omega(a) of the closed geodesic in
// the reduced metric, the length kernel Phi(a), the closure condition
// Omega(a) = p pi / q, and the functional value
//   Lambda_{2p-1}(O_{p/q}) = 8 pi q Phi(a) = 8 pi q cos(a) E(sqrt(1-tan^2 a)).

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "extremal/bounds.hpp"
#include "extremal/elliptic.hpp"
#include "extremal/quadrature.hpp"
#include "extremal/record.hpp"

namespace extremal {

// Reduced rational p/q in (1/2, sqrt(2)/2); each such fraction labels one
// Otsuki torus. The exceptional flat case phi == pi/4 is not represented
// here (it is the Clifford torus).
struct OtsukiParameter {
    long long p;
    long long q;

    static bool valid(long long p, long long q) {
        if (p <= 0 || q <= 0) return false;
        if (std::gcd(p, q) != 1) return false;
        // 1/2 < p/q  <=>  2p > q;  p/q < sqrt(2)/2  <=>  2p^2 < q^2 (exact)
        return 2 * p > q && 2 * p * p < q * q;
    }

    static OtsukiParameter checked(long long p, long long q) {
        if (!valid(p, q))
            throw std::invalid_argument(
                "OtsukiParameter: need gcd(p,q) = 1 and 1/2 < p/q < sqrt(2)/2");
        return {p, q};
    }
};

// Minimal latitude a of the geodesic, 0 < a <= pi/4; beta = sqrt(1 - tan^2 a)
// is the elliptic modulus it induces.
struct OtsukiAngle {
    double a;

    double beta() const {
        const double t = std::tan(a);
        return std::sqrt((1.0 - t) * (1.0 + t));
    }
};

namespace detail {

inline void require_interior_angle(double a, const char* what) {
    if (!(a > 0.0 && a < std::numbers::pi / 4.0))
        throw std::invalid_argument(std::string(what) + ": need 0 < a < pi/4");
}

}  // namespace detail

// Omega(a) via the closed form (1/sin a) Pi(-cos 2a / sin^2 a, beta).
// Strictly increasing from pi/2 (a -> 0+) to pi/sqrt(2) (a -> pi/4).
inline double omega_closed(double a) {
    detail::require_interior_angle(a, "omega_closed");
    const double b = OtsukiAngle{a}.beta();
    const double b2 = b * b;
    const double n = -b2 / (1.0 - b2);  // = -cos 2a / sin^2 a
    return complete_Pi(n, b) / std::sin(a);
}

// Omega(a) by direct quadrature of the defining integral
//   sin a cos a * int_a^{pi/2-a} dphi / (cos phi sqrt(sin^2 phi cos^2 phi - sin^2 a cos^2 a)).
// The radicand is factored as sin(phi-a) sin(pi/2-a-phi) (sin 2phi + sin 2a)/2
// so the inverse-square-root endpoint singularities are evaluated from the
// endpoint distances; tanh-sinh absorbs them.
inline double omega_quadrature(double a) {
    detail::require_interior_angle(a, "omega_quadrature");
    const double sc = std::sin(a) * std::cos(a);
    const double sin2a = std::sin(2.0 * a);
    auto integrand = [&](double phi, double dl, double dr) {
        const double radicand =
            0.5 * std::sin(dl) * std::sin(dr) * (std::sin(2.0 * phi) + sin2a);
        return 1.0 / (std::cos(phi) * std::sqrt(radicand));
    };
    const double hi = std::numbers::pi / 2.0 - a;
    return sc * tanh_sinh(integrand, a, hi, 1e-13);
}

// Omega'(a) = ((2-b^2)^{3/2} / b^2) (K(b) - 2E(b)/(2-b^2)), nonnegative.
inline double omega_prime(double a) {
    detail::require_interior_angle(a, "omega_prime");
    const double b = OtsukiAngle{a}.beta();
    const double b2 = b * b;
    return std::pow(2.0 - b2, 1.5) / b2 * complete_K_minus_2E(b);
}

// Phi(a) = cos(a) E(sqrt(1 - tan^2 a)), the per-arc geodesic length kernel.
inline double phi(double a) {
    if (!(a > 0.0 && a <= std::numbers::pi / 4.0))
        throw std::invalid_argument("phi: need 0 < a <= pi/4");
    return std::cos(a) * complete_E(OtsukiAngle{a}.beta());
}

// Phi'(a) = (sqrt((1-b^2)(2-b^2)) / b^2) (K(b) - 2E(b)/(2-b^2)), in [0, 1/2).
inline double phi_prime(double a) {
    detail::require_interior_angle(a, "phi_prime");
    const double b = OtsukiAngle{a}.beta();
    const double b2 = b * b;
    return std::sqrt((1.0 - b2) * (2.0 - b2)) / b2 * complete_K_minus_2E(b);
}

// Solve Omega(a) = p pi / q by bisection on the monotone Omega.
// Newton is deliberately avoided: Omega' vanishes as a -> pi/4.
inline OtsukiAngle solve_parameter(const OtsukiParameter& param) {
    if (!OtsukiParameter::valid(param.p, param.q))
        throw std::invalid_argument("solve_parameter: invalid OtsukiParameter");
    const double target =
        static_cast<double>(param.p) * std::numbers::pi / static_cast<double>(param.q);
    if (!(target > std::numbers::pi / 2.0 && target < std::numbers::pi / std::numbers::sqrt2))
        throw std::invalid_argument("solve_parameter: target outside (pi/2, pi/sqrt(2))");

    double lo = 1e-6;
    double hi = std::numbers::pi / 4.0 - 1e-9;
    // Omega(lo) < target < Omega(hi) holds for every valid parameter.
    while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        if (omega_closed(mid) < target)
            lo = mid;
        else
            hi = mid;
    }
    return OtsukiAngle{0.5 * (lo + hi)};
}

// Lambda_{2p-1}(O_{p/q}) = 8 pi q Phi(a*), torus topology.
inline ExtremalRecord otsuki_lambda(const OtsukiParameter& param) {
    const OtsukiAngle a = solve_parameter(param);
    ExtremalRecord rec;
    rec.family = Family::Otsuki;
    rec.params = {{"p", param.p}, {"q", param.q}};
    rec.topology = Topology::Torus;
    rec.index = 2 * param.p - 1;
    rec.value = 8.0 * std::numbers::pi * static_cast<double>(param.q) * phi(a.a);
    rec.value_kind = ValueKind::Exact;
    rec.formula = "8*pi*q*cos(a)*E(sqrt(1-tan^2(a)))";
    apply_baseline(rec);
    return rec;
}

// All reduced p/q with q <= max_q and 1/2 < p/q < sqrt(2)/2, in (q, p) order.
inline std::vector<OtsukiParameter> enumerate_parameters(long long max_q) {
    std::vector<OtsukiParameter> out;
    for (long long q = 3; q <= max_q; ++q)
        for (long long p = q / 2 + 1; 2 * p * p < q * q; ++p)
            if (std::gcd(p, q) == 1) out.push_back({p, q});
    return out;
}

}  // namespace extremal
