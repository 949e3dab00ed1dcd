#pragma once

// Numerical oracle for the Otsuki closed geodesic: traces the curve in the
// reduced (orbit-space) metric
//   4 pi^2 sin^2(phi) (dphi^2 + cos^2(phi) dtheta^2)
// and accumulates its arc length, independently of the elliptic-integral
// closed form it validates. On each monotone phi-arc the trace integrates
//   dtheta/dphi = sin a cos a / (cos phi sqrt(D)),
//   ds/dphi     = 2 pi sin^2 phi cos phi / sqrt(D),
//   D = sin^2 phi cos^2 phi - sin^2 a cos^2 a
//     = sin(phi - a) sin(pi/2 - a - phi) (sin 2phi + sin 2a) / 2,
// with a square-root substitution absorbing the turning-point singularities
// at phi = a and phi = pi/2 - a.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "extremal/otsuki.hpp"
#include "extremal/quadrature.hpp"

namespace extremal {

struct ReducedMetricPoint {
    double phi;
    double theta;
};

struct TraceSample {
    double s;      // accumulated reduced-metric arc length
    double phi;
    double theta;
};

struct GeodesicTrace {
    std::vector<TraceSample> samples;
    double length = 0.0;
    bool closed = false;
    double mismatch = 0.0;  // endpoint gap in (phi, theta mod 2pi)
};

namespace detail {

// One panel of a monotone half-arc in the substituted variable: phi interval
// plus the arc-length and theta increments across it.
struct ArcPanel {
    double phi_lo, phi_hi;  // in ascending phi order
    double ds;
    double dtheta;
};

// sin(w)/w with the w -> 0 limit.
inline double sinc(double w) { return w == 0.0 ? 1.0 : std::sin(w) / w; }

// Panels of the ascending arc from phi = a to phi = pi/2 - a, split at pi/4.
// Lower half: phi = a + u^2; upper half: phi = pi/2 - a - v^2. The sqrt(D)
// factor contributes u (resp. v) which cancels against dphi = 2u du, so the
// integrands below are smooth through the turning points.
inline std::vector<ArcPanel> ascending_arc_panels(double a, int panels_per_half) {
    const double sin2a = std::sin(2.0 * a);
    const double sc = std::sin(a) * std::cos(a);
    const double span = std::numbers::pi / 4.0 - a;
    const double u1 = std::sqrt(span);

    auto radical = [&](double phi, double singular_sinc, double far_dist) {
        return std::sqrt(0.5 * singular_sinc * std::sin(far_dist) *
                         (std::sin(2.0 * phi) + sin2a));
    };
    // lower half, independent variable u, phi - a = u^2
    auto lower_ds = [&](double u) {
        const double phi = a + u * u;
        const double w = radical(phi, sinc(u * u), std::numbers::pi / 2.0 - a - phi);
        const double s = std::sin(phi);
        return 4.0 * std::numbers::pi * s * s * std::cos(phi) / w;
    };
    auto lower_dtheta = [&](double u) {
        const double phi = a + u * u;
        const double w = radical(phi, sinc(u * u), std::numbers::pi / 2.0 - a - phi);
        return 2.0 * sc / (std::cos(phi) * w);
    };
    // upper half, independent variable v, pi/2 - a - phi = v^2
    auto upper_ds = [&](double v) {
        const double phi = std::numbers::pi / 2.0 - a - v * v;
        const double w = radical(phi, sinc(v * v), phi - a);
        const double s = std::sin(phi);
        return 4.0 * std::numbers::pi * s * s * std::cos(phi) / w;
    };
    auto upper_dtheta = [&](double v) {
        const double phi = std::numbers::pi / 2.0 - a - v * v;
        const double w = radical(phi, sinc(v * v), phi - a);
        return 2.0 * sc / (std::cos(phi) * w);
    };

    std::vector<ArcPanel> out;
    out.reserve(2 * panels_per_half);
    const double h = u1 / panels_per_half;
    for (int i = 0; i < panels_per_half; ++i) {
        const double lo = i * h, hi = (i + 1) * h;
        out.push_back({a + lo * lo, a + hi * hi, gauss_legendre_16(lower_ds, lo, hi),
                       gauss_legendre_16(lower_dtheta, lo, hi)});
    }
    // upper half panels in descending v = ascending phi
    for (int i = panels_per_half; i > 0; --i) {
        const double lo = (i - 1) * h, hi = i * h;
        const double phi_lo = std::numbers::pi / 2.0 - a - hi * hi;
        const double phi_hi = std::numbers::pi / 2.0 - a - lo * lo;
        out.push_back({phi_lo, phi_hi, gauss_legendre_16(upper_ds, lo, hi),
                       gauss_legendre_16(upper_dtheta, lo, hi)});
    }
    return out;
}

inline int panels_from_tolerance(double step_tol) {
    if (!(step_tol > 0.0))
        throw std::invalid_argument("trace_geodesic: step_tol must be positive");
    const int n = static_cast<int>(std::ceil(std::cbrt(1.0 / step_tol)));
    return std::clamp(n, 64, 4096);
}

}  // namespace detail

// Trace n_arcs monotone phi-arcs starting at phi = a with ascending phi.
// theta advances by Omega(a) per arc; phi alternates between a and pi/2 - a.
inline GeodesicTrace trace_arcs(double a, int n_arcs, double step_tol = 1e-9) {
    if (!(a > 0.0 && a < std::numbers::pi / 4.0))
        throw std::invalid_argument(
            "trace_arcs: need 0 < a < pi/4 (a = pi/4 is the constant-phi circle)");
    if (n_arcs < 1) throw std::invalid_argument("trace_arcs: need n_arcs >= 1");

    const auto panels =
        detail::ascending_arc_panels(a, detail::panels_from_tolerance(step_tol));

    GeodesicTrace trace;
    trace.samples.push_back({0.0, a, 0.0});
    double s = 0.0, theta = 0.0;
    for (int arc = 0; arc < n_arcs; ++arc) {
        const bool ascending = (arc % 2 == 0);
        if (ascending) {
            for (const auto& p : panels) {
                s += p.ds;
                theta += p.dtheta;
                trace.samples.push_back({s, p.phi_hi, theta});
            }
        } else {
            for (auto it = panels.rbegin(); it != panels.rend(); ++it) {
                s += it->ds;
                theta += it->dtheta;
                trace.samples.push_back({s, it->phi_lo, theta});
            }
        }
    }
    trace.length = s;
    return trace;
}

// Trace the closed geodesic of O_{p/q}: 2q monotone arcs, total theta advance
// 2q Omega(a) = 2 pi p when a solves the closure condition. If a is
// inconsistent with the parameter the trace is still returned, with
// closed = false and the endpoint mismatch as a diagnostic.
inline GeodesicTrace trace_geodesic(const OtsukiAngle& angle,
                                    const OtsukiParameter& param,
                                    double step_tol = 1e-9) {
    if (!OtsukiParameter::valid(param.p, param.q))
        throw std::invalid_argument("trace_geodesic: invalid OtsukiParameter");
    GeodesicTrace trace = trace_arcs(angle.a, static_cast<int>(2 * param.q), step_tol);

    const double theta_end = trace.samples.back().theta;
    const double two_pi = 2.0 * std::numbers::pi;
    const double wrapped = std::fmod(theta_end, two_pi);
    const double theta_gap = std::min(wrapped, two_pi - wrapped);
    const double phi_gap = std::fabs(trace.samples.back().phi - angle.a);
    trace.mismatch = std::hypot(theta_gap, phi_gap);
    trace.closed = trace.mismatch < 1e-6;
    return trace;
}

// Reduced-metric arc length of a trace (0 for an empty trace). The length of
// a valid closed O_{p/q} trace equals 4 pi q cos(a) E(sqrt(1-tan^2 a)).
inline double geodesic_length(const GeodesicTrace& trace) {
    return trace.samples.empty() ? 0.0 : trace.length;
}

}  // namespace extremal
