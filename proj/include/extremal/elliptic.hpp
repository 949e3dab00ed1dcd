#pragma once

// Complete elliptic integrals of the first, second and third kind, evaluated
// through Carlson symmetric forms R_F, R_D, R_J with the duplication theorem.
//
// Argument convention: all functions take the MODULUS k, not the parameter
// m = k^2. Beware when comparing against tables or libraries that use m.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "extremal/quadrature.hpp"

namespace extremal {

namespace detail {

inline constexpr double carlson_errtol = 1e-3;  // truncation ~ errtol^6

inline double carlson_rf(double x, double y, double z) {
    double xt = x, yt = y, zt = z;
    double ave, dx, dy, dz;
    do {
        const double sx = std::sqrt(xt), sy = std::sqrt(yt), sz = std::sqrt(zt);
        const double lam = sx * (sy + sz) + sy * sz;
        xt = 0.25 * (xt + lam);
        yt = 0.25 * (yt + lam);
        zt = 0.25 * (zt + lam);
        ave = (xt + yt + zt) / 3.0;
        dx = (ave - xt) / ave;
        dy = (ave - yt) / ave;
        dz = (ave - zt) / ave;
    } while (std::max({std::fabs(dx), std::fabs(dy), std::fabs(dz)}) > carlson_errtol);
    const double e2 = dx * dy - dz * dz;
    const double e3 = dx * dy * dz;
    return (1.0 + (e2 / 24.0 - 0.1 - 3.0 * e3 / 44.0) * e2 + e3 / 14.0) / std::sqrt(ave);
}

inline double carlson_rd(double x, double y, double z) {
    double xt = x, yt = y, zt = z;
    double sum = 0.0, fac = 1.0;
    double ave, dx, dy, dz;
    do {
        const double sx = std::sqrt(xt), sy = std::sqrt(yt), sz = std::sqrt(zt);
        const double lam = sx * (sy + sz) + sy * sz;
        sum += fac / (sz * (zt + lam));
        fac *= 0.25;
        xt = 0.25 * (xt + lam);
        yt = 0.25 * (yt + lam);
        zt = 0.25 * (zt + lam);
        ave = 0.2 * (xt + yt + 3.0 * zt);
        dx = (ave - xt) / ave;
        dy = (ave - yt) / ave;
        dz = (ave - zt) / ave;
    } while (std::max({std::fabs(dx), std::fabs(dy), std::fabs(dz)}) > carlson_errtol);
    const double ea = dx * dy;
    const double eb = dz * dz;
    const double ec = ea - eb;
    const double ed = ea - 6.0 * eb;
    const double ee = ed + ec + ec;
    const double series =
        1.0 +
        ed * (-3.0 / 14.0 + (9.0 / 88.0) * ed - (4.5 / 26.0) * dz * ee) +
        dz * ((1.0 / 6.0) * ee + dz * (-(9.0 / 22.0) * ec + dz * (3.0 / 26.0) * ea));
    return 3.0 * sum + fac * series / (ave * std::sqrt(ave));
}

inline double carlson_rc(double x, double y) {
    // y > 0 branch only; sufficient for R_J with positive fourth argument.
    double xt = x, yt = y;
    double ave, s;
    do {
        const double lam = 2.0 * std::sqrt(xt) * std::sqrt(yt) + yt;
        xt = 0.25 * (xt + lam);
        yt = 0.25 * (yt + lam);
        ave = (xt + 2.0 * yt) / 3.0;
        s = (yt - ave) / ave;
    } while (std::fabs(s) > carlson_errtol);
    return (1.0 + s * s * (0.3 + s * (1.0 / 7.0 + s * (0.375 + s * (9.0 / 22.0))))) /
           std::sqrt(ave);
}

inline double carlson_rj(double x, double y, double z, double p) {
    // p > 0 branch only.
    double xt = x, yt = y, zt = z, pt = p;
    double sum = 0.0, fac = 1.0;
    double ave, dx, dy, dz, dp;
    do {
        const double sx = std::sqrt(xt), sy = std::sqrt(yt), sz = std::sqrt(zt);
        const double lam = sx * (sy + sz) + sy * sz;
        const double alpha_root = pt * (sx + sy + sz) + sx * sy * sz;
        const double alpha = alpha_root * alpha_root;
        const double beta = pt * (pt + lam) * (pt + lam);
        sum += fac * carlson_rc(alpha, beta);
        fac *= 0.25;
        xt = 0.25 * (xt + lam);
        yt = 0.25 * (yt + lam);
        zt = 0.25 * (zt + lam);
        pt = 0.25 * (pt + lam);
        ave = 0.2 * (xt + yt + zt + 2.0 * pt);
        dx = (ave - xt) / ave;
        dy = (ave - yt) / ave;
        dz = (ave - zt) / ave;
        dp = (ave - pt) / ave;
    } while (std::max({std::fabs(dx), std::fabs(dy), std::fabs(dz), std::fabs(dp)}) >
             carlson_errtol);
    const double ea = dx * (dy + dz) + dy * dz;
    const double eb = dx * dy * dz;
    const double ec = dp * dp;
    const double ed = ea - 3.0 * ec;
    const double ee = eb + 2.0 * dp * (ea - ec);
    constexpr double c1 = 3.0 / 14.0, c2 = 1.0 / 3.0, c3 = 3.0 / 22.0, c4 = 3.0 / 26.0;
    const double series = 1.0 + ed * (-c1 + 0.75 * c3 * ed - 1.5 * c4 * ee) +
                          eb * (0.5 * c2 + dp * (-c1 - c1 + dp * c4)) +
                          dp * ea * (c2 - dp * c3) - c2 * dp * ec;
    return 3.0 * sum + fac * series / (ave * std::sqrt(ave));
}

inline void require_finite(double v, const char* what) {
    if (!std::isfinite(v))
        throw std::invalid_argument(std::string(what) + ": non-finite input");
}

inline double complementary_parameter(double k) {
    return (1.0 - k) * (1.0 + k);  // 1 - k^2, accurate near k = 1
}

}  // namespace detail

// Complete elliptic integral of the first kind, 0 <= k < 1.
inline double complete_K(double k) {
    detail::require_finite(k, "complete_K");
    if (k < 0.0) throw std::invalid_argument("complete_K: modulus must be >= 0");
    if (k >= 1.0 - 1e-15) throw std::domain_error("complete_K: divergent at k = 1");
    return detail::carlson_rf(0.0, detail::complementary_parameter(k), 1.0);
}

// Complete elliptic integral of the second kind, 0 <= k <= 1.
inline double complete_E(double k) {
    detail::require_finite(k, "complete_E");
    if (k < 0.0 || k > 1.0)
        throw std::invalid_argument("complete_E: modulus outside [0, 1]");
    if (k == 1.0) return 1.0;
    const double kc2 = detail::complementary_parameter(k);
    return detail::carlson_rf(0.0, kc2, 1.0) -
           (k * k / 3.0) * detail::carlson_rd(0.0, kc2, 1.0);
}

// Complete elliptic integral of the third kind, n < 1, 0 <= k < 1.
// Negative characteristic n (circular case) is fully supported.
inline double complete_Pi(double n, double k) {
    detail::require_finite(n, "complete_Pi");
    detail::require_finite(k, "complete_Pi");
    if (n >= 1.0) throw std::domain_error("complete_Pi: pole inside interval (n >= 1)");
    if (k < 0.0) throw std::invalid_argument("complete_Pi: modulus must be >= 0");
    if (k >= 1.0 - 1e-15) throw std::domain_error("complete_Pi: divergent at k = 1");
    const double kc2 = detail::complementary_parameter(k);
    const double rf = detail::carlson_rf(0.0, kc2, 1.0);
    if (n == 0.0) return rf;
    return rf + (n / 3.0) * detail::carlson_rj(0.0, kc2, 1.0, 1.0 - n);
}

// dE/dk = (E - K)/k; the k = 0 singularity is removable (limit 0).
inline double dE_dk(double k) {
    detail::require_finite(k, "dE_dk");
    if (k < 0.0) throw std::invalid_argument("dE_dk: modulus must be >= 0");
    if (k == 0.0) return 0.0;
    if (k >= 1.0 - 1e-15) throw std::domain_error("dE_dk: divergent at k = 1");
    return (complete_E(k) - complete_K(k)) / k;
}

// dK/dk = E/(k(1-k^2)) - K/k; the k = 0 singularity is removable (limit 0).
inline double dK_dk(double k) {
    detail::require_finite(k, "dK_dk");
    if (k < 0.0) throw std::invalid_argument("dK_dk: modulus must be >= 0");
    if (k == 0.0) return 0.0;
    if (k >= 1.0 - 1e-15) throw std::domain_error("dK_dk: divergent at k = 1");
    return complete_E(k) / (k * detail::complementary_parameter(k)) - complete_K(k) / k;
}

// dPi/dn = (E + (k^2-n)/n K + (n^2-k^2)/n Pi) / (2(k^2-n)(n-1)).
inline double dPi_dn(double n, double k) {
    detail::require_finite(n, "dPi_dn");
    detail::require_finite(k, "dPi_dn");
    if (n >= 1.0 || k <= 0.0 || k >= 1.0 - 1e-15)
        throw std::domain_error("dPi_dn: arguments outside n < 1, 0 < k < 1");
    const double k2 = k * k;
    if (n == k2 || n == 0.0)
        throw std::domain_error("dPi_dn: degenerate denominator (n = k^2 or n = 0)");
    const double E = complete_E(k);
    const double K = complete_K(k);
    const double Pi = complete_Pi(n, k);
    return (E + (k2 - n) / n * K + (n * n - k2) / n * Pi) /
           (2.0 * (k2 - n) * (n - 1.0));
}

// dPi/dk = k/(n-k^2) (E/(k^2-1) + Pi).
inline double dPi_dk(double n, double k) {
    detail::require_finite(n, "dPi_dk");
    detail::require_finite(k, "dPi_dk");
    if (n >= 1.0 || k <= 0.0 || k >= 1.0 - 1e-15)
        throw std::domain_error("dPi_dk: arguments outside n < 1, 0 < k < 1");
    const double k2 = k * k;
    if (n == k2)
        throw std::domain_error("dPi_dk: degenerate denominator (n = k^2)");
    const double E = complete_E(k);
    const double Pi = complete_Pi(n, k);
    return k / (n - k2) * (E / (k2 - 1.0) + Pi);
}

// K(k) - 2E(k)/(2-k^2), evaluated without cancellation. The combination is
// O(k^4) near k = 0 while K and E are both near pi/2, so the direct
// difference loses all digits for small k; the integral form
//   (k^2/(2-k^2)) * integral_0^{pi/2} (2 sin^2 t - 1)/sqrt(1-k^2 sin^2 t) dt
// stays fully accurate there. Nonnegative for k in [0, 1).
inline double complete_K_minus_2E(double k) {
    detail::require_finite(k, "complete_K_minus_2E");
    if (k < 0.0) throw std::invalid_argument("complete_K_minus_2E: modulus must be >= 0");
    if (k >= 1.0 - 1e-15)
        throw std::domain_error("complete_K_minus_2E: divergent at k = 1");
    if (k == 0.0) return 0.0;
    const double k2 = k * k;
    if (k > 0.5)
        return complete_K(k) - 2.0 / (2.0 - k2) * complete_E(k);
    const double integral = gauss_legendre_composite(
        [k2](double t) {
            const double s = std::sin(t);
            return (2.0 * s * s - 1.0) / std::sqrt(1.0 - k2 * s * s);
        },
        0.0, std::numbers::pi / 2.0, 4);
    return k2 / (2.0 - k2) * integral;
}

}  // namespace extremal
