#pragma once

// Lawson tau-surfaces tau_{m,k}: torus when m, k are both odd, Klein bottle
// otherwise; extremal for Lambda_j with
//   j = 2 floor(sqrt(m^2 + k^2) / 2) + m + k - 1
// and Lambda_j(tau_{m,k}) = 8 pi m E(sqrt(m^2 - k^2)/m).

#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "extremal/bounds.hpp"
#include "extremal/elliptic.hpp"
#include "extremal/record.hpp"

namespace extremal {

struct LawsonParameter {
    long long m;
    long long k;

    static bool valid(long long m, long long k) {
        return m >= k && k >= 1 && std::gcd(m, k) == 1;
    }

    static LawsonParameter checked(long long m, long long k) {
        if (!valid(m, k))
            throw std::invalid_argument(
                "LawsonParameter: need m >= k >= 1 and gcd(m,k) = 1");
        return {m, k};
    }

    Topology topology() const {
        return (m % 2 == 1 && k % 2 == 1) ? Topology::Torus : Topology::KleinBottle;
    }

    // Elliptic modulus sqrt(m^2 - k^2)/m of the functional value.
    double modulus() const {
        return std::sqrt(static_cast<double>(m * m - k * k)) / static_cast<double>(m);
    }
};

namespace detail {

inline long long isqrt_ll(long long n) {
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

}  // namespace detail

// Extremal index, integer-exact: floor(sqrt(S)/2) == floor(isqrt(S)/2).
inline long long lawson_index(const LawsonParameter& param) {
    if (!LawsonParameter::valid(param.m, param.k))
        throw std::invalid_argument("lawson_index: invalid LawsonParameter");
    const long long s = param.m * param.m + param.k * param.k;
    return 2 * (detail::isqrt_ll(s) / 2) + param.m + param.k - 1;
}

// Alternative reading of the index formula with floor(sqrt((m^2+k^2)/2)),
// which the published proof manipulates. The two readings disagree for many
// pairs; see index_readings.
inline long long lawson_index_alt(const LawsonParameter& param) {
    if (!LawsonParameter::valid(param.m, param.k))
        throw std::invalid_argument("lawson_index_alt: invalid LawsonParameter");
    const long long s = param.m * param.m + param.k * param.k;
    long long t = detail::isqrt_ll(s / 2);
    while (2 * (t + 1) * (t + 1) <= s) ++t;
    while (t > 0 && 2 * t * t > s) --t;
    return 2 * t + param.m + param.k - 1;
}

// Diagnostic pairing the two readings of the index formula.
struct IndexDiagnostic {
    long long index;        // floor(sqrt(m^2+k^2)/2) reading (as printed)
    long long alternative;  // floor(sqrt((m^2+k^2)/2)) reading
    bool differ;
};

inline IndexDiagnostic index_readings(const LawsonParameter& param) {
    const long long a = lawson_index(param);
    const long long b = lawson_index_alt(param);
    return {a, b, a != b};
}

// Lambda_j(tau_{m,k}) = 8 pi m E(sqrt(m^2-k^2)/m).
inline ExtremalRecord lawson_lambda(const LawsonParameter& param) {
    const long long j = lawson_index(param);
    ExtremalRecord rec;
    rec.family = Family::Lawson;
    rec.params = {{"m", param.m}, {"k", param.k}};
    rec.topology = param.topology();
    rec.index = j;
    rec.value = 8.0 * std::numbers::pi * static_cast<double>(param.m) *
                complete_E(param.modulus());
    rec.value_kind = ValueKind::Exact;
    rec.formula = "8*pi*m*E(sqrt(m^2-k^2)/m)";
    apply_baseline(rec);
    return rec;
}

// The explicit doubly periodic immersion into S^3; unit norm by construction.
inline std::array<double, 4> immersion_point(const LawsonParameter& param, double x,
                                             double y) {
    const double mx = static_cast<double>(param.m) * x;
    const double kx = static_cast<double>(param.k) * x;
    return {std::cos(mx) * std::cos(y), std::sin(mx) * std::cos(y),
            std::cos(kx) * std::sin(y), std::sin(kx) * std::sin(y)};
}

}  // namespace extremal
