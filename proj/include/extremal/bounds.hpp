#pragma once

// Lower bounds for sup Lambda_n on the torus and the Klein bottle:
//   sup Lambda_n(T, g)  >= 8 pi (n - 1 + pi/sqrt(3))
//   sup Lambda_n(Kl, g) >= 8 pi (n - 1) + 12 pi E(2 sqrt(2)/3)
// Every family record is compared against these baselines.

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "extremal/elliptic.hpp"
#include "extremal/record.hpp"

namespace extremal {

struct SupLowerBound {
    Topology topology;
    long long n;
    double value;
};

namespace detail {

// Shared with the bipolar Lawson value of tau~_{3,1} so the equality case is
// exact to roundoff: both sides evaluate E at the identical modulus.
inline double e_at_klein_modulus() {
    static const double cached = complete_E(std::sqrt(8.0) / 3.0);
    return cached;
}

inline double pi_over_sqrt3() {
    static const double cached = std::numbers::pi / std::sqrt(3.0);
    return cached;
}

}  // namespace detail

inline SupLowerBound torus_bound(long long n) {
    if (n < 1) throw std::invalid_argument("torus_bound: index must be >= 1");
    const double value =
        8.0 * std::numbers::pi * (static_cast<double>(n - 1) + detail::pi_over_sqrt3());
    return {Topology::Torus, n, value};
}

inline SupLowerBound klein_bound(long long n) {
    if (n < 1) throw std::invalid_argument("klein_bound: index must be >= 1");
    const double value = 8.0 * std::numbers::pi * static_cast<double>(n - 1) +
                         12.0 * std::numbers::pi * detail::e_at_klein_modulus();
    return {Topology::KleinBottle, n, value};
}

inline SupLowerBound sup_bound(Topology t, long long n) {
    return t == Topology::Torus ? torus_bound(n) : klein_bound(n);
}

// Fill in baseline and margin from the record's topology and index.
inline void apply_baseline(ExtremalRecord& rec) {
    rec.baseline = sup_bound(rec.topology, rec.index).value;
    rec.margin = rec.baseline - rec.value;
}

}  // namespace extremal
