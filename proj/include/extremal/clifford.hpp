#pragma once

// Clifford torus as the flat square torus: the Weyl counting function N(lambda)
// is the number of integer lattice points in the open disk of radius
// sqrt(lambda), and the torus is extremal for Lambda_{N(r^2)} with value
// 4 pi^2 r^2 at every r^2 representable as a sum of two squares.

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "extremal/bounds.hpp"
#include "extremal/lawson.hpp"  // detail::isqrt_ll
#include "extremal/record.hpp"

namespace extremal {

namespace detail {

// Lattice points with n^2 + m^2 <= t, exact integer row scan.
inline long long count_lattice_leq(long long t) {
    if (t < 0) return 0;
    const long long nmax = isqrt_ll(t);
    long long count = 2 * nmax + 1;  // the n = 0 row
    for (long long n = 1; n <= nmax; ++n)
        count += 2 * (2 * isqrt_ll(t - n * n) + 1);
    return count;
}

}  // namespace detail

// N(lambda): lattice points with n^2 + m^2 < lambda, strictly. For integer
// lambda the strict comparison becomes n^2 + m^2 <= lambda - 1 in integer
// arithmetic, so there is no floating-point boundary hazard.
inline long long count_lattice(double lambda) {
    if (!(lambda > 0.0)) return 0;
    const double fl = std::floor(lambda);
    const long long t =
        (fl == lambda) ? static_cast<long long>(fl) - 1 : static_cast<long long>(fl);
    return detail::count_lattice_leq(t);
}

// True iff r2 = n^2 + m^2 for some integers n, m.
inline bool representable(long long r2) {
    if (r2 < 1) throw std::invalid_argument("representable: need r2 >= 1");
    for (long long n = 0; n * n * 2 <= r2; ++n) {
        const long long rest = r2 - n * n;
        const long long m = detail::isqrt_ll(rest);
        if (m * m == rest) return true;
    }
    return false;
}

// One record per representable r^2 <= max_r2, ascending: index N(r^2),
// value 4 pi^2 r^2, torus topology.
inline std::vector<ExtremalRecord> clifford_records(long long max_r2) {
    if (max_r2 < 1) throw std::invalid_argument("clifford_records: need max_r2 >= 1");
    std::vector<ExtremalRecord> out;
    for (long long r2 = 1; r2 <= max_r2; ++r2) {
        if (!representable(r2)) continue;
        ExtremalRecord rec;
        rec.family = Family::Clifford;
        rec.params = {{"r2", r2}};
        rec.topology = Topology::Torus;
        rec.index = detail::count_lattice_leq(r2 - 1);
        rec.value = 4.0 * std::numbers::pi * std::numbers::pi * static_cast<double>(r2);
        rec.value_kind = ValueKind::Exact;
        rec.formula = "4*pi^2*r^2";
        apply_baseline(rec);
        out.push_back(rec);
    }
    return out;
}

}  // namespace extremal
