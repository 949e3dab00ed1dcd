#pragma once

// Theorem harness: enumerates every family within given limits, compares each
// record against the sup Lambda_n lower bounds, runs the auxiliary inequality
// sweeps, and aggregates a verdict. The only permitted non-strict comparison
// in the whole harness is the equality case tau~_{3,1}.

#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "extremal/bipolar.hpp"
#include "extremal/bounds.hpp"
#include "extremal/clifford.hpp"
#include "extremal/lawson.hpp"
#include "extremal/otsuki.hpp"
#include "extremal/record.hpp"

namespace extremal {

struct VerifyLimits {
    long long max_q = 30;
    long long max_m = 100;
    long long max_r2 = 10000;
};

// The whitelist of permitted zero-margin records is data, not code; it has
// exactly one entry.
inline const std::vector<ExtremalRecord>& equality_whitelist() {
    static const std::vector<ExtremalRecord> whitelist = {
        bipolar_lawson_record(LawsonParameter{3, 1})};
    return whitelist;
}

inline bool is_whitelisted(const ExtremalRecord& rec) {
    for (const auto& w : equality_whitelist())
        if (w.family == rec.family && w.params == rec.params) return true;
    return false;
}

// Coprime pairs m >= k >= 1 with m <= max_m, in (m, k) order.
inline std::vector<LawsonParameter> enumerate_lawson(long long max_m) {
    std::vector<LawsonParameter> out;
    for (long long m = 1; m <= max_m; ++m)
        for (long long k = 1; k <= m; ++k)
            if (std::gcd(m, k) == 1) out.push_back({m, k});
    return out;
}

inline std::vector<ExtremalRecord> verify_family(Family family,
                                                 const VerifyLimits& limits) {
    std::vector<ExtremalRecord> out;
    switch (family) {
        case Family::Otsuki:
            for (const auto& p : enumerate_parameters(limits.max_q))
                out.push_back(otsuki_lambda(p));
            break;
        case Family::Lawson:
            for (const auto& p : enumerate_lawson(limits.max_m))
                out.push_back(lawson_lambda(p));
            break;
        case Family::BipolarLawson:
            for (const auto& p : enumerate_lawson(limits.max_m)) {
                // (1,1) is excluded: its bipolar surface is the Clifford
                // torus and the case index 2m-2 would be 0.
                if (p.m == 1 && p.k == 1) continue;
                out.push_back(bipolar_lawson_record(p));
            }
            break;
        case Family::BipolarOtsuki:
            for (const auto& p : enumerate_parameters(limits.max_q))
                out.push_back(bipolar_otsuki_record(p));
            break;
        case Family::Clifford:
            out = clifford_records(limits.max_r2);
            break;
    }
    return out;
}

inline std::vector<ExtremalRecord> verify_all(const VerifyLimits& limits) {
    std::vector<ExtremalRecord> out;
    for (Family f : {Family::Otsuki, Family::Lawson, Family::BipolarLawson,
                     Family::BipolarOtsuki, Family::Clifford}) {
        auto part = verify_family(f, limits);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

struct SweepResult {
    std::string name;
    bool pass = false;
    double worst_margin = 0.0;    // most negative distance from the inequality
    double worst_location = 0.0;  // grid point where it occurred
};

namespace detail {

template <class F>
SweepResult sweep_min(const std::string& name, F&& margin_at, double lo, double hi,
                      int grid_size, double floor = -1e-12) {
    SweepResult res{name, true, std::numeric_limits<double>::infinity(), lo};
    for (int i = 0; i <= grid_size; ++i) {
        const double x = lo + (hi - lo) * i / grid_size;
        const double m = margin_at(x);
        if (m < res.worst_margin) {
            res.worst_margin = m;
            res.worst_location = x;
        }
    }
    res.pass = res.worst_margin >= floor;
    return res;
}

}  // namespace detail

// Auxiliary inequality sweeps behind the main estimates. Each entry records
// the worst margin over its stated grid; a residual floor of -1e-12 absorbs
// roundoff in the non-strict cases.
inline std::vector<SweepResult> sweep_properties(int grid_size = 1000) {
    if (grid_size < 100)
        throw std::invalid_argument("sweep_properties: need grid_size >= 100");
    std::vector<SweepResult> out;
    const double quarter_pi = std::numbers::pi / 4.0;
    const double a_lo = 1e-3, a_hi = quarter_pi - 1e-3;

    // K(k) - 2E(k)/(2-k^2) >= 0 on [0, 1)
    out.push_back(detail::sweep_min(
        "K_minus_2E_nonnegative", [](double k) { return complete_K_minus_2E(k); }, 0.0,
        0.999, grid_size));

    // Phi non-decreasing with 0 <= Phi' < 1/2
    out.push_back(detail::sweep_min(
        "phi_prime_in_unit_half_band",
        [](double a) {
            const double d = phi_prime(a);
            return std::min(d, 0.5 - d);
        },
        a_lo, a_hi, grid_size));

    // Omega strictly increasing: Omega' > 0
    out.push_back(detail::sweep_min(
        "omega_prime_nonnegative", [](double a) { return omega_prime(a); }, a_lo, a_hi,
        grid_size));

    // (2/pi) Omega - Phi increasing: (2/pi) Omega' - Phi' > 0
    out.push_back(detail::sweep_min(
        "omega_phi_combination_increasing",
        [](double a) { return 2.0 / std::numbers::pi * omega_prime(a) - phi_prime(a); },
        a_lo, a_hi, grid_size));

    // (2/pi) Omega - Phi > (2 sqrt(3) - pi)/(3 sqrt(3)) on [0.2, pi/4)
    const double combination_floor =
        (2.0 * std::sqrt(3.0) - std::numbers::pi) / (3.0 * std::sqrt(3.0));
    out.push_back(detail::sweep_min(
        "omega_phi_combination_lower_bound",
        [&](double a) {
            return 2.0 / std::numbers::pi * omega_closed(a) - phi(a) - combination_floor;
        },
        0.2, quarter_pi - 1e-9, grid_size));

    // Omega' > (pi/4)(pi/sqrt(3) - 1)^{-1} on (0, 0.2]
    const double omega_prime_floor =
        std::numbers::pi / 4.0 / (std::numbers::pi / std::sqrt(3.0) - 1.0);
    out.push_back(detail::sweep_min(
        "omega_prime_small_angle_bound",
        [&](double xi) { return omega_prime(xi) - omega_prime_floor; }, 1e-4, 0.2,
        grid_size));

    // 2 (r - sqrt(2)/2)^2 > r^2 for representable r^2 >= 6
    {
        SweepResult res{"clifford_radius_condition", true,
                        std::numeric_limits<double>::infinity(), 6.0};
        for (long long r2 = 6; r2 <= 10000; ++r2) {
            if (!representable(r2)) continue;
            const double r = std::sqrt(static_cast<double>(r2));
            const double m = 2.0 * (r - std::numbers::sqrt2 / 2.0) *
                                 (r - std::numbers::sqrt2 / 2.0) -
                             static_cast<double>(r2);
            if (m < res.worst_margin) {
                res.worst_margin = m;
                res.worst_location = static_cast<double>(r2);
            }
        }
        res.pass = res.worst_margin > 0.0;
        out.push_back(res);
    }

    return out;
}

struct VerificationReport {
    std::vector<ExtremalRecord> records;
    std::vector<SweepResult> sweeps;
    std::vector<std::string> violations;
    std::vector<std::string> warnings;  // suspiciously small positive margins
    bool pass = false;
};

inline std::string describe(const ExtremalRecord& rec) {
    std::string s = to_string(rec.family);
    s += "(";
    for (std::size_t i = 0; i < rec.params.size(); ++i) {
        if (i) s += ",";
        s += rec.params[i].first + "=" + std::to_string(rec.params[i].second);
    }
    s += ")";
    return s;
}

// Aggregate records and sweeps into a verdict. Every margin must be strictly
// positive except the whitelisted equality, which must vanish within
// equality_tol. Positive margins below the warning threshold are flagged.
inline VerificationReport report(std::vector<ExtremalRecord> records,
                                 std::vector<SweepResult> sweeps,
                                 double equality_tol = 1e-12) {
    VerificationReport rep;
    rep.records = std::move(records);
    rep.sweeps = std::move(sweeps);
    constexpr double warn_threshold = 1e-9;

    for (const auto& rec : rep.records) {
        if (is_whitelisted(rec)) {
            if (std::fabs(rec.margin) > equality_tol)
                rep.violations.push_back(describe(rec) +
                                         ": whitelisted equality violated, margin = " +
                                         std::to_string(rec.margin));
        } else if (!(rec.margin > 0.0)) {
            rep.violations.push_back(describe(rec) + ": nonpositive margin " +
                                     std::to_string(rec.margin));
        } else if (rec.margin < warn_threshold) {
            rep.warnings.push_back(describe(rec) +
                                   ": margin below warning threshold, needs tighter "
                                   "tolerance analysis");
        }
    }
    for (const auto& sw : rep.sweeps)
        if (!sw.pass)
            rep.violations.push_back("sweep " + sw.name + ": worst margin " +
                                     std::to_string(sw.worst_margin) + " at " +
                                     std::to_string(sw.worst_location));
    rep.pass = rep.violations.empty();
    return rep;
}

}  // namespace extremal
