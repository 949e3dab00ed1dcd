#pragma once

// Bipolar surfaces: tau~_{m,k} (bipolar to Lawson surfaces) in three
// congruence cases of mk mod 4, and O~_{p/q} (bipolar to Otsuki tori) in two
// parity cases of q. The Otsuki records carry the paper's closed-form upper
// bound, not an exact value; value_kind marks the difference.

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "extremal/bounds.hpp"
#include "extremal/elliptic.hpp"
#include "extremal/lawson.hpp"
#include "extremal/otsuki.hpp"
#include "extremal/record.hpp"

namespace extremal {

enum class BipolarLawsonCase { Even, OneModFour, ThreeModFour };

inline BipolarLawsonCase bipolar_lawson_case(const LawsonParameter& param) {
    switch ((param.m * param.k) % 4) {
        case 0:
        case 2: return BipolarLawsonCase::Even;
        case 1: return BipolarLawsonCase::OneModFour;
        default: return BipolarLawsonCase::ThreeModFour;
    }
}

// Case rules:
//   mk even:       torus,        index 4m-2, value 16 pi m E(.)
//   mk = 1 mod 4:  torus,        index 2m-2, value  8 pi m E(.)
//   mk = 3 mod 4:  Klein bottle, index  m-2, value  4 pi m E(.)
// Pairs whose case index would be < 1 are rejected; that covers mk = 3 mod 4
// with m < 3 and the pair (1,1), whose bipolar surface is the Clifford torus.
inline ExtremalRecord bipolar_lawson_record(const LawsonParameter& param) {
    if (!LawsonParameter::valid(param.m, param.k))
        throw std::invalid_argument("bipolar_lawson_record: invalid LawsonParameter");
    ExtremalRecord rec;
    rec.family = Family::BipolarLawson;
    rec.params = {{"m", param.m}, {"k", param.k}};
    rec.value_kind = ValueKind::Exact;
    const double e = complete_E(param.modulus());
    const double pim = std::numbers::pi * static_cast<double>(param.m);
    switch (bipolar_lawson_case(param)) {
        case BipolarLawsonCase::Even:
            rec.topology = Topology::Torus;
            rec.index = 4 * param.m - 2;
            rec.value = 16.0 * pim * e;
            rec.formula = "16*pi*m*E(sqrt(m^2-k^2)/m)";
            break;
        case BipolarLawsonCase::OneModFour:
            rec.topology = Topology::Torus;
            rec.index = 2 * param.m - 2;
            rec.value = 8.0 * pim * e;
            rec.formula = "8*pi*m*E(sqrt(m^2-k^2)/m)";
            break;
        case BipolarLawsonCase::ThreeModFour:
            rec.topology = Topology::KleinBottle;
            rec.index = param.m - 2;
            rec.value = 4.0 * pim * e;
            rec.formula = "4*pi*m*E(sqrt(m^2-k^2)/m)";
            break;
    }
    if (rec.index < 1)
        throw std::invalid_argument(
            "bipolar_lawson_record: functional index would be < 1");
    apply_baseline(rec);
    return rec;
}

// Bipolar Otsuki tori: q odd -> index 2q+4p-2, bound 4 sqrt(2) pi^2 q;
// q even -> index q+2p-2, bound 2 sqrt(2) pi^2 q. Both are tori.
inline ExtremalRecord bipolar_otsuki_record(const OtsukiParameter& param) {
    if (!OtsukiParameter::valid(param.p, param.q))
        throw std::invalid_argument("bipolar_otsuki_record: invalid OtsukiParameter");
    ExtremalRecord rec;
    rec.family = Family::BipolarOtsuki;
    rec.params = {{"p", param.p}, {"q", param.q}};
    rec.topology = Topology::Torus;
    rec.value_kind = ValueKind::UpperBound;
    const double pi2q = std::numbers::pi * std::numbers::pi * static_cast<double>(param.q);
    if (param.q % 2 == 1) {
        rec.index = 2 * param.q + 4 * param.p - 2;
        rec.value = 4.0 * std::numbers::sqrt2 * pi2q;
        rec.formula = "< 4*sqrt(2)*pi^2*q";
    } else {
        rec.index = param.q + 2 * param.p - 2;
        rec.value = 2.0 * std::numbers::sqrt2 * pi2q;
        rec.formula = "< 2*sqrt(2)*pi^2*q";
    }
    apply_baseline(rec);
    return rec;
}

}  // namespace extremal
