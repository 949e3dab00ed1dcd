#include <cmath>
#include <numbers>
#include <stdexcept>

#include <doctest.h>

#include "extremal/bipolar.hpp"
#include "extremal/bounds.hpp"
#include "extremal/verify.hpp"

using namespace extremal;
using std::numbers::pi;

TEST_CASE("congruence case classification is exhaustive") {
    CHECK(bipolar_lawson_case({2, 1}) == BipolarLawsonCase::Even);
    CHECK(bipolar_lawson_case({3, 2}) == BipolarLawsonCase::Even);  // mk = 6 = 2 mod 4
    CHECK(bipolar_lawson_case({5, 1}) == BipolarLawsonCase::OneModFour);
    CHECK(bipolar_lawson_case({3, 1}) == BipolarLawsonCase::ThreeModFour);
    CHECK(bipolar_lawson_case({5, 3}) == BipolarLawsonCase::ThreeModFour);
    for (const auto& p : enumerate_lawson(50)) {
        const long long mod = (p.m * p.k) % 4;
        const auto c = bipolar_lawson_case(p);
        if (mod == 0 || mod == 2) CHECK(c == BipolarLawsonCase::Even);
        if (mod == 1) CHECK(c == BipolarLawsonCase::OneModFour);
        if (mod == 3) CHECK(c == BipolarLawsonCase::ThreeModFour);
    }
}

TEST_CASE("bipolar Lawson records") {
    const auto maximal = bipolar_lawson_record({3, 1});
    CHECK(maximal.topology == Topology::KleinBottle);
    CHECK(maximal.index == 1);
    CHECK(maximal.value ==
          doctest::Approx(12 * pi * complete_E(2 * std::sqrt(2.0) / 3)).epsilon(1e-14));
    // frozen: 12 pi E(2 sqrt(2)/3)
    CHECK(maximal.value == doctest::Approx(41.987050357708431).epsilon(1e-13));

    const auto even = bipolar_lawson_record({2, 1});
    CHECK(even.topology == Topology::Torus);
    CHECK(even.index == 6);
    CHECK(even.value == doctest::Approx(121.74863101743074).epsilon(1e-12));

    const auto one_mod_four = bipolar_lawson_record({5, 1});
    CHECK(one_mod_four.topology == Topology::Torus);
    CHECK(one_mod_four.index == 8);
    CHECK(one_mod_four.value == doctest::Approx(132.01000315496263).epsilon(1e-12));
}

TEST_CASE("records with index < 1 are rejected") {
    // (1,1): the bipolar surface is the Clifford torus; index 2m-2 = 0
    CHECK_THROWS_AS(bipolar_lawson_record({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(bipolar_lawson_record({4, 2}), std::invalid_argument);
}

TEST_CASE("the tau~_{3,1} equality case") {
    const auto rec = bipolar_lawson_record({3, 1});
    CHECK(std::fabs(rec.value - klein_bound(1).value) < 1e-12);
    CHECK(std::fabs(rec.margin) < 1e-12);
}

TEST_CASE("bipolar Lawson non-maximality sweep m <= 100") {
    const double e_klein = complete_E(2 * std::sqrt(2.0) / 3);
    for (const auto& p : enumerate_lawson(100)) {
        if (p.m == 1 && p.k == 1) continue;
        const auto rec = bipolar_lawson_record(p);
        const double md = static_cast<double>(p.m);
        switch (bipolar_lawson_case(p)) {
            case BipolarLawsonCase::OneModFour:
                CHECK(rec.value < 8 * pi * (2 * md - 3 + pi / std::sqrt(3.0)));
                CHECK(rec.margin > 0.0);
                break;
            case BipolarLawsonCase::Even:
                CHECK(rec.value < 8 * pi * (4 * md - 3 + pi / std::sqrt(3.0)));
                CHECK(rec.margin > 0.0);
                break;
            case BipolarLawsonCase::ThreeModFour:
                if (p.m == 3 && p.k == 1) break;  // the equality case
                CHECK(rec.value < 8 * pi * (md - 3) + 12 * pi * e_klein);
                CHECK(rec.margin > 0.0);
                break;
        }
    }
}

TEST_CASE("bipolar Otsuki records carry upper bounds") {
    const auto odd = bipolar_otsuki_record({2, 3});
    CHECK(odd.index == 12);
    CHECK(odd.topology == Topology::Torus);
    CHECK(odd.value_kind == ValueKind::UpperBound);
    CHECK(odd.value ==
          doctest::Approx(12 * std::numbers::sqrt2 * pi * pi).epsilon(1e-14));
    CHECK(odd.value == doctest::Approx(167.49274079133311).epsilon(1e-13));

    const auto even = bipolar_otsuki_record({5, 8});
    CHECK(even.index == 16);
    CHECK(even.value ==
          doctest::Approx(16 * std::numbers::sqrt2 * pi * pi).epsilon(1e-14));

    CHECK_THROWS_AS(bipolar_otsuki_record({3, 4}), std::invalid_argument);
}

TEST_CASE("bipolar Otsuki non-maximality sweep q <= 30") {
    for (const auto& param : enumerate_parameters(30)) {
        const auto rec = bipolar_otsuki_record(param);
        const double pd = static_cast<double>(param.p);
        const double qd = static_cast<double>(param.q);
        if (param.q % 2 == 0)
            CHECK(2 * std::numbers::sqrt2 * pi * pi * qd <
                  8 * pi * (qd + 2 * pd - 3 + pi / std::sqrt(3.0)));
        else
            CHECK(4 * std::numbers::sqrt2 * pi * pi * qd <
                  8 * pi * (2 * qd + 4 * pd - 3 + pi / std::sqrt(3.0)));
        CHECK(rec.margin > 0.0);
    }
}
