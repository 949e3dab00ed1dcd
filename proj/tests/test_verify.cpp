#include <cmath>
#include <string>

#include <doctest.h>

#include "extremal/serialize.hpp"
#include "extremal/verify.hpp"

using namespace extremal;

TEST_CASE("family enumerations under small limits") {
    VerifyLimits limits{3, 3, 5};

    const auto otsuki = verify_family(Family::Otsuki, limits);
    REQUIRE(otsuki.size() == 1);
    CHECK(otsuki[0].params == Params{{"p", 2}, {"q", 3}});

    const auto lawson = verify_family(Family::Lawson, limits);
    // (1,1),(2,1),(3,1),(3,2)
    CHECK(lawson.size() == 4);

    const auto bipolar = verify_family(Family::BipolarLawson, limits);
    // same list minus the excluded (1,1)
    REQUIRE(bipolar.size() == 3);
    bool has_3_1 = false;
    for (const auto& rec : bipolar)
        if (rec.params == Params{{"m", 3}, {"k", 1}}) {
            has_3_1 = true;
            CHECK(std::fabs(rec.margin) < 1e-12);
        }
    CHECK(has_3_1);

    const auto clifford = verify_family(Family::Clifford, limits);
    REQUIRE(clifford.size() == 4);  // r^2 in {1, 2, 4, 5}
    CHECK(clifford[2].params == Params{{"r2", 4}});
}

TEST_CASE("the equality whitelist has exactly one entry") {
    REQUIRE(equality_whitelist().size() == 1);
    CHECK(is_whitelisted(bipolar_lawson_record({3, 1})));
    CHECK_FALSE(is_whitelisted(bipolar_lawson_record({2, 1})));
    CHECK_FALSE(is_whitelisted(lawson_lambda({3, 1})));
}

TEST_CASE("report verdicts") {
    VerifyLimits limits{8, 8, 50};
    const auto rep = report(verify_all(limits), sweep_properties(200));
    CHECK(rep.pass);
    CHECK(rep.violations.empty());

    // a fabricated nonpositive margin must flip the verdict and be named
    auto records = verify_all(limits);
    ExtremalRecord fake = records.front();
    fake.params = {{"p", 7}, {"q", 10}};
    fake.margin = -0.25;
    records.push_back(fake);
    const auto bad = report(std::move(records), sweep_properties(200));
    CHECK_FALSE(bad.pass);
    REQUIRE(bad.violations.size() == 1);
    CHECK(bad.violations[0].find("p=7") != std::string::npos);

    // a failing sweep is also a violation
    auto sweeps = sweep_properties(200);
    sweeps[0].pass = false;
    const auto sweep_bad = report(verify_all(limits), std::move(sweeps));
    CHECK_FALSE(sweep_bad.pass);
}

TEST_CASE("sweeps all pass with descriptive names") {
    const auto sweeps = sweep_properties(500);
    REQUIRE(sweeps.size() == 7);
    for (const auto& sw : sweeps) {
        CHECK(sw.pass);
        CHECK_FALSE(sw.name.empty());
    }
    CHECK_THROWS_AS(sweep_properties(10), std::invalid_argument);
}

TEST_CASE("report serialization is deterministic") {
    VerifyLimits limits{5, 5, 10};
    const auto first =
        to_json(report(verify_all(limits), sweep_properties(200))).dump(2);
    const auto second =
        to_json(report(verify_all(limits), sweep_properties(200))).dump(2);
    CHECK(first == second);
    CHECK(first.find("\"verdict\": \"pass\"") != std::string::npos);
}
