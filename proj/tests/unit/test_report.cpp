#include "helpers.hpp"
#include "qlogic/random.hpp"
#include "qlogic/report.hpp"
#include "qlogic/suites.hpp"

using namespace qlogic;

TEST_CASE("SplitMix64 reference stream") {
    // Published outputs of SplitMix64 seeded with 0.
    SplitMix64 rng(0);
    CHECK(rng.next() == 0xe220a8397b1dcdafULL);
    CHECK(rng.next() == 0x6e789e6aa1b965f4ULL);
    CHECK(rng.next() == 0x06c45d188009454fULL);

    SplitMix64 r(5);
    for (int s = 0; s < 1000; ++s) {
        const auto v = r.uniform(-4, 4);
        CHECK(v >= -4);
        CHECK(v <= 4);
    }
}

TEST_CASE("derived seeds") {
    CHECK(derive_seed(7, "logic", 3) == derive_seed(7, "logic", 3));
    CHECK(derive_seed(7, "logic", 3) != derive_seed(7, "logic", 4));
    CHECK(derive_seed(7, "logic", 3) != derive_seed(8, "logic", 3));
    CHECK(derive_seed(7, "logic", 3) != derive_seed(7, "compat", 3));
}

TEST_CASE("serialisation round trips") {
    SplitMix64 rng(97);
    for (FieldTag f : {FieldTag::rationals(), FieldTag::gaussian(), FieldTag::prime(5)}) {
        for (int s = 0; s < 30; ++s) {
            const Matrix m = random_matrix(rng, f, 2, 3);
            CHECK(matrix_from_json(Json::parse(to_json(m).dump())) == m);
            const Subspace x = random_subspace(rng, f, 4);
            const Json j = to_json(x);
            CHECK(j["ambient_dim"] == 4);
            CHECK(subspace_from_json(Json::parse(j.dump())) == x);
        }
    }
    CHECK_RAISES(matrix_from_json(Json{{"field", "Q"}, {"rows", Json::array({Json::array({"1", "x"})})}}), ParseError);
    // A hand-written basis is canonicalised.
    const Json hand = {{"ambient_dim", 2}, {"field", "Q"}, {"rows", Json::array({Json::array({"2", "4"})})}};
    CHECK(subspace_from_json(hand).basis() == Matrix::from_ints(FieldTag::rationals(), {{1, 2}}));
}

TEST_CASE("reports") {
    SuiteReport report("demo", {"an anchor"}, Json{{"seed", 1}});
    Check& good = report.check("good");
    good.pass();
    good.pass();
    Check& bad = report.check("bad");
    for (int i = 0; i < 15; ++i) bad.fail(Json{{"i", i}});
    report.check("empty");
    CHECK(good.passed());
    CHECK(!bad.passed());
    CHECK(!report.passed());
    CHECK(report.failures() == 16);

    const Json j = report.to_json("2026-01-01T00:00:00Z", 1.5);
    CHECK(j["schema_version"] == kReportSchemaVersion);
    CHECK(j["checks"][1]["witnesses"].size() == kMaxWitnesses);
    CHECK(j["checks"][1]["failures"] == 15);
    CHECK(j.contains("timestamp"));
    const Json stripped = strip_timestamps(Json{{"a", j}, {"b", Json::array({j})}});
    CHECK(!stripped["a"].contains("timestamp"));
    CHECK(!stripped["b"][0].contains("timestamp"));
    CHECK(stripped["a"]["checks"] == j["checks"]);
}

TEST_CASE("suite registry") {
    CHECK(suite_names().size() == 8);
    CHECK_RAISES(run_suite("nope", SuiteConfig{}), InvalidArgument);
    SuiteConfig config;
    config.samples = 3;
    config.n = 3;
    const Json a = run_suite("logic", config);
    const Json b = run_suite("logic", config);
    CHECK(a["passed"] == true);
    CHECK(strip_timestamps(a) == strip_timestamps(b));
}
