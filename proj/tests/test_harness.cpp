#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wtp/catalog.hpp"
#include "wtp/harness.hpp"

using namespace wtp;

TEST_CASE("fixture loading") {
    auto fx = load_fixtures(WTP_FIXTURES_PATH);
    CHECK(fx.at("counts").at("sep_mo3_mo3") == 44);
    CHECK(fx.at("expected").size() == theorem_ids().size());
    CHECK_THROWS_AS(load_fixtures("no_such_file.json"), Error);
}

TEST_CASE("every check matches its expected status and re-verifies") {
    auto fx = load_fixtures(WTP_FIXTURES_PATH);
    auto results = run_all(0, fx);
    REQUIRE(results.size() == theorem_ids().size());
    for (const auto& r : results) {
        INFO(r.id, ": ", r.verdict.note);
        CHECK(r.as_expected);
        CHECK(verify_witness(r, 0, fx).holds());
    }
}

TEST_CASE("runs are deterministic for a fixed seed") {
    auto fx = load_fixtures(WTP_FIXTURES_PATH);
    auto a = run_theorem("T-ORTHO-MAIN", 0, fx);
    auto b = run_theorem("T-ORTHO-MAIN", 0, fx);
    CHECK(a.verdict.witness == b.verdict.witness);
    auto c = run_theorem("T-DCIRC", 0, fx);
    auto d = run_theorem("T-DCIRC", 0, fx);
    CHECK(c.verdict.witness == d.verdict.witness);
}

TEST_CASE("unknown check id is rejected") {
    auto fx = load_fixtures(WTP_FIXTURES_PATH);
    CHECK_THROWS_WITH_AS(run_theorem("T-NOPE", 0, fx), doctest::Contains("UnknownCheck"),
                         Error);
}

TEST_CASE("shared constructions") {
    ClosureSpace m4 = generate(GeneratorSpec::mo(4));
    ProductContext ctx({m4, m4});
    auto xis = xi_triples(ctx);
    CHECK(xis.size() == 96);
    for (const auto& x : xis) CHECK(x.count() == 3);

    Verdict chain = top_cover_failure_chain(ctx);
    CHECK(chain.holds());
    CHECK(chain.witness.at("b").size() == 4);

    ClosureSpace m3 = generate(GeneratorSpec::mo(3));
    ProductContext small({m3, m3});
    // two 3-atom MO factors are too small for the chain construction
    CHECK(top_cover_failure_chain(small).status == Verdict::Status::Unknown);

    ProductContext withpower({generate(GeneratorSpec::power_set(2)), m3});
    CHECK(top_cover_scan(withpower).holds());
}
