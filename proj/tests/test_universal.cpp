#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wtp/catalog.hpp"
#include "wtp/universal.hpp"

using namespace wtp;

namespace {
ClosureSpace mo(int n) { return generate(GeneratorSpec::mo(n)); }
ClosureSpace pw(int n) { return generate(GeneratorSpec::power_set(n)); }
} // namespace

TEST_CASE("point-separating two-valued maps") {
    ClosureSpace m3 = mo(3);
    TwoValuedMap h = point_separating_map(m3, m3.singleton(1));
    CHECK(!h.value(1));
    CHECK(h.value(0));
    CHECK(h.value(2));
    AtomSet open(3);
    open.set(0);
    open.set(1);
    CHECK_THROWS_WITH_AS(point_separating_map(m3, open), doctest::Contains("NotClosed"),
                         Error);
}

TEST_CASE("dual map join preservation via column preimages") {
    ClosureSpace p2 = pw(2), m3 = mo(3);
    DualMap f{{m3.singleton(0), m3.singleton(1)}};
    CHECK(dual_map_join_preserving(p2, m3, f));
    // in the other direction a 2-set column preimage appears inside MO
    DualMap g{{p2.singleton(0), p2.singleton(0), AtomSet(2)}};
    CHECK(!dual_map_join_preserving(m3, p2, g));
}

TEST_CASE("dual map enumeration counts match the top product") {
    ClosureSpace p2 = pw(2), m3 = mo(3);
    auto maps = enumerate_dual_maps(p2, m3);
    CHECK(maps.size() == 25); // 5 closed images per atom, independent
    GaloisReport rep = galois_correspondence(p2, m3);
    CHECK(rep.map_count == 25);
    CHECK(rep.top_count == 25);
    CHECK(rep.verdict.holds());
}

TEST_CASE("correspondence also holds with two MO factors") {
    GaloisReport rep = galois_correspondence(mo(3), mo(3));
    CHECK(rep.map_count == rep.top_count);
    CHECK(rep.top_count == 50);
    CHECK(rep.verdict.holds());
}

TEST_CASE("dual map enumeration respects the budget") {
    CHECK_THROWS_AS(enumerate_dual_maps(mo(4), mo(4), 10), BudgetExceeded);
}

TEST_CASE("bimorphisms factor through the top product") {
    ClosureSpace m3 = mo(3);
    ProductContext ctx({m3, m3});
    ClosureSpace sep = separated_product(ctx);

    SUBCASE("canonical atom-pair bimorphism into the bottom product") {
        BimorphismTable g;
        g.g.assign(3, std::vector<AtomSet>(3, AtomSet(ctx.bits())));
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = 0; b < 3; ++b)
                g.g[a][b] = sep.singleton(ctx.encode({a, b}));
        CHECK(factor_bimorphism(ctx, sep, g).holds());
    }
    SUBCASE("constant-to-bottom bimorphism") {
        BimorphismTable g;
        g.g.assign(3, std::vector<AtomSet>(3, AtomSet(3)));
        CHECK(factor_bimorphism(ctx, m3, g).holds());
    }
    SUBCASE("second-projection bimorphism back into the factor") {
        BimorphismTable g;
        g.g.assign(3, std::vector<AtomSet>(3, AtomSet(3)));
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = 0; b < 3; ++b) g.g[a][b] = m3.singleton(b);
        CHECK(factor_bimorphism(ctx, m3, g).holds());
    }
    SUBCASE("a projection into a power set is not a bimorphism") {
        // the preimage of a 2-element target set is a 2-set, not closed in MO
        ClosureSpace p3 = pw(3);
        BimorphismTable g;
        g.g.assign(3, std::vector<AtomSet>(3, AtomSet(3)));
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = 0; b < 3; ++b) g.g[a][b] = p3.singleton(a);
        CHECK_THROWS_WITH_AS(factor_bimorphism(ctx, p3, g),
                             doctest::Contains("NotBimorphism"), Error);
    }
    SUBCASE("a non-bimorphism is rejected") {
        // partial preimage of a singleton target is a 2-set, not closed in MO
        BimorphismTable g;
        g.g.assign(3, std::vector<AtomSet>(3, AtomSet(3)));
        g.g[0][0] = m3.singleton(0);
        g.g[0][1] = m3.singleton(0);
        CHECK_THROWS_WITH_AS(factor_bimorphism(ctx, m3, g),
                             doctest::Contains("NotBimorphism"), Error);
    }
}

TEST_CASE("map table parser") {
    ClosureSpace m3 = mo(3);
    ProductContext ctx({m3, m3});
    std::string table;
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b)
            table += "p" + std::to_string(a) + " p" + std::to_string(b) + " : p" +
                     std::to_string(a) + "\n";
    BimorphismTable g = parse_map_table(ctx, m3, table);
    CHECK(g.g[2][1] == m3.singleton(2));
    CHECK(factor_bimorphism(ctx, m3, g).holds());

    CHECK_THROWS_WITH_AS(parse_map_table(ctx, m3, "p0 p0 : p0\n"),
                         doctest::Contains("ParseError"), Error); // missing rows
    std::string dash = table;
    dash.replace(dash.find(": p0"), 4, ": -");
    BimorphismTable g2 = parse_map_table(ctx, m3, dash);
    CHECK(g2.g[0][0] == AtomSet(3));
}
