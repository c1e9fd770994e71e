#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "wtp/catalog.hpp"
#include "wtp/products.hpp"

using namespace wtp;

namespace {
ClosureSpace mo(int n) { return generate(GeneratorSpec::mo(n)); }
ClosureSpace pw(int n) { return generate(GeneratorSpec::power_set(n)); }

AtomSet random_subset(std::size_t bits, std::mt19937_64& rng) {
    AtomSet s(bits);
    std::uniform_int_distribution<int> coin(0, 3);
    for (std::size_t i = 0; i < bits; ++i)
        if (coin(rng) == 0) s.set(i);
    return s;
}
} // namespace

TEST_CASE("product context encoding and sections") {
    ProductContext ctx({mo(3), mo(4)});
    CHECK(ctx.bits() == 12);
    CHECK(ctx.encode({2, 3}) == 11);
    CHECK(ctx.decode(7) == std::vector<std::size_t>{1, 3});
    CHECK(ctx.coord(7, 0) == 1);
    AtomSet r(12);
    r.set(ctx.encode({1, 0}));
    r.set(ctx.encode({1, 2}));
    r.set(ctx.encode({2, 2}));
    AtomSet sec = ctx.section(r, 1, {1, 0});
    CHECK(sec.members() == std::vector<std::size_t>{0, 2});
    AtomSet line = ctx.line({1, 0}, 1, sec);
    CHECK(line.members() ==
          std::vector<std::size_t>{ctx.encode({1, 0}), ctx.encode({1, 2})});
}

TEST_CASE("frozen family sizes for the bottom and middle products") {
    ClosureSpace m3 = mo(3), m4 = mo(4);
    CHECK(separated_product(ProductContext({m3, m3})).closed_count() == 44);
    CHECK(separated_product(ProductContext({m4, m4})).closed_count() == 114);
    CHECK(circ_product(m3, m3).closed_count() == 50);
    CHECK(circ_product(m4, m4).closed_count() == 210);
    CHECK(LazyTopProduct(ProductContext({m3, m3})).enumerate().closed_count() == 50);
    CHECK(LazyTopProduct(ProductContext({m4, m4})).enumerate().closed_count() == 234);
}

TEST_CASE("power-set factors collapse the interval") {
    ProductContext c22({pw(2), pw(2)});
    ClosureSpace sep = separated_product(c22);
    CHECK(sep.closed_count() == 16);
    CHECK(is_power_set(sep));
    CHECK(sep.same_family(LazyTopProduct(c22).enumerate()));

    ProductContext c({pw(3), mo(3)});
    ClosureSpace s = separated_product(c);
    CHECK(s.closed_count() == 125); // 5 closed sets of the MO factor per line
    CHECK(s.same_family(LazyTopProduct(c).enumerate()));
}

TEST_CASE("all crosses are closed in the bottom product; coatoms are atom crosses") {
    ProductContext ctx({mo(4), mo(4)});
    ClosureSpace sep = separated_product(ctx);
    for (const auto& c : ctx.all_crosses()) CHECK(sep.is_closed(c));
    auto co = sep.coatoms();
    CHECK(co.size() == 16);
    for (const auto& c : co) CHECK(c.count() == 7); // row ∪ column
}

TEST_CASE("lazy top join is a closure operator with the members as fixpoints") {
    ProductContext ctx({mo(3), mo(4)});
    std::mt19937_64 rng(0);
    for (int t = 0; t < 100; ++t) {
        AtomSet r = random_subset(ctx.bits(), rng);
        AtomSet j = top_join(ctx, r);
        CHECK(r.is_subset_of(j));
        CHECK(top_membership(ctx, j));
        CHECK(top_join(ctx, j) == j);
        CHECK(top_membership(ctx, r) == (j == r));
    }
}

TEST_CASE("top membership agrees with the enumerated family") {
    ProductContext ctx({mo(3), mo(3)});
    ClosureSpace top = LazyTopProduct(ctx).enumerate();
    std::mt19937_64 rng(1);
    for (int t = 0; t < 200; ++t) {
        AtomSet r = random_subset(ctx.bits(), rng);
        CHECK(top_membership(ctx, r) == top.is_closed(r));
    }
}

TEST_CASE("skew pairs are closed in the bottom product, skew triples are not") {
    ProductContext ctx({mo(3), mo(3)});
    ClosureSpace sep = separated_product(ctx);
    AtomSet pair(ctx.bits());
    pair.set(ctx.encode({0, 0}));
    pair.set(ctx.encode({1, 1}));
    CHECK(sep.is_closed(pair));
    AtomSet triple = pair;
    triple.set(ctx.encode({2, 2}));
    CHECK(!sep.is_closed(triple));
    CHECK(sep.closure(triple) == sep.top());
    CHECK(top_membership(ctx, triple));
}

TEST_CASE("enumeration budget raises with partial count") {
    ProductContext ctx({mo(4), mo(4)});
    CHECK_THROWS_AS(LazyTopProduct(ctx).enumerate(10), BudgetExceeded);
    CHECK_THROWS_AS(separated_product(ctx, 10), BudgetExceeded);
}

TEST_CASE("biorthogonal product equals the bottom product on even MO factors") {
    ClosureSpace m4 = mo(4);
    OrthoMap o = mo_orthocomplementation(4);
    ProductContext ctx({m4, m4});
    AertsResult r = aerts_product(ctx, {o, o});
    CHECK(r.space.same_family(separated_product(ctx)));
    CHECK(is_orthocomplementation(r.space, r.ortho).holds());
}

TEST_CASE("box product is order-isomorphic to the bottom product") {
    ClosureSpace m3 = mo(3);
    BoxResult r = box_product(m3, m3);
    CHECK(r.iso.holds());
    CHECK(r.element_count == 44);
}

TEST_CASE("middle product validates and sits inside the interval") {
    ClosureSpace m4 = mo(4);
    ProductContext ctx({m4, m4});
    ClosureSpace circ = circ_product(m4, m4);
    CHECK(in_interval(circ, ctx));
    CHECK(in_interval(separated_product(ctx), ctx));
    CHECK(in_interval(LazyTopProduct(ctx).enumerate(), ctx));
}

TEST_CASE("interval membership rejects a family with unclosed sections") {
    ProductContext ctx({mo(3), mo(3)});
    // the full power set on the grid contains sets with 2-element sections
    std::vector<AtomSet> fam;
    for (unsigned w = 0; w < (1u << 9); ++w) {
        AtomSet s(9);
        for (std::size_t i = 0; i < 9; ++i)
            if ((w >> i) & 1) s.set(i);
        fam.push_back(s);
    }
    ClosureSpace power = ClosureSpace::trusted(ctx.ground(), std::move(fam));
    CHECK(!in_interval(power, ctx));
}

TEST_CASE("axiom checker accepts the bottom product with its symmetries") {
    ClosureSpace m3 = mo(3);
    ProductContext ctx({m3, m3});
    ClosureSpace sep = separated_product(ctx);
    std::vector<std::size_t> p{2, 0, 1};
    std::vector<std::vector<std::vector<std::size_t>>> tuples{{p, p}};
    CHECK(check_axioms(sep, ctx, &tuples).holds());
}

TEST_CASE("union of two closed sets joins via the top join monotonically") {
    ProductContext ctx({mo(3), mo(4)});
    std::mt19937_64 rng(2);
    for (int t = 0; t < 50; ++t) {
        AtomSet a = top_join(ctx, random_subset(ctx.bits(), rng));
        AtomSet b = top_join(ctx, random_subset(ctx.bits(), rng));
        AtomSet j = top_join(ctx, a | b);
        CHECK(a.is_subset_of(j));
        CHECK(b.is_subset_of(j));
    }
}
