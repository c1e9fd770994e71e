#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "wtp/catalog.hpp"
#include "wtp/harness.hpp"
#include "wtp/structure.hpp"

using namespace wtp;

namespace {
ClosureSpace mo(int n) { return generate(GeneratorSpec::mo(n)); }
ClosureSpace pw(int n) { return generate(GeneratorSpec::power_set(n)); }
} // namespace

TEST_CASE("join preservation via the preimage criterion") {
    ClosureSpace m4 = mo(4);
    AtomMap rot{{1, 2, 3, 0}};
    CHECK(preserves_joins(m4, m4, rot));
    // collapsing two atoms of an MO-style space onto one is not join
    // preserving: the preimage of a singleton is a 2-set, which is not closed
    AtomMap collapse{{0, 0, 2, 3}};
    CHECK(!preserves_joins(m4, m4, collapse));
    // but collapsing inside a power set is fine
    ClosureSpace p3 = pw(3);
    AtomMap pcollapse{{0, 0, 2}};
    CHECK(preserves_joins(p3, p3, pcollapse));
}

TEST_CASE("modular pairs and central elements") {
    ProductContext ctx({pw(2), mo(3)});
    ClosureSpace l = separated_product(ctx);
    // π₁⁻¹({a}) is central: its set complement is π₁⁻¹({b})
    AtomSet z(ctx.bits());
    for (std::size_t v = 0; v < 3; ++v) z.set(ctx.encode({0, v}));
    CHECK(is_central(l, z));
    CHECK(is_modular_pair(l, z, z.complement()));
    CHECK(!is_central(l, l.singleton(0))); // a single grid cell is not

    CentralDecomposition d = central_elements(l);
    CHECK(d.center.size() == 4);        // 0, the two half-grids, 1
    CHECK(d.central_atoms.size() == 2); // one class per half-grid
    CHECK(d.components.size() == 2);
    for (const auto& comp : d.components) CHECK(comp.closed_count() == 5);
    CHECK(central_reconstruction(l, d).holds());
}

TEST_CASE("complement route and modular-pair route agree on centrality") {
    ClosureSpace p2 = pw(2);
    auto o = find_orthocomplementation(p2);
    REQUIRE(o.has_value());
    CHECK(ortho_central_test(p2, *o, p2.singleton(0)));
    ClosureSpace m4 = mo(4);
    OrthoMap pairing = mo_orthocomplementation(4);
    CHECK(!ortho_central_test(m4, pairing, m4.singleton(0)));
    CHECK(ortho_central_test(m4, pairing, m4.bottom()));
}

TEST_CASE("irreducible spaces have the trivial center") {
    for (auto l : {mo(3), mo(4), generate(GeneratorSpec::projective(2, 3))}) {
        CentralDecomposition d = central_elements(l);
        CHECK(d.center.size() == 2);
        CHECK(d.central_atoms.size() == 1);
    }
    // a power set is as reducible as it gets
    CHECK(central_elements(pw(3)).center.size() == 8);
}

TEST_CASE("orthocomplementation search finds the pairing map on even MO") {
    ClosureSpace m4 = mo(4);
    auto o = find_orthocomplementation(m4);
    REQUIRE(o.has_value());
    CHECK(is_orthocomplementation(m4, *o).holds());
    CHECK(is_orthomodular(m4, *o).holds());
}

TEST_CASE("orthocomplementation search certifies nonexistence on odd MO") {
    // a fixed-point-free involution on an odd atom set cannot exist
    CHECK(!find_orthocomplementation(mo(3)).has_value());
    CHECK(!find_orthocomplementation(mo(5)).has_value());
    CHECK(find_orthocomplementation(pw(3)).has_value());
}

TEST_CASE("orthocomplementation search respects bounds and budget") {
    ProductContext big({mo(5), mo(5)});
    ClosureSpace l = separated_product(big);
    CHECK_THROWS_WITH_AS((void)find_orthocomplementation(l),
                         doctest::Contains("BoundsExceeded"), Error);
    ProductContext c44({mo(4), mo(4)});
    ClosureSpace sep = separated_product(c44);
    CHECK_THROWS_AS((void)find_orthocomplementation(sep, 3), BudgetExceeded);
}

TEST_CASE("MO-width detection") {
    CHECK(contains_mo(mo(4), 4).holds());
    CHECK(contains_mo(mo(4), 5).fails());
    CHECK(contains_mo(pw(3), 3).fails());
    ProductContext ctx({mo(3), mo(3)});
    CHECK(contains_mo(separated_product(ctx), 3).holds());
}

TEST_CASE("connectivity predicates") {
    CHECK(is_connected(mo(3)).holds());
    CHECK(is_connected(pw(3)).fails());
    CHECK(is_weakly_connected(mo(4)).holds());
    CHECK(is_weakly_connected(generate(GeneratorSpec::projective(2, 3))).holds());
    // 6 atoms: the exhaustive refutation path applies
    ProductContext ctx({pw(2), mo(3)});
    CHECK(is_weakly_connected(separated_product(ctx)).fails());
    CHECK(is_weakly_connected(pw(2)).fails());
}

TEST_CASE("automorphism groups of the basic spaces") {
    CHECK(automorphisms(mo(3)).size() == 6);   // S3
    CHECK(automorphisms(mo(4)).size() == 24);  // S4
    CHECK(automorphisms(pw(3)).size() == 6);
    CHECK(automorphisms(generate(GeneratorSpec::projective(2, 3))).size() == 168);
    CHECK(is_transitive(mo(4), automorphisms(mo(4))));
}

TEST_CASE("bottom product automorphisms all factor") {
    ClosureSpace m3 = mo(3);
    ProductContext ctx({m3, m3});
    ClosureSpace sep = separated_product(ctx);
    auto auts = automorphisms(sep);
    CHECK(auts.size() == 72); // 3! · 3! · 2
    CHECK(is_transitive(sep, auts));
    for (const auto& u : auts) {
        CHECK(is_large(ctx, u));
        Factorization f = factor_endomorphism(ctx, sep, u);
        CHECK(induce_product_map(ctx, f.f, f.v) == u);
        // the factor permutation is a permutation
        auto perm = f.f;
        std::sort(perm.begin(), perm.end());
        CHECK(perm == std::vector<std::size_t>{0, 1});
    }
}

TEST_CASE("induced product maps from explicit factor data") {
    ClosureSpace m3 = mo(3);
    ProductContext ctx({m3, m3});
    ClosureSpace sep = separated_product(ctx);
    AtomMap v0{{1, 2, 0}}, v1{{0, 2, 1}};
    SUBCASE("without coordinate swap") {
        AtomMap u = induce_product_map(ctx, {0, 1}, {v0, v1});
        Factorization f = factor_endomorphism(ctx, sep, u);
        CHECK(f.f == std::vector<std::size_t>{0, 1});
        CHECK(f.v[0] == v0);
        CHECK(f.v[1] == v1);
    }
    SUBCASE("with coordinate swap") {
        AtomMap u = induce_product_map(ctx, {1, 0}, {v0, v1});
        Factorization f = factor_endomorphism(ctx, sep, u);
        CHECK(f.f == std::vector<std::size_t>{1, 0});
        CHECK(induce_product_map(ctx, f.f, f.v) == u);
    }
}

TEST_CASE("non-large maps are rejected") {
    ClosureSpace m3 = mo(3);
    ProductContext ctx({m3, m3});
    ClosureSpace sep = separated_product(ctx);
    AtomMap constant{std::vector<std::size_t>(9, 0)};
    CHECK(!is_large(ctx, constant));
    CHECK_THROWS_WITH_AS(factor_endomorphism(ctx, sep, constant),
                         doctest::Contains("NotLarge"), Error);
}

TEST_CASE("single-set extensions lose the orthocomplementation") {
    ClosureSpace m4 = mo(4);
    ProductContext ctx({m4, m4});
    ClosureSpace sep = separated_product(ctx);
    auto xis = xi_triples(ctx);
    CHECK(xis.size() == 96); // C(4,3)² · 3! skew triples
    ClosureSpace ext = xi_extension(sep, xis[0]);
    CHECK(ext.closed_count() == 115);
    CHECK(!find_orthocomplementation(ext).has_value());
    CHECK(find_orthocomplementation(sep).has_value());
    CHECK(!find_orthocomplementation(circ_product(m4, m4)).has_value());
}
