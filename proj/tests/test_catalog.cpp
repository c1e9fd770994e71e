#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "wtp/catalog.hpp"
#include "wtp/latio.hpp"

using namespace wtp;

TEST_CASE("power set generator") {
    for (int n : {1, 2, 3, 5}) {
        ClosureSpace l = generate(GeneratorSpec::power_set(n));
        CHECK(l.atom_count() == std::size_t(n));
        CHECK(l.closed_count() == std::size_t(1) << n);
        CHECK(is_power_set(l));
    }
}

TEST_CASE("MO-style generator: bottom, singletons, top only") {
    for (int n : {3, 4, 6}) {
        ClosureSpace l = generate(GeneratorSpec::mo(n));
        CHECK(l.atom_count() == std::size_t(n));
        CHECK(l.closed_count() == std::size_t(n) + 2);
        // join of any two distinct atoms is the top
        CHECK(l.join(l.singleton(0), l.singleton(1)) == l.top());
    }
}

TEST_CASE("projective-plane generator over GF(2), dimension 3") {
    ClosureSpace l = generate(GeneratorSpec::projective(2, 3));
    CHECK(l.atom_count() == 7);            // points of the plane
    CHECK(l.closed_count() == 16);         // 0, 7 points, 7 lines, 1
    CHECK(l.coatoms().size() == 7);        // the lines
    for (const auto& c : l.coatoms()) CHECK(c.count() == 3);
    CHECK(has_covering_property(l).holds());
}

TEST_CASE("from-file generator round trips") {
    ClosureSpace l = generate(GeneratorSpec::mo(4));
    std::string path = "catalog_roundtrip.lat";
    save_lattice(l, path);
    ClosureSpace back = generate(GeneratorSpec::from_file(path));
    CHECK(back == l);
    std::remove(path.c_str());
}

TEST_CASE("pairing orthocomplementation on even MO") {
    OrthoMap o = mo_orthocomplementation(4);
    ClosureSpace l = generate(GeneratorSpec::mo(4));
    CHECK(is_orthocomplementation(l, o).holds());
    CHECK_THROWS_WITH_AS(mo_orthocomplementation(3), doctest::Contains("OddAtomCount"),
                         Error);
}

TEST_CASE("orthocomplementation checker rejects a broken map") {
    ClosureSpace l = generate(GeneratorSpec::mo(4));
    OrthoMap bad;
    for (std::size_t p = 0; p < 4; ++p) bad.atom_image.push_back(l.singleton(p));
    CHECK(!is_orthocomplementation(l, bad).holds()); // p ≤ p′ violates a ∧ a′ = 0
}

TEST_CASE("generator validation errors") {
    CHECK_THROWS_AS(generate(GeneratorSpec::power_set(0)), Error);
    CHECK_THROWS_AS(generate(GeneratorSpec::mo(0)), Error);
    CHECK_THROWS_AS(generate(GeneratorSpec::from_file("does_not_exist.lat")), Error);
}
