#pragma once

#include <string>

#include "wtp/core.hpp"
#include "wtp/ortho.hpp"

namespace wtp {

// The lattice families the toolkit's checks quantify over.
struct GeneratorSpec {
    enum class Kind { PowerSet, MO, Projective, FromFile };
    Kind kind;
    int n = 0;            // PowerSet / MO atom count
    int q = 0, d = 0;     // Projective field size / dimension
    std::string path;     // FromFile

    static GeneratorSpec power_set(int n) { return {Kind::PowerSet, n, 0, 0, {}}; }
    static GeneratorSpec mo(int n) { return {Kind::MO, n, 0, 0, {}}; }
    static GeneratorSpec projective(int q, int d) { return {Kind::Projective, 0, q, d, {}}; }
    static GeneratorSpec from_file(std::string p) {
        return {Kind::FromFile, 0, 0, 0, std::move(p)};
    }

    std::string describe() const;
};

ClosureSpace generate(const GeneratorSpec& spec);

// The orthocomplementation on MO(n) pairing atom 2k with atom 2k+1.
// Throws Error("OddAtomCount") for odd n: no fixed-point-free involution
// exists on an odd atom set.
OrthoMap mo_orthocomplementation(int n);

} // namespace wtp
