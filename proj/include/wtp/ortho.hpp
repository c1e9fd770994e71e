#pragma once

#include <vector>

#include "wtp/core.hpp"

namespace wtp {

// Candidate orthocomplementation.  An orthocomplementation of an atomistic
// space is determined by its atom images: a′ = ∩{p′ ; p ∈ a} (so ∅′ = 1).
struct OrthoMap {
    std::vector<AtomSet> atom_image; // one closed set per atom position

    AtomSet apply(const ClosureSpace& l, const AtomSet& a) const {
        AtomSet r = l.top();
        a.for_each([&](std::size_t p) { r &= atom_image[p]; });
        return r;
    }
};

// Checks involution, order reversal and complementation (a∨a′=1, a∧a′=0)
// over the whole closed family.
Verdict is_orthocomplementation(const ClosureSpace& l, const OrthoMap& o);

} // namespace wtp
