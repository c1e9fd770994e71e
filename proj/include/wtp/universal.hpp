#pragma once

#include <string>
#include <vector>

#include "wtp/core.hpp"
#include "wtp/products.hpp"

namespace wtp {

// h_a into the two-element space: h(p) = 0 exactly on the atoms of a.
struct TwoValuedMap {
    AtomSet kernel;
    bool value(std::size_t atom) const { return !kernel.test(atom); }
};
// Throws Error("NotClosed") when a is not closed; the result is verified to
// preserve arbitrary joins.
TwoValuedMap point_separating_map(const ClosureSpace& l, const AtomSet& a);

// Map into the dual of l2, given by atom images; the extension sends a to
// the intersection of its atoms' images (dual joins are meets).
struct DualMap {
    std::vector<AtomSet> atom_image; // one closed set of l2 per atom of l1

    AtomSet apply(const ClosureSpace& l2, const AtomSet& a) const {
        AtomSet r = l2.top();
        a.for_each([&](std::size_t p) { r &= atom_image[p]; });
        return r;
    }
    bool operator==(const DualMap&) const = default;
};

// Join preservation into the dual: every "column" preimage
// {p1 : p2 ∈ f(p1)} must be closed in l1.
bool dual_map_join_preserving(const ClosureSpace& l1, const ClosureSpace& l2,
                              const DualMap& f);

// All join-preserving maps l1 → l2*, by filtered enumeration of atom-image
// assignments.  Throws BudgetExceeded when the assignment count exceeds it.
std::vector<DualMap> enumerate_dual_maps(const ClosureSpace& l1, const ClosureSpace& l2,
                                         std::size_t budget = kDefaultBudget);

// The correspondence between the enumerated top product of (l1, l2) and the
// join-preserving maps l1 → l2*: both directions are exhibited and checked
// mutually inverse, counts reported, and containment shown to transport to
// pointwise containment of maps.
struct GaloisReport {
    std::size_t map_count = 0;
    std::size_t top_count = 0;
    Verdict verdict;
};
GaloisReport galois_correspondence(const ClosureSpace& l1, const ClosureSpace& l2,
                                   std::uint64_t seed = 0,
                                   std::size_t budget = kDefaultBudget);

// Atom-pair image table of a two-variable map into `target`.
struct BimorphismTable {
    std::vector<std::vector<AtomSet>> g; // g[p1][p2], closed in target
};

// h(R) = join of the g-images over the members of R.
AtomSet bimorphism_extend(const ProductContext& ctx, const ClosureSpace& target,
                          const BimorphismTable& g, const AtomSet& r);

// Verifies g is a bimorphism (throws Error("NotBimorphism") otherwise), then
// checks that h preserves arbitrary joins out of the top product, agrees
// with g through the canonical atom-pair map, and is atom-determined.
Verdict factor_bimorphism(const ProductContext& ctx, const ClosureSpace& target,
                          const BimorphismTable& g);

// Text rows "p1 p2 : x y z" (right side lists target atoms; "-" for the
// empty set).  Throws Error("ParseError") on malformed or incomplete tables.
BimorphismTable parse_map_table(const ProductContext& ctx, const ClosureSpace& target,
                                const std::string& text);

} // namespace wtp
