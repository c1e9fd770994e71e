#pragma once

#include <optional>
#include <vector>

#include "wtp/core.hpp"
#include "wtp/ortho.hpp"
#include "wtp/products.hpp"

namespace wtp {

// Atom-to-atom assignment between two spaces (or an endomorphism when both
// coincide).  The induced map on closed sets is a ↦ closure(image of a).
struct AtomMap {
    std::vector<std::size_t> image; // source atom index -> target atom index

    AtomSet apply_atoms(const AtomSet& a, std::size_t target_bits) const {
        AtomSet r(target_bits);
        a.for_each([&](std::size_t p) { r.set(image[p]); });
        return r;
    }
    AtomSet apply(const ClosureSpace& target, const AtomSet& a) const {
        return target.closure(apply_atoms(a, target.atom_count()));
    }
    bool operator==(const AtomMap&) const = default;
};

// Join preservation via the preimage criterion: the atom-join formula holds
// by construction, so the map preserves arbitrary joins iff the atom
// preimage of every closed target set is closed in the source.
bool preserves_joins(const ClosureSpace& src, const ClosureSpace& dst, const AtomMap& u);

// (a,b)M: (c∨a)∧b = c∨(a∧b) for all closed c ⊆ b.
bool is_modular_pair(const ClosureSpace& l, const AtomSet& a, const AtomSet& b);

// z central iff its set-complement is closed and (z,zᶜ)M and (zᶜ,z)M.
bool is_central(const ClosureSpace& l, const AtomSet& z);

struct CentralDecomposition {
    std::vector<AtomSet> center;        // all central elements
    std::vector<AtomSet> central_atoms; // the e(p) classes, partitioning Σ
    std::vector<ClosureSpace> components; // interval [0,z] per class, reindexed
};
CentralDecomposition central_elements(const ClosureSpace& l);

// Order-isomorphism of l with the product of its components: every closed
// set splits uniquely as a union of one closed piece per class, and every
// such union is closed.
Verdict central_reconstruction(const ClosureSpace& l, const CentralDecomposition& d);

// Returns (z′ = zᶜ) and asserts it matches the modular-pair definition.
bool ortho_central_test(const ClosureSpace& l, const OrthoMap& o, const AtomSet& z);

// Backtracking over atom ↦ coatom images with symmetry pruning; nullopt
// certifies no orthocomplementation exists.
std::optional<OrthoMap> find_orthocomplementation(const ClosureSpace& l,
                                                  std::size_t budget = 50000000);

Verdict is_orthomodular(const ClosureSpace& l, const OrthoMap& o);

// n atoms whose first-last join covers every one of them.
Verdict contains_mo(const ClosureSpace& l, std::size_t n);

// Strong form: every atom pair's join holds a third atom r with p ∈ q∨r and
// q ∈ p∨r.
Verdict is_connected(const ClosureSpace& l);

// Certificate search over blocks in which every atom pair's join has a third
// atom; exact refutation only at ≤ 6 atoms, Unknown otherwise.
Verdict is_weakly_connected(const ClosureSpace& l);

// Full automorphism group as atom permutations (composition-closed,
// verified).  Guarded at ≤ 16 atoms.
std::vector<AtomMap> automorphisms(const ClosureSpace& l, std::size_t budget = 100000000);

bool is_transitive(const ClosureSpace& l, const std::vector<AtomMap>& auts);

// u large: no image of a line is a single atom, and the image of the top is
// not confined to one coordinate value.
bool is_large(const ProductContext& ctx, const AtomMap& u);

struct Factorization {
    std::vector<std::size_t> f;  // factor index permutation
    std::vector<AtomMap> v;      // per-factor atom maps, v[i]: L_i -> L_f(i)
};

// The product endomorphism with u(p)_{f(i)} = v_i(p_i).
AtomMap induce_product_map(const ProductContext& ctx, const std::vector<std::size_t>& f,
                           const std::vector<AtomMap>& v);

// Splits a large atom endomorphism of an interval member into a factor
// permutation and per-factor maps; throws NotLarge / NotFactorable.
Factorization factor_endomorphism(const ProductContext& ctx, const ClosureSpace& l,
                                  const AtomMap& u);

} // namespace wtp
