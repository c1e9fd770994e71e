#pragma once

#include <vector>

#include "wtp/core.hpp"
#include "wtp/ortho.hpp"

namespace wtp {

inline constexpr std::size_t kDefaultBudget = 200000;

// A tuple of factor spaces together with the flat product ground.  Product
// atom at flat code c is the coordinate tuple decode(c); its name is the
// comma-joined factor atom names.  The last coordinate varies fastest.
class ProductContext {
public:
    explicit ProductContext(std::vector<ClosureSpace> factors);

    std::size_t arity() const { return factors_.size(); }
    const ClosureSpace& factor(std::size_t i) const { return factors_[i]; }
    const std::vector<ClosureSpace>& factors() const { return factors_; }
    const GroundSet& ground() const { return ground_; }
    std::size_t bits() const { return ground_.size(); }

    std::size_t encode(const std::vector<std::size_t>& tuple) const;
    std::vector<std::size_t> decode(std::size_t code) const;
    std::size_t coord(std::size_t code, std::size_t beta) const;

    // ∪_β π_β^{-1}(parts[β]) — one component subset of Σ_β per factor.
    AtomSet cross(const std::vector<AtomSet>& parts) const;
    // All crosses over tuples of closed sets of the factors.
    std::vector<AtomSet> all_crosses() const;

    // p[A,β]: the product atoms agreeing with p except at β, ranging over A.
    AtomSet line(const std::vector<std::size_t>& p, std::size_t beta,
                 const AtomSet& a) const;
    // Section R_β[p] ⊆ Σ_β: the trace of R on the β-line through p.
    AtomSet section(const AtomSet& r, std::size_t beta,
                    const std::vector<std::size_t>& p) const;

private:
    std::vector<ClosureSpace> factors_;
    std::vector<std::size_t> stride_;
    GroundSet ground_;
};

// Bottom of the weak-tensor interval: the intersection-closure of all
// crosses, returned as a closure space on the product ground.
ClosureSpace separated_product(const ProductContext& ctx,
                               std::size_t budget = kDefaultBudget);

// Membership test for the top of the interval: every section closed.
bool top_membership(const ProductContext& ctx, const AtomSet& r);

// One sweep of R ↦ ∪_p p[closure(R_β[p])] along a single coordinate.
AtomSet top_join_pass(const ProductContext& ctx, const AtomSet& r, std::size_t beta);

// Join at the top of the interval: iterate R ↦ ∪_p p[closure(R_β[p])] over
// β = 0..n-1 until a full cycle is stable.  Fixpoints are exactly the
// top_membership-true sets.
AtomSet top_join(const ProductContext& ctx, const AtomSet& r);

// Top of the interval with no enumerated family; enumeration is opt-in and
// budget-guarded.
class LazyTopProduct {
public:
    explicit LazyTopProduct(ProductContext ctx) : ctx_(std::move(ctx)) {}

    const ProductContext& context() const { return ctx_; }
    bool member(const AtomSet& r) const { return top_membership(ctx_, r); }
    AtomSet join(const AtomSet& r) const { return top_join(ctx_, r); }

    // Full family; throws BudgetExceeded when it would grow past the budget.
    ClosureSpace enumerate(std::size_t budget = kDefaultBudget) const;

private:
    ProductContext ctx_;
};

// Join dispatch: enumerated space vs. lazy top product.
inline AtomSet join_in(const ClosureSpace& l, const AtomSet& r) { return l.closure(r); }
inline AtomSet join_in(const LazyTopProduct& l, const AtomSet& r) { return l.join(r); }

// Biorthogonal product of orthocomplemented factors: p # q iff some
// coordinate pair is orthogonal; family = {R : R^## = R}.  The family is
// asserted equal to separated_product, and the induced complement map is
// returned alongside.
struct AertsResult {
    ClosureSpace space;
    OrthoMap ortho; // atom p ↦ p^#
};
AertsResult aerts_product(const ProductContext& ctx,
                          const std::vector<OrthoMap>& orthos,
                          std::size_t budget = kDefaultBudget);

// Box product of two spaces: intersections of the pair-sets
// a□b = {(x,y) ∈ L₁×L₂ : x ⊆ a or y ⊆ b}, plus a verdict that
// a□b ↦ cross(a,b) extends to an order isomorphism onto separated_product.
struct BoxResult {
    std::size_t element_count = 0;
    Verdict iso;
};
BoxResult box_product(const ClosureSpace& l1, const ClosureSpace& l2,
                      std::size_t budget = kDefaultBudget);

// For two MO factors: the separated product plus all 3-element sets with
// pairwise distinct coordinates.  Validated; throws Error("ValidationError")
// if the union is not intersection-closed.
ClosureSpace circ_product(const ClosureSpace& mo1, const ClosureSpace& mo2);

// Checks the product axioms on an enumerated family: every cross present,
// every line-shaped closed set has a closed trace, and (when given) each
// tuple of factor atom permutations induces a family-preserving bijection.
Verdict check_axioms(const ClosureSpace& l, const ProductContext& ctx,
                     const std::vector<std::vector<std::vector<std::size_t>>>*
                         factor_permutation_tuples = nullptr);

// True iff l sits between the separated product and the top product.  Both
// routes (cross membership + section closedness, and the axiom checker) are
// computed and asserted equal.
bool in_interval(const ClosureSpace& l, const ProductContext& ctx);

} // namespace wtp
