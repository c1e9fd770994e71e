#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "wtp/gq.hpp"
#include "wtp/verdict.hpp"

namespace wtp {

// Point of projective space: nonzero vector with the first nonzero
// coordinate normalized to 1, so equal points have identical coordinates.
struct ProjPoint {
    Vec coords;

    explicit ProjPoint(Vec v);
    std::size_t dim() const { return coords.size(); }
    bool operator==(const ProjPoint&) const = default;
    std::string str() const;
};

ProjPoint tensor(const ProjPoint& p1, const ProjPoint& p2);

// An element of the Hilbert tensor construction over (m, n): the set of
// product-point pairs whose tensor lies in V.
struct DCircElement {
    std::size_t m = 0, n = 0;
    Subspace v;
    bool canonical = false; // true when V is known to be product-spanned

    DCircElement(std::size_t m_, std::size_t n_, Subspace v_, bool canon = false)
        : m(m_), n(n_), v(std::move(v_)), canonical(canon) {}
};

bool member(const DCircElement& e, const ProjPoint& p1, const ProjPoint& p2);

// Antilinear action encoded by an m×n matrix S: A(λ) = Sᵀ·conj(λ).
Vec antilinear_apply(const Mat& s, const Vec& lambda);
// The pair set {(p1,p2) : p2 ⊥ A(p1)} — the "dual path" membership.
bool xa_member(const Mat& s, const ProjPoint& p1, const ProjPoint& p2);

// Coatom from a nonzero matrix: V = (span v)^⊥ with v_ij = s_ij in the
// product basis.  Membership along both paths is asserted equal on a grid
// of structured points; throws Error("ZeroMatrix") for S = 0.
DCircElement coatom_from_matrix(const Mat& s);

// {x : p1 ⊗ x ∈ V} — always a subspace (the structural section witness).
Subspace section_subspace(const DCircElement& e, const ProjPoint& p1);

// V = sum of the atoms' product-vector spans and the given elements' spans.
DCircElement dcirc_join(std::size_t m, std::size_t n,
                        const std::vector<std::pair<ProjPoint, ProjPoint>>& atoms,
                        const std::vector<DCircElement>& elements = {});

// Span of the product vectors inside V, certified at m = n = 2 via the
// determinant quadratic form (nullopt only in the undecided ternary case).
std::optional<Subspace> product_span_exact(std::size_t m, std::size_t n,
                                           const Subspace& v);

struct DcircEq {
    bool equal = false;
    bool certified = false;
    nlohmann::ordered_json witness;
};
// Set equality of the two pair sets: subspace-equality shortcut, certified
// decision at m = n = 2, section sampling otherwise.
DcircEq dcirc_equal(const DCircElement& e1, const DCircElement& e2,
                    std::uint64_t seed = 0);

// Holds iff both V and V^⊥ are spanned by their product vectors.
Verdict is_separated_element(const DCircElement& e, std::uint64_t seed = 0);

// (a) an element that fails is_separated_element; (b) a 3-atom set with
// pairwise distinct coordinates whose join contains a fourth product atom.
struct StrictInclusionReport {
    DCircElement not_separated;
    Verdict not_separated_verdict;
    std::vector<std::pair<ProjPoint, ProjPoint>> triple;
    std::pair<ProjPoint, ProjPoint> fourth_atom;
    Verdict verdict;
};
StrictInclusionReport strict_inclusion_witnesses(std::size_t m, std::size_t n,
                                                 std::uint64_t seed = 0);

// Image of the coatom of S under invertible exact maps (u1, u2) equals the
// coatom of the transformed matrix; checked by exact subspace equality plus
// seeded point-level spot checks.
Verdict unitary_invariance(const Mat& s, const Mat& u1, const Mat& u2,
                           std::uint64_t seed = 0);

// At m = n = 2: the image of the identity coatom under conjugation on the
// second factor is not the coatom of any antilinear matrix — the probe
// constraints force the matrix to zero.
Verdict antiunitary_breakage();

// Seeded points with integer coordinates in [-10^6, 10^6].
ProjPoint random_point(std::size_t dim, std::mt19937_64& rng);

// Plain text grid: one row per line, entries whitespace-separated scalars.
Mat parse_matrix(const std::string& text);
Vec parse_vector(const std::string& text);

} // namespace wtp
