#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wtp/core.hpp"
#include "wtp/products.hpp"

namespace wtp {

struct TheoremResult {
    std::string id;
    Verdict verdict;
    std::string expected;   // fixture status: Holds / Fails
    bool as_expected = false;
};

const std::vector<std::string>& theorem_ids();

// Version-controlled expected-status and frozen-count table.
nlohmann::ordered_json load_fixtures(const std::string& path);

TheoremResult run_theorem(const std::string& id, std::uint64_t seed,
                          const nlohmann::ordered_json& fixtures);
std::vector<TheoremResult> run_all(std::uint64_t seed,
                                   const nlohmann::ordered_json& fixtures);

// Re-checks the structural claims recorded in a verdict's witness using
// core predicates only (falls back to a deterministic re-run).
Verdict verify_witness(const TheoremResult& r, std::uint64_t seed,
                       const nlohmann::ordered_json& fixtures);

// --- shared constructions, also used by the test suites ---

// All 3-element sets with pairwise distinct coordinates in a 2-factor grid.
std::vector<AtomSet> xi_triples(const ProductContext& ctx);

// The family of `base` plus one extra pairwise-skew set (still a closure
// system, since every proper subset of the extra set is already present).
ClosureSpace xi_extension(const ClosureSpace& base, const AtomSet& xi);

// Covering failure at the top of a two-MO-factor product: the four-step
// join chain from a 3-atom skew set plus a mixed atom, with a strictly
// intermediate 4-atom skew set.
Verdict top_cover_failure_chain(const ProductContext& ctx);

// Covering check over the lazy top representation, restricted to bases
// that are joins of at most `max_atoms` atoms plus all crosses.
Verdict top_cover_scan(const ProductContext& ctx, std::size_t max_atoms = 3);

} // namespace wtp
