#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "wtp/bitset.hpp"
#include "wtp/verdict.hpp"

namespace wtp {

inline constexpr std::size_t kMaxSingleAtoms = 64;
inline constexpr std::size_t kMaxProductAtoms = 4096;

struct Error : std::runtime_error {
    Error(std::string c, const std::string& msg)
        : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
    std::string code;
};

struct BudgetExceeded : Error {
    BudgetExceeded(std::size_t partial, std::size_t budget)
        : Error("BudgetExceeded",
                "enumeration reached " + std::to_string(partial) +
                    " sets (budget " + std::to_string(budget) + ")"),
          partial_count(partial) {}
    std::size_t partial_count;
};

// Ordered list of distinct atom names.  Iteration order is fixed; all
// computation is positional, names only matter for I/O.
class GroundSet {
public:
    explicit GroundSet(std::vector<std::string> atoms);

    std::size_t size() const { return atoms_.size(); }
    const std::vector<std::string>& atoms() const { return atoms_; }
    const std::string& name(std::size_t i) const { return atoms_[i]; }
    std::size_t index(const std::string& name) const;
    bool has(const std::string& name) const { return index_.count(name) > 0; }

    AtomSet set_of(const std::vector<std::string>& names) const;
    std::vector<std::string> names_of(const AtomSet& s) const;

    bool operator==(const GroundSet& o) const { return atoms_ == o.atoms_; }

private:
    std::vector<std::string> atoms_;
    std::unordered_map<std::string, std::size_t> index_;
};

// A validated simple closure space: contains 0, 1, all singletons, and is
// closed under pairwise intersection.  The closed family is kept sorted by
// (popcount, word value) and carries a membership index.
class ClosureSpace {
public:
    static ClosureSpace validate(std::vector<std::string> atoms,
                                 std::vector<std::vector<std::string>> family);

    // Family is deduplicated, sorted and axiom-checked; throws Error on any
    // violated axiom (MissingBottom / MissingTop / MissingSingleton /
    // NotIntersectionClosed).
    static ClosureSpace from_family(GroundSet ground, std::vector<AtomSet> family);

    // Caller guarantees the family is a closure system (e.g. produced by a
    // worklist closure); only dedup + sort + index is performed.
    static ClosureSpace trusted(GroundSet ground, std::vector<AtomSet> family);

    const GroundSet& ground() const { return ground_; }
    std::size_t atom_count() const { return ground_.size(); }
    const std::vector<AtomSet>& closed() const { return closed_; }
    std::size_t closed_count() const { return closed_.size(); }

    bool is_closed(const AtomSet& a) const { return index_.count(a) > 0; }

    AtomSet bottom() const { return AtomSet(ground_.size()); }
    AtomSet top() const { return AtomSet::full(ground_.size()); }
    AtomSet singleton(std::size_t atom) const;

    // Least closed superset of A.
    AtomSet closure(const AtomSet& a) const;
    AtomSet join(const AtomSet& a, const AtomSet& b) const { return closure(a | b); }

    // b covered by a: b < a with no closed set strictly between.
    bool covers(const AtomSet& a, const AtomSet& b) const;

    // Closed sets covered by 1.
    std::vector<AtomSet> coatoms() const;
    // Coatoms above a.
    std::vector<AtomSet> coatoms_above(const AtomSet& a) const;

    bool operator==(const ClosureSpace& o) const {
        return ground_ == o.ground_ && closed_ == o.closed_;
    }
    bool same_family(const ClosureSpace& o) const { return closed_ == o.closed_; }

private:
    ClosureSpace(GroundSet g, std::vector<AtomSet> fam);

    GroundSet ground_;
    std::vector<AtomSet> closed_;
    std::unordered_set<AtomSet, AtomSetHash> index_;
};

Verdict has_covering_property(const ClosureSpace& l);
bool is_coatomistic(const ClosureSpace& l);
bool is_power_set(const ClosureSpace& l);

// The two-element space on a one-atom ground set.
ClosureSpace two_element_space();

// Intersection-closure of `seeds` (always including the top) computed by a
// worklist: every family member is intersected with every generator until no
// new set appears.  Deterministic output order.  Throws BudgetExceeded.
std::vector<AtomSet> intersection_closure(std::size_t nbits,
                                          const std::vector<AtomSet>& seeds,
                                          std::size_t budget);

} // namespace wtp
