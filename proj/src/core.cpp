#include "wtp/core.hpp"

#include <algorithm>
#include <deque>

namespace wtp {

GroundSet::GroundSet(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty()) throw Error("EmptyGround", "ground set must be nonempty");
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (!index_.emplace(atoms_[i], i).second)
            throw Error("DuplicateAtom", "atom name repeated: " + atoms_[i]);
    }
}

std::size_t GroundSet::index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw Error("UnknownAtom", "no such atom: " + name);
    return it->second;
}

AtomSet GroundSet::set_of(const std::vector<std::string>& names) const {
    AtomSet s(size());
    for (const auto& n : names) s.set(index(n));
    return s;
}

std::vector<std::string> GroundSet::names_of(const AtomSet& s) const {
    std::vector<std::string> out;
    s.for_each([&](std::size_t i) { out.push_back(atoms_[i]); });
    return out;
}

ClosureSpace::ClosureSpace(GroundSet g, std::vector<AtomSet> fam)
    : ground_(std::move(g)), closed_(std::move(fam)) {
    std::sort(closed_.begin(), closed_.end(), AtomSet::canonical_less);
    closed_.erase(std::unique(closed_.begin(), closed_.end()), closed_.end());
    index_.reserve(closed_.size() * 2);
    for (const auto& c : closed_) index_.insert(c);
}

ClosureSpace ClosureSpace::trusted(GroundSet ground, std::vector<AtomSet> family) {
    return ClosureSpace(std::move(ground), std::move(family));
}

ClosureSpace ClosureSpace::from_family(GroundSet ground, std::vector<AtomSet> family) {
    ClosureSpace l(std::move(ground), std::move(family));
    const std::size_t n = l.ground_.size();
    if (!l.is_closed(AtomSet(n))) throw Error("MissingBottom", "family lacks the empty set");
    if (!l.is_closed(AtomSet::full(n))) throw Error("MissingTop", "family lacks the full ground set");
    for (std::size_t i = 0; i < n; ++i) {
        AtomSet s(n);
        s.set(i);
        if (!l.is_closed(s))
            throw Error("MissingSingleton", "family lacks singleton {" + l.ground_.name(i) + "}");
    }
    for (std::size_t i = 0; i < l.closed_.size(); ++i)
        for (std::size_t j = i + 1; j < l.closed_.size(); ++j) {
            AtomSet m = l.closed_[i] & l.closed_[j];
            if (!l.is_closed(m))
                throw Error("NotIntersectionClosed",
                            "intersection of closed sets #" + std::to_string(i) + " and #" +
                                std::to_string(j) + " is not in the family");
        }
    return l;
}

ClosureSpace ClosureSpace::validate(std::vector<std::string> atoms,
                                    std::vector<std::vector<std::string>> family) {
    GroundSet g(std::move(atoms));
    std::vector<AtomSet> fam;
    fam.reserve(family.size());
    for (const auto& names : family) fam.push_back(g.set_of(names));
    return from_family(std::move(g), std::move(fam));
}

AtomSet ClosureSpace::singleton(std::size_t atom) const {
    AtomSet s(ground_.size());
    s.set(atom);
    return s;
}

AtomSet ClosureSpace::closure(const AtomSet& a) const {
    if (is_closed(a)) return a;
    AtomSet res = top();
    // closed_ is sorted by size; first superset hit shrinks res quickly
    for (const auto& c : closed_)
        if (a.is_subset_of(c)) res &= c;
    return res;
}

bool ClosureSpace::covers(const AtomSet& a, const AtomSet& b) const {
    if (!is_closed(a) || !is_closed(b)) throw Error("NotClosed", "covers() wants closed sets");
    if (a == b || !b.is_subset_of(a)) return false;
    for (const auto& c : closed_) {
        if (c.count() >= a.count()) break; // sorted by size: no strict subset of a beyond
        if (b.is_subset_of(c) && c.is_subset_of(a) && c != b && c != a) return false;
    }
    return true;
}

std::vector<AtomSet> ClosureSpace::coatoms() const {
    std::vector<AtomSet> out;
    AtomSet t = top();
    for (const auto& c : closed_)
        if (c != t && covers(t, c)) out.push_back(c);
    return out;
}

std::vector<AtomSet> ClosureSpace::coatoms_above(const AtomSet& a) const {
    std::vector<AtomSet> out;
    for (const auto& x : coatoms())
        if (a.is_subset_of(x)) out.push_back(x);
    return out;
}

Verdict has_covering_property(const ClosureSpace& l) {
    const std::size_t n = l.atom_count();
    for (std::size_t p = 0; p < n; ++p) {
        AtomSet ps = l.singleton(p);
        for (const auto& a : l.closed()) {
            if (a.test(p)) continue; // p ∧ a ≠ 0
            AtomSet j = l.join(ps, a);
            if (!l.covers(j, a)) {
                nlohmann::ordered_json w;
                w["atom"] = l.ground().name(p);
                w["a"] = l.ground().names_of(a);
                w["join"] = l.ground().names_of(j);
                return Verdict::no(w, "p∨a does not cover a");
            }
        }
    }
    return Verdict::yes({}, "all (atom, closed) pairs checked");
}

bool is_coatomistic(const ClosureSpace& l) {
    auto cos = l.coatoms();
    for (const auto& a : l.closed()) {
        if (a == l.top()) continue; // empty intersection convention
        AtomSet m = l.top();
        for (const auto& x : cos)
            if (a.is_subset_of(x)) m &= x;
        if (m != a) return false;
    }
    return true;
}

bool is_power_set(const ClosureSpace& l) {
    if (l.atom_count() >= 64) return false; // family would not fit the cap anyway
    return l.closed_count() == (std::size_t{1} << l.atom_count());
}

ClosureSpace two_element_space() {
    GroundSet g({"p0"});
    std::vector<AtomSet> fam{AtomSet(1), AtomSet::full(1)};
    return ClosureSpace::from_family(std::move(g), std::move(fam));
}

std::vector<AtomSet> intersection_closure(std::size_t nbits,
                                          const std::vector<AtomSet>& seeds,
                                          std::size_t budget) {
    std::unordered_set<AtomSet, AtomSetHash> seen;
    std::vector<AtomSet> family;
    std::deque<AtomSet> work;
    auto add = [&](const AtomSet& s) {
        if (seen.insert(s).second) {
            family.push_back(s);
            work.push_back(s);
            if (family.size() > budget) throw BudgetExceeded(family.size(), budget);
        }
    };
    add(AtomSet::full(nbits));
    for (const auto& s : seeds) add(s);
    // A family containing the seeds is ∩-closed iff it is closed under
    // intersection with each seed, so the worklist only pairs against seeds.
    while (!work.empty()) {
        AtomSet x = work.front();
        work.pop_front();
        for (const auto& g : seeds) add(x & g);
    }
    std::sort(family.begin(), family.end(), AtomSet::canonical_less);
    return family;
}

} // namespace wtp
