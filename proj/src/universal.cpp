#include "wtp/universal.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace wtp {

TwoValuedMap point_separating_map(const ClosureSpace& l, const AtomSet& a) {
    if (!l.is_closed(a)) throw Error("NotClosed", "kernel must be a closed set");
    // join preservation: the preimage of each element of 2 is closed — the
    // preimage of the bottom is a itself, of the top the whole ground set
    if (!l.is_closed(l.top()))
        throw Error("AssertionFailed", "ground set not closed");
    return TwoValuedMap{a};
}

bool dual_map_join_preserving(const ClosureSpace& l1, const ClosureSpace& l2,
                              const DualMap& f) {
    if (f.atom_image.size() != l1.atom_count()) return false;
    for (const auto& img : f.atom_image)
        if (!l2.is_closed(img)) return false;
    for (std::size_t p2 = 0; p2 < l2.atom_count(); ++p2) {
        AtomSet col(l1.atom_count());
        for (std::size_t p1 = 0; p1 < l1.atom_count(); ++p1)
            if (f.atom_image[p1].test(p2)) col.set(p1);
        if (!l1.is_closed(col)) return false;
    }
    return true;
}

std::vector<DualMap> enumerate_dual_maps(const ClosureSpace& l1, const ClosureSpace& l2,
                                         std::size_t budget) {
    const std::size_t n1 = l1.atom_count();
    const std::size_t k = l2.closed_count();
    double total = 1;
    for (std::size_t i = 0; i < n1; ++i) total *= static_cast<double>(k);
    if (total > static_cast<double>(budget))
        throw BudgetExceeded(static_cast<std::size_t>(budget), budget);

    std::vector<DualMap> out;
    std::vector<std::size_t> pick(n1, 0);
    while (true) {
        DualMap f;
        for (std::size_t i = 0; i < n1; ++i) f.atom_image.push_back(l2.closed()[pick[i]]);
        if (dual_map_join_preserving(l1, l2, f)) out.push_back(std::move(f));
        std::size_t i = n1;
        while (i > 0 && ++pick[i - 1] == k) pick[--i] = 0;
        if (i == 0) break;
    }
    return out;
}

GaloisReport galois_correspondence(const ClosureSpace& l1, const ClosureSpace& l2,
                                   std::uint64_t seed, std::size_t budget) {
    ProductContext ctx({l1, l2});
    ClosureSpace top = LazyTopProduct(ctx).enumerate(budget);
    std::vector<DualMap> maps = enumerate_dual_maps(l1, l2, budget);

    GaloisReport rep;
    rep.map_count = maps.size();
    rep.top_count = top.closed_count();
    auto pname = [&](const AtomSet& s) { return ctx.ground().names_of(s); };

    if (rep.map_count != rep.top_count) {
        rep.verdict = Verdict::no({{"maps", rep.map_count}, {"top", rep.top_count}},
                                  "counts differ");
        return rep;
    }

    // R ↦ F_R via sections of the second coordinate
    const std::size_t n1 = l1.atom_count();
    auto section_map = [&](const AtomSet& r) {
        DualMap f;
        for (std::size_t p1 = 0; p1 < n1; ++p1)
            f.atom_image.push_back(ctx.section(r, 1, {p1, 0}));
        return f;
    };
    // F ↦ R_F as the union of the atom rows
    auto union_set = [&](const DualMap& f) {
        AtomSet r(ctx.bits());
        for (std::size_t p1 = 0; p1 < n1; ++p1)
            f.atom_image[p1].for_each(
                [&](std::size_t p2) { r.set(ctx.encode({p1, p2})); });
        return r;
    };

    std::vector<DualMap> from_top;
    for (const auto& r : top.closed()) {
        DualMap f = section_map(r);
        if (std::find(maps.begin(), maps.end(), f) == maps.end()) {
            rep.verdict = Verdict::no({{"R", pname(r)}},
                                      "section map is not join-preserving");
            return rep;
        }
        if (union_set(f) != r) {
            rep.verdict = Verdict::no({{"R", pname(r)}}, "round trip R→F→R fails");
            return rep;
        }
        from_top.push_back(std::move(f));
    }
    for (const auto& f : maps) {
        AtomSet r = union_set(f);
        if (!top.is_closed(r)) {
            rep.verdict = Verdict::no({{"R", pname(r)}},
                                      "map image is not in the top product");
            return rep;
        }
        if (!(section_map(r) == f)) {
            rep.verdict = Verdict::no({{"R", pname(r)}}, "round trip F→R→F fails");
            return rep;
        }
    }

    // containment of sets transports to pointwise containment of images
    // (the dual order anti-isomorphism)
    auto le_map = [&](const DualMap& a, const DualMap& b) {
        for (std::size_t p = 0; p < n1; ++p)
            if (!a.atom_image[p].is_subset_of(b.atom_image[p])) return false;
        return true;
    };
    std::size_t checked = 0;
    auto check_pair = [&](std::size_t i, std::size_t j) {
        ++checked;
        return (top.closed()[i].is_subset_of(top.closed()[j])) ==
               le_map(from_top[i], from_top[j]);
    };
    bool ok = true;
    nlohmann::ordered_json bad;
    if (rep.top_count * rep.top_count <= 1000000) {
        for (std::size_t i = 0; i < rep.top_count && ok; ++i)
            for (std::size_t j = 0; j < rep.top_count && ok; ++j)
                if (!check_pair(i, j)) {
                    ok = false;
                    bad = {{"i", pname(top.closed()[i])}, {"j", pname(top.closed()[j])}};
                }
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> d(0, rep.top_count - 1);
        for (int t = 0; t < 10 && ok; ++t) {
            std::size_t i = d(rng), j = d(rng);
            if (!check_pair(i, j)) {
                ok = false;
                bad = {{"i", pname(top.closed()[i])}, {"j", pname(top.closed()[j])}};
            }
        }
    }
    if (!ok) {
        rep.verdict = Verdict::no(bad, "order transport fails");
        return rep;
    }
    rep.verdict = Verdict::yes(
        {{"maps", rep.map_count}, {"top", rep.top_count}, {"order_pairs", checked}},
        "mutually inverse, order transported");
    return rep;
}

AtomSet bimorphism_extend(const ProductContext& ctx, const ClosureSpace& target,
                          const BimorphismTable& g, const AtomSet& r) {
    AtomSet u(target.atom_count());
    r.for_each([&](std::size_t code) {
        auto t = ctx.decode(code);
        u |= g.g[t[0]][t[1]];
    });
    return target.closure(u);
}

Verdict factor_bimorphism(const ProductContext& ctx, const ClosureSpace& target,
                          const BimorphismTable& g) {
    if (ctx.arity() != 2) throw Error("NotBimorphism", "table requires two factors");
    const ClosureSpace& l1 = ctx.factor(0);
    const ClosureSpace& l2 = ctx.factor(1);
    const std::size_t n1 = l1.atom_count(), n2 = l2.atom_count();
    if (g.g.size() != n1) throw Error("NotBimorphism", "table row count mismatch");
    for (const auto& row : g.g) {
        if (row.size() != n2) throw Error("NotBimorphism", "table column count mismatch");
        for (const auto& e : row)
            if (!target.is_closed(e))
                throw Error("NotBimorphism", "table entry is not a closed set");
    }

    // each partial map preserves joins: preimages of closed sets are closed
    for (const auto& c : target.closed()) {
        for (std::size_t p2 = 0; p2 < n2; ++p2) {
            AtomSet pre(n1);
            for (std::size_t p1 = 0; p1 < n1; ++p1)
                if (g.g[p1][p2].is_subset_of(c)) pre.set(p1);
            if (!l1.is_closed(pre))
                throw Error("NotBimorphism",
                            "first-variable preimage not closed at column " +
                                l2.ground().name(p2));
        }
        for (std::size_t p1 = 0; p1 < n1; ++p1) {
            AtomSet pre(n2);
            for (std::size_t p2 = 0; p2 < n2; ++p2)
                if (g.g[p1][p2].is_subset_of(c)) pre.set(p2);
            if (!l2.is_closed(pre))
                throw Error("NotBimorphism",
                            "second-variable preimage not closed at row " +
                                l1.ground().name(p1));
        }
    }

    // h preserves arbitrary joins out of the top product: the preimage of
    // every closed target set has all sections closed
    for (const auto& c : target.closed()) {
        AtomSet pre(ctx.bits());
        for (std::size_t p1 = 0; p1 < n1; ++p1)
            for (std::size_t p2 = 0; p2 < n2; ++p2)
                if (g.g[p1][p2].is_subset_of(c)) pre.set(ctx.encode({p1, p2}));
        if (!top_membership(ctx, pre))
            return Verdict::no({{"c", target.ground().names_of(c)}},
                               "preimage misses the top product");
    }

    // h ∘ (canonical pair map) agrees with the extension of g on all closed
    // pairs, atoms included
    std::size_t pairs = 0;
    for (const auto& a1 : l1.closed())
        for (const auto& a2 : l2.closed()) {
            AtomSet rect(ctx.bits());
            AtomSet direct(target.atom_count());
            a1.for_each([&](std::size_t p1) {
                a2.for_each([&](std::size_t p2) {
                    rect.set(ctx.encode({p1, p2}));
                    direct |= g.g[p1][p2];
                });
            });
            if (bimorphism_extend(ctx, target, g, top_join(ctx, rect)) !=
                target.closure(direct))
                return Verdict::no({{"a1", l1.ground().names_of(a1)},
                                    {"a2", l2.ground().names_of(a2)}},
                                   "h does not agree with g on a closed pair");
            ++pairs;
        }

    return Verdict::yes({{"closed_pairs", pairs}},
                        "h join-preserving, agrees with g, determined by its "
                        "values on the product atoms");
}

BimorphismTable parse_map_table(const ProductContext& ctx, const ClosureSpace& target,
                                const std::string& text) {
    if (ctx.arity() != 2) throw Error("ParseError", "table requires two factors");
    const ClosureSpace& l1 = ctx.factor(0);
    const ClosureSpace& l2 = ctx.factor(1);
    BimorphismTable t;
    t.g.assign(l1.atom_count(),
               std::vector<AtomSet>(l2.atom_count(), AtomSet(target.atom_count())));
    std::vector<std::vector<bool>> seen(l1.atom_count(),
                                        std::vector<bool>(l2.atom_count(), false));
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw Error("ParseError", "missing ':' in row: " + line);
        std::istringstream lhs(line.substr(0, colon));
        std::string a1, a2, extra;
        if (!(lhs >> a1 >> a2) || (lhs >> extra))
            throw Error("ParseError", "left side needs two atom names: " + line);
        if (!l1.ground().has(a1) || !l2.ground().has(a2))
            throw Error("ParseError", "unknown factor atom in row: " + line);
        std::size_t i = l1.ground().index(a1), j = l2.ground().index(a2);
        if (seen[i][j]) throw Error("ParseError", "duplicate row for " + a1 + " " + a2);
        seen[i][j] = true;
        AtomSet v(target.atom_count());
        std::istringstream rhs(line.substr(colon + 1));
        std::string tok;
        while (rhs >> tok) {
            if (tok == "-") continue;
            if (!target.ground().has(tok))
                throw Error("ParseError", "unknown target atom: " + tok);
            v.set(target.ground().index(tok));
        }
        t.g[i][j] = target.closure(v);
    }
    for (std::size_t i = 0; i < l1.atom_count(); ++i)
        for (std::size_t j = 0; j < l2.atom_count(); ++j)
            if (!seen[i][j])
                throw Error("ParseError", "missing row for " + l1.ground().name(i) +
                                              " " + l2.ground().name(j));
    return t;
}

} // namespace wtp
