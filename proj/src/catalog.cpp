#include "wtp/catalog.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "wtp/latio.hpp"

namespace wtp {

std::string GeneratorSpec::describe() const {
    switch (kind) {
        case Kind::PowerSet: return "powerset(" + std::to_string(n) + ")";
        case Kind::MO: return "mo(" + std::to_string(n) + ")";
        case Kind::Projective:
            return "projective(q=" + std::to_string(q) + ",d=" + std::to_string(d) + ")";
        case Kind::FromFile: return "file(" + path + ")";
    }
    return "?";
}

namespace {

std::vector<std::string> default_atom_names(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
    return names;
}

ClosureSpace gen_power_set(int n) {
    if (n < 1 || n > 20) throw Error("BoundsExceeded", "powerset supports 1..20 atoms");
    GroundSet g(default_atom_names(n));
    std::vector<AtomSet> fam;
    fam.reserve(std::size_t{1} << n);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        AtomSet s(n);
        for (int i = 0; i < n; ++i)
            if ((m >> i) & 1) s.set(i);
        fam.push_back(s);
    }
    return ClosureSpace::trusted(std::move(g), std::move(fam));
}

ClosureSpace gen_mo(int n) {
    if (n < 1 || n > 64) throw Error("BoundsExceeded", "mo supports 1..64 atoms");
    GroundSet g(default_atom_names(n));
    std::vector<AtomSet> fam;
    fam.push_back(AtomSet(n));
    for (int i = 0; i < n; ++i) {
        AtomSet s(n);
        s.set(i);
        fam.push_back(s);
    }
    fam.push_back(AtomSet::full(n));
    return ClosureSpace::trusted(std::move(g), std::move(fam));
}

// Subspace lattice of GF(q)^d: atoms are the 1-dim subspaces, closed sets the
// atom-sets of all linear subspaces.
ClosureSpace gen_projective(int q, int d) {
    if ((q != 2 && q != 3) || d < 2 || d > 4)
        throw Error("BoundsExceeded", "projective supports q in {2,3}, d in {2,3,4}");

    using Vec = std::array<int, 4>;
    auto normalize = [&](Vec v) {
        int lead = 0;
        for (int i = 0; i < d; ++i)
            if (v[i] != 0) { lead = v[i]; break; }
        if (lead == 0) return v;
        // first nonzero coordinate becomes 1 (q prime: invert by scanning)
        int inv = 1;
        for (int t = 1; t < q; ++t)
            if (lead * t % q == 1) inv = t;
        for (int i = 0; i < d; ++i) v[i] = v[i] * inv % q;
        return v;
    };

    std::vector<Vec> points;          // normalized representatives
    std::map<Vec, std::size_t> point_index;
    int total = 1;
    for (int i = 0; i < d; ++i) total *= q;
    for (int code = 1; code < total; ++code) {
        Vec v{0, 0, 0, 0};
        int c = code;
        for (int i = 0; i < d; ++i) { v[i] = c % q; c /= q; }
        v = normalize(v);
        if (!point_index.count(v)) {
            point_index[v] = points.size();
            points.push_back(v);
        }
    }
    const std::size_t na = points.size();
    if (na > kMaxSingleAtoms) throw Error("BoundsExceeded", "projective atom count over 64");

    auto span_atoms = [&](const std::vector<Vec>& basis) {
        AtomSet s(na);
        int combos = 1;
        for (std::size_t i = 0; i < basis.size(); ++i) combos *= q;
        for (int code = 1; code < combos; ++code) {
            Vec v{0, 0, 0, 0};
            int c = code;
            for (std::size_t i = 0; i < basis.size(); ++i) {
                int coef = c % q;
                c /= q;
                for (int k = 0; k < d; ++k) v[k] = (v[k] + coef * basis[i][k]) % q;
            }
            bool zero = true;
            for (int k = 0; k < d; ++k)
                if (v[k]) zero = false;
            if (!zero) s.set(point_index.at(normalize(v)));
        }
        return s;
    };

    // BFS over spans, keyed by atom-set
    std::unordered_set<AtomSet, AtomSetHash> seen;
    std::vector<AtomSet> fam;
    std::vector<std::pair<AtomSet, std::vector<Vec>>> work;
    AtomSet empty(na);
    fam.push_back(empty);
    seen.insert(empty);
    work.push_back({empty, {}});
    while (!work.empty()) {
        auto [atoms, basis] = work.back();
        work.pop_back();
        for (std::size_t p = 0; p < na; ++p) {
            if (atoms.test(p)) continue;
            auto b2 = basis;
            b2.push_back(points[p]);
            AtomSet s = span_atoms(b2);
            if (seen.insert(s).second) {
                fam.push_back(s);
                work.push_back({s, b2});
            }
        }
    }

    std::vector<std::string> names;
    for (const auto& v : points) {
        std::string n;
        for (int i = 0; i < d; ++i) {
            if (i) n += ":";
            n += std::to_string(v[i]);
        }
        names.push_back(n);
    }
    return ClosureSpace::trusted(GroundSet(std::move(names)), std::move(fam));
}

} // namespace

ClosureSpace generate(const GeneratorSpec& spec) {
    switch (spec.kind) {
        case GeneratorSpec::Kind::PowerSet: return gen_power_set(spec.n);
        case GeneratorSpec::Kind::MO: return gen_mo(spec.n);
        case GeneratorSpec::Kind::Projective: return gen_projective(spec.q, spec.d);
        case GeneratorSpec::Kind::FromFile: return load_lattice(spec.path);
    }
    throw Error("UnknownCheck", "bad generator kind");
}

OrthoMap mo_orthocomplementation(int n) {
    if (n < 2 || n % 2 != 0)
        throw Error("OddAtomCount",
                    "MO(" + std::to_string(n) + ") admits no orthocomplementation");
    OrthoMap o;
    o.atom_image.resize(n, AtomSet(n));
    for (int k = 0; k + 1 < n; k += 2) {
        AtomSet a(n), b(n);
        a.set(k + 1);
        b.set(k);
        o.atom_image[k] = a;     // p' = partner atom
        o.atom_image[k + 1] = b;
    }
    return o;
}

Verdict is_orthocomplementation(const ClosureSpace& l, const OrthoMap& o) {
    auto name = [&](const AtomSet& s) { return l.ground().names_of(s); };
    std::unordered_map<AtomSet, AtomSet, AtomSetHash> img;
    for (const auto& a : l.closed()) {
        AtomSet a1 = o.apply(l, a);
        if (!l.is_closed(a1))
            return Verdict::no({{"a", name(a)}, {"image", name(a1)}}, "image not closed");
        img[a] = a1;
    }
    for (const auto& a : l.closed()) {
        const AtomSet& a1 = img.at(a);
        if (img.at(a1) != a)
            return Verdict::no({{"a", name(a)}, {"a'", name(a1)}, {"a''", name(img.at(a1))}},
                               "not involutive");
        if (l.join(a, a1) != l.top())
            return Verdict::no({{"a", name(a)}, {"a'", name(a1)}}, "a∨a' ≠ 1");
        if (!(a & a1).empty())
            return Verdict::no({{"a", name(a)}, {"a'", name(a1)}}, "a∧a' ≠ 0");
    }
    for (const auto& a : l.closed())
        for (const auto& b : l.closed())
            if (a.is_subset_of(b) && !img.at(b).is_subset_of(img.at(a)))
                return Verdict::no({{"a", name(a)}, {"b", name(b)}}, "not order-reversing");
    return Verdict::yes({}, "involutive, order-reversing, complemented");
}

} // namespace wtp
