#include "wtp/latio.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace wtp {

using nlohmann::ordered_json;

std::string to_lattice_text(const ClosureSpace& l) {
    ordered_json doc;
    doc["atoms"] = l.ground().atoms();
    std::vector<std::vector<std::string>> sets;
    sets.reserve(l.closed_count());
    for (const auto& c : l.closed()) {
        auto names = l.ground().names_of(c);
        std::sort(names.begin(), names.end());
        sets.push_back(std::move(names));
    }
    std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    doc["closed"] = sets;
    return doc.dump(2) + "\n";
}

ClosureSpace from_lattice_text(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw Error("ParseError", e.what());
    }
    if (!doc.contains("atoms") || !doc.contains("closed"))
        throw Error("ParseError", "lattice document needs `atoms` and `closed` fields");
    std::vector<std::string> atoms = doc["atoms"].get<std::vector<std::string>>();
    std::vector<std::vector<std::string>> family =
        doc["closed"].get<std::vector<std::vector<std::string>>>();
    return ClosureSpace::validate(std::move(atoms), std::move(family));
}

ClosureSpace load_lattice(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("IoError", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_lattice_text(ss.str());
}

void save_lattice(const ClosureSpace& l, const std::string& path) {
    std::string text = to_lattice_text(l);
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw Error("IoError", "cannot write " + tmp);
        out << text;
    }
    std::rename(tmp.c_str(), path.c_str());
}

std::string to_dot(const ClosureSpace& l) {
    std::ostringstream out;
    out << "digraph hasse {\n  rankdir=BT;\n";
    auto label = [&](const AtomSet& s) {
        if (s.empty()) return std::string("{}");
        auto names = l.ground().names_of(s);
        std::sort(names.begin(), names.end());
        std::string t = "{";
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (i) t += ",";
            t += names[i];
        }
        return t + "}";
    };
    const auto& fam = l.closed();
    for (std::size_t i = 0; i < fam.size(); ++i)
        out << "  n" << i << " [label=\"" << label(fam[i]) << "\"];\n";
    for (std::size_t i = 0; i < fam.size(); ++i)
        for (std::size_t j = 0; j < fam.size(); ++j)
            if (l.covers(fam[j], fam[i]))
                out << "  n" << i << " -> n" << j << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace wtp
