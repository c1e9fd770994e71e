// Command-line front end: generators, products, predicates, theorem runs,
// and exports over the lattice text format.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "wtp/catalog.hpp"
#include "wtp/harness.hpp"
#include "wtp/hilbert.hpp"
#include "wtp/latio.hpp"
#include "wtp/structure.hpp"
#include "wtp/universal.hpp"

namespace {

constexpr const char* kVersion = "wtp 1.0.0";

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw wtp::Error("IOError", "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string digest(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull; // FNV-1a
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// All file outputs go through a temp file + rename.
void write_atomic(const std::string& path, const std::string& data) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw wtp::Error("IOError", "cannot write " + tmp);
        out << data;
    }
    std::filesystem::rename(tmp, path);
}

struct Log {
    std::uint64_t seed = 0;
    std::size_t budget = wtp::kDefaultBudget;
    std::vector<std::pair<std::string, std::string>> inputs;

    void input(const std::string& path, const std::string& content) {
        inputs.emplace_back(path, digest(content));
    }
    void emit() const {
        std::cerr << kVersion << " seed=" << seed << " budget=" << budget;
        for (const auto& [p, d] : inputs) std::cerr << " input=" << p << ":" << d;
        std::cerr << "\n";
    }
};

wtp::ClosureSpace load(const std::string& path, Log& log) {
    std::string text = read_file(path);
    log.input(path, text);
    return wtp::from_lattice_text(text);
}

void print_doc(const nlohmann::ordered_json& j, const std::string& out) {
    std::string text = j.dump(2) + "\n";
    if (out.empty()) std::cout << text;
    else write_atomic(out, text);
}

wtp::AtomSet named_set(const wtp::GroundSet& g, const std::vector<std::string>& names) {
    return g.set_of(names);
}

// "i : j" rows, one per source atom.
wtp::AtomMap parse_atom_map(const wtp::GroundSet& src, const wtp::GroundSet& dst,
                            const std::string& text) {
    std::vector<std::size_t> image(src.size(), dst.size());
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw wtp::Error("ParseError", "expected 'atom : atom': " + line);
        auto strip = [](std::string s) {
            auto a = s.find_first_not_of(" \t\r");
            auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        std::string l = strip(line.substr(0, colon)), r = strip(line.substr(colon + 1));
        image[src.index(l)] = dst.index(r);
    }
    for (std::size_t i = 0; i < image.size(); ++i)
        if (image[i] >= dst.size())
            throw wtp::Error("ParseError", "no image for atom " + src.name(i));
    return wtp::AtomMap{std::move(image)};
}

int run(int argc, char** argv) {
    CLI::App app{"Exact toolkit for interval products of atomistic lattices"};
    app.require_subcommand(1);
    Log log;
    app.add_option("--seed", log.seed, "Seed for all randomized sampling")
        ->capture_default_str();
    app.add_option("--budget", log.budget, "Enumeration/search budget")
        ->capture_default_str();

    // --- gen ---
    auto* gen = app.add_subcommand("gen", "Generate a lattice file");
    std::string gen_kind, gen_path, gen_out;
    int gen_n = 0, gen_q = 0, gen_d = 0;
    gen->add_option("--kind", gen_kind, "power|mo|projective|file")->required();
    gen->add_option("--n", gen_n, "Atom count for power|mo");
    gen->add_option("--q", gen_q, "Field size for projective");
    gen->add_option("--d", gen_d, "Dimension for projective");
    gen->add_option("--path", gen_path, "Input for kind=file");
    gen->add_option("-o,--out", gen_out, "Output lattice file")->required();

    // --- product ---
    auto* product = app.add_subcommand("product", "Combine two lattice files");
    std::string prod_kind, prod_out;
    std::vector<std::string> prod_files;
    product->add_option("--kind", prod_kind, "sep|top|box|aerts|circ")->required();
    product->add_option("files", prod_files, "Factor lattice files")->expected(2);
    product->add_option("-o,--out", prod_out, "Output lattice file");

    // --- member / join ---
    auto* member = app.add_subcommand("member", "Test membership of an atom set");
    auto* join = app.add_subcommand("join", "Join (closure) of an atom set");
    std::string mj_file;
    std::vector<std::string> mj_top, mj_atoms, jn_top, jn_atoms;
    std::string jn_file;
    member->add_option("--lattice", mj_file, "Enumerated lattice file");
    member->add_option("--top", mj_top, "Two factor files: lazy top membership")
        ->expected(2);
    member->add_option("--atoms", mj_atoms, "Atom names")->required();
    join->add_option("--lattice", jn_file, "Enumerated lattice file");
    join->add_option("--top", jn_top, "Two factor files: lazy top join")->expected(2);
    join->add_option("--atoms", jn_atoms, "Atom names")->required();

    // --- check ---
    auto* check = app.add_subcommand("check", "Run a predicate, print a verdict document");
    std::string chk_what, chk_file, chk_out, chk_map;
    std::vector<std::string> chk_factors;
    int chk_n = 3;
    check->add_option("what", chk_what,
                      "covering|ortho|omod|central|mo|connected|weak|factor")
        ->required();
    check->add_option("file", chk_file, "Lattice file (all but factor)");
    check->add_option("--n", chk_n, "Minimal width for what=mo");
    check->add_option("--factors", chk_factors, "Two factor files for what=factor")
        ->expected(2);
    check->add_option("--map", chk_map, "Atom map table for what=factor");
    check->add_option("-o,--out", chk_out, "Verdict document output");

    // --- galois ---
    auto* galois = app.add_subcommand("galois", "Maps-into-the-dual correspondence");
    std::vector<std::string> gal_files;
    std::string gal_out;
    galois->add_option("files", gal_files, "Two lattice files")->expected(2);
    galois->add_option("-o,--out", gal_out, "Report output");

    // --- factor-bimorphism ---
    auto* fbim = app.add_subcommand("factor-bimorphism",
                                    "Factor a two-variable map through the top product");
    std::vector<std::string> fb_factors;
    std::string fb_target, fb_table, fb_out;
    fbim->add_option("--factors", fb_factors, "Two factor files")->expected(2);
    fbim->add_option("--target", fb_target, "Target lattice file")->required();
    fbim->add_option("--table", fb_table, "Atom-pair image table file")->required();
    fbim->add_option("-o,--out", fb_out, "Verdict document output");

    // --- hilbert ---
    auto* hil = app.add_subcommand("hilbert", "Exact inner-product-space instance");
    hil->require_subcommand(1);
    auto* hco = hil->add_subcommand("coatom", "Coatom element from a matrix");
    auto* hjo = hil->add_subcommand("join", "Join of product atoms");
    auto* hme = hil->add_subcommand("member", "Membership of a product point pair");
    auto* hwi = hil->add_subcommand("witnesses", "Strict-inclusion witness report");
    std::string h_matrix, h_atoms, h_p1, h_p2, h_out;
    std::size_t h_m = 2, h_n = 2;
    hco->add_option("--matrix", h_matrix, "Matrix grid file")->required();
    hco->add_option("-o,--out", h_out, "Output");
    hjo->add_option("--atoms", h_atoms, "File: one 'vec ; vec' pair per line")->required();
    hjo->add_option("--m", h_m);
    hjo->add_option("--n", h_n);
    hjo->add_option("-o,--out", h_out, "Output");
    hme->add_option("--matrix", h_matrix, "Matrix grid file")->required();
    hme->add_option("--p1", h_p1, "First point, scalars space-separated")->required();
    hme->add_option("--p2", h_p2, "Second point")->required();
    hwi->add_option("--m", h_m)->capture_default_str();
    hwi->add_option("--n", h_n)->capture_default_str();
    hwi->add_option("-o,--out", h_out, "Output");

    // --- theorem ---
    auto* thm = app.add_subcommand("theorem", "Run instance checks against fixtures");
    std::string thm_which = "all", thm_fixtures = "fixtures/expected.json", thm_out;
    thm->add_option("which", thm_which, "Check id, or 'all'");
    thm->add_option("--fixtures", thm_fixtures, "Expected-status table")
        ->capture_default_str();
    thm->add_option("-o,--out", thm_out, "Report output");

    // --- export-dot ---
    auto* dot = app.add_subcommand("export-dot", "Covering-relation Hasse diagram");
    std::string dot_file, dot_out;
    dot->add_option("file", dot_file, "Lattice file")->required();
    dot->add_option("-o,--out", dot_out, "DOT output")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    using namespace wtp;
    try {
        if (*gen) {
            GeneratorSpec spec = gen_kind == "power" ? GeneratorSpec::power_set(gen_n)
                                 : gen_kind == "mo"  ? GeneratorSpec::mo(gen_n)
                                 : gen_kind == "projective"
                                     ? GeneratorSpec::projective(gen_q, gen_d)
                                 : gen_kind == "file" ? GeneratorSpec::from_file(gen_path)
                                                      : throw Error("UsageError", gen_kind);
            log.emit();
            write_atomic(gen_out, to_lattice_text(generate(spec)));
        } else if (*product) {
            ClosureSpace l1 = load(prod_files[0], log), l2 = load(prod_files[1], log);
            log.emit();
            if (prod_kind == "sep" || prod_kind == "top" || prod_kind == "circ" ||
                prod_kind == "aerts") {
                ProductContext ctx({l1, l2});
                ClosureSpace out = [&] {
                    if (prod_kind == "sep") return separated_product(ctx, log.budget);
                    if (prod_kind == "top")
                        return LazyTopProduct(ctx).enumerate(log.budget);
                    if (prod_kind == "circ") return circ_product(l1, l2);
                    auto o1 = find_orthocomplementation(l1);
                    auto o2 = find_orthocomplementation(l2);
                    if (!o1 || !o2)
                        throw Error("NoOrthocomplementation",
                                    "a factor admits no orthocomplementation");
                    return aerts_product(ctx, {*o1, *o2}, log.budget).space;
                }();
                if (prod_out.empty()) std::cout << to_lattice_text(out);
                else write_atomic(prod_out, to_lattice_text(out));
            } else if (prod_kind == "box") {
                BoxResult r = box_product(l1, l2, log.budget);
                print_doc({{"elements", r.element_count}, {"iso", r.iso.to_json()}},
                          prod_out);
            } else {
                throw Error("UsageError", "unknown product kind " + prod_kind);
            }
        } else if (*member || *join) {
            bool is_member = bool(*member);
            const auto& file = is_member ? mj_file : jn_file;
            const auto& tops = is_member ? mj_top : jn_top;
            const auto& atoms = is_member ? mj_atoms : jn_atoms;
            if (!file.empty()) {
                ClosureSpace l = load(file, log);
                log.emit();
                AtomSet s = named_set(l.ground(), atoms);
                if (is_member) std::cout << (l.is_closed(s) ? "true" : "false") << "\n";
                else {
                    for (const auto& nm : l.ground().names_of(l.closure(s)))
                        std::cout << nm << "\n";
                }
            } else if (tops.size() == 2) {
                ProductContext ctx({load(tops[0], log), load(tops[1], log)});
                log.emit();
                AtomSet s = named_set(ctx.ground(), atoms);
                if (is_member)
                    std::cout << (top_membership(ctx, s) ? "true" : "false") << "\n";
                else {
                    for (const auto& nm : ctx.ground().names_of(top_join(ctx, s)))
                        std::cout << nm << "\n";
                }
            } else {
                throw Error("UsageError", "need --lattice or --top");
            }
        } else if (*check) {
            Verdict v;
            if (chk_what == "factor") {
                if (chk_factors.size() != 2 || chk_map.empty())
                    throw Error("UsageError", "factor needs --factors and --map");
                ProductContext ctx({load(chk_factors[0], log), load(chk_factors[1], log)});
                ClosureSpace l = separated_product(ctx, log.budget);
                std::string table = read_file(chk_map);
                log.input(chk_map, table);
                log.emit();
                AtomMap u = parse_atom_map(ctx.ground(), ctx.ground(), table);
                Factorization f = factor_endomorphism(ctx, l, u);
                nlohmann::ordered_json per;
                for (std::size_t i = 0; i < f.f.size(); ++i) per.push_back(f.f[i]);
                print_doc({{"status", "Holds"}, {"factor_permutation", per}}, chk_out);
                return 0;
            }
            ClosureSpace l = load(chk_file, log);
            log.emit();
            if (chk_what == "covering") v = has_covering_property(l);
            else if (chk_what == "ortho") {
                auto o = find_orthocomplementation(l, log.budget == kDefaultBudget
                                                          ? 50000000
                                                          : log.budget);
                if (o) {
                    nlohmann::ordered_json im;
                    for (std::size_t p = 0; p < l.atom_count(); ++p)
                        im[l.ground().name(p)] = l.ground().names_of(o->atom_image[p]);
                    v = Verdict::yes({{"atom_images", im}}, "orthocomplementation found");
                } else {
                    v = Verdict::no({}, "search exhausted: none exists");
                }
            } else if (chk_what == "omod") {
                auto o = find_orthocomplementation(l, log.budget == kDefaultBudget
                                                          ? 50000000
                                                          : log.budget);
                if (!o) v = Verdict::no({}, "no orthocomplementation to test");
                else v = is_orthomodular(l, *o);
            } else if (chk_what == "central") {
                CentralDecomposition d = central_elements(l);
                nlohmann::ordered_json z;
                for (const auto& c : d.center) z.push_back(l.ground().names_of(c));
                v = central_reconstruction(l, d);
                v.witness["center"] = z;
            } else if (chk_what == "mo") v = contains_mo(l, chk_n);
            else if (chk_what == "connected") v = is_connected(l);
            else if (chk_what == "weak") v = is_weakly_connected(l);
            else throw Error("UsageError", "unknown predicate " + chk_what);
            print_doc(v.to_json(), chk_out);
        } else if (*galois) {
            ClosureSpace l1 = load(gal_files[0], log), l2 = load(gal_files[1], log);
            log.emit();
            GaloisReport r = galois_correspondence(l1, l2, log.seed, log.budget);
            print_doc({{"map_count", r.map_count},
                       {"top_count", r.top_count},
                       {"verdict", r.verdict.to_json()}},
                      gal_out);
        } else if (*fbim) {
            ProductContext ctx({load(fb_factors[0], log), load(fb_factors[1], log)});
            ClosureSpace target = load(fb_target, log);
            std::string table = read_file(fb_table);
            log.input(fb_table, table);
            log.emit();
            BimorphismTable g = parse_map_table(ctx, target, table);
            print_doc(factor_bimorphism(ctx, target, g).to_json(), fb_out);
        } else if (*hil) {
            auto subspace_doc = [](const Subspace& v) {
                nlohmann::ordered_json rows = nlohmann::ordered_json::array();
                for (const auto& r : v.basis()) {
                    std::string row;
                    for (const auto& x : r) row += (row.empty() ? "" : " ") + x.str();
                    rows.push_back(row);
                }
                return nlohmann::ordered_json{{"dim", v.dim()}, {"basis", rows}};
            };
            if (*hco) {
                std::string text = read_file(h_matrix);
                log.input(h_matrix, text);
                log.emit();
                DCircElement e = coatom_from_matrix(parse_matrix(text));
                print_doc({{"m", e.m}, {"n", e.n}, {"subspace", subspace_doc(e.v)}},
                          h_out);
            } else if (*hjo) {
                std::string text = read_file(h_atoms);
                log.input(h_atoms, text);
                log.emit();
                std::vector<std::pair<ProjPoint, ProjPoint>> atoms;
                std::istringstream in(text);
                std::string line;
                while (std::getline(in, line)) {
                    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
                    auto semi = line.find(';');
                    if (semi == std::string::npos)
                        throw Error("ParseError", "expected 'vec ; vec': " + line);
                    atoms.emplace_back(ProjPoint(parse_vector(line.substr(0, semi))),
                                       ProjPoint(parse_vector(line.substr(semi + 1))));
                }
                DCircElement e = dcirc_join(h_m, h_n, atoms);
                print_doc({{"m", e.m},
                           {"n", e.n},
                           {"canonical", e.canonical},
                           {"subspace", subspace_doc(e.v)}},
                          h_out);
            } else if (*hme) {
                std::string text = read_file(h_matrix);
                log.input(h_matrix, text);
                log.emit();
                DCircElement e = coatom_from_matrix(parse_matrix(text));
                ProjPoint p1(parse_vector(h_p1)), p2(parse_vector(h_p2));
                std::cout << (wtp::member(e, p1, p2) ? "true" : "false") << "\n";
            } else {
                log.emit();
                StrictInclusionReport r = strict_inclusion_witnesses(h_m, h_n, log.seed);
                print_doc({{"not_separated", r.not_separated_verdict.to_json()},
                           {"fourth_atom",
                            {r.fourth_atom.first.str(), r.fourth_atom.second.str()}},
                           {"verdict", r.verdict.to_json()}},
                          h_out);
            }
        } else if (*thm) {
            std::string fx_text = read_file(thm_fixtures);
            log.input(thm_fixtures, fx_text);
            log.emit();
            nlohmann::ordered_json fx = load_fixtures(thm_fixtures);
            std::vector<TheoremResult> results;
            if (thm_which == "all") results = run_all(log.seed, fx);
            else results.push_back(run_theorem(thm_which, log.seed, fx));
            nlohmann::ordered_json table = nlohmann::ordered_json::array();
            bool all_ok = true;
            for (const auto& r : results) {
                std::string got = r.verdict.holds()   ? "Holds"
                                  : r.verdict.fails() ? "Fails"
                                                      : "Unknown";
                table.push_back({{"id", r.id},
                                 {"status", got},
                                 {"expected", r.expected},
                                 {"as_expected", r.as_expected},
                                 {"note", r.verdict.note}});
                std::cout << r.id << ": " << got << " (expected " << r.expected
                          << (r.as_expected ? ", ok" : ", MISMATCH") << ")\n";
                all_ok = all_ok && r.as_expected;
            }
            if (!thm_out.empty())
                write_atomic(thm_out, nlohmann::ordered_json(table).dump(2) + "\n");
            return all_ok ? 0 : 1;
        } else if (*dot) {
            ClosureSpace l = load(dot_file, log);
            log.emit();
            write_atomic(dot_out, to_dot(l));
        }
        return 0;
    } catch (const wtp::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const wtp::Error& e) {
        if (e.code == "UsageError" || e.code == "ParseError" || e.code == "IOError") {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
