// Acceptance gate: one pass/fail line per criterion, deterministic with
// seed 0.  Exit code is the number of failing criteria.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "wtp/catalog.hpp"
#include "wtp/harness.hpp"
#include "wtp/universal.hpp"

using namespace wtp;

namespace {

constexpr std::uint64_t kSeed = 0;

bool theorem_ok(const std::string& id, const nlohmann::ordered_json& fx) {
    TheoremResult r = run_theorem(id, kSeed, fx);
    return r.as_expected && verify_witness(r, kSeed, fx).holds();
}

bool correspondences_ok(const nlohmann::ordered_json& fx) {
    if (!theorem_ok("T-BOX-ISO", fx)) return false;
    ClosureSpace p2 = generate(GeneratorSpec::power_set(2));
    ClosureSpace m3 = generate(GeneratorSpec::mo(3));
    GaloisReport rep = galois_correspondence(p2, m3, kSeed);
    if (!(rep.verdict.holds() && rep.map_count == rep.top_count)) return false;

    ProductContext ctx({m3, m3});
    ClosureSpace sep = separated_product(ctx);
    BimorphismTable canonical, constant, projection;
    canonical.g.assign(3, std::vector<AtomSet>(3, AtomSet(ctx.bits())));
    constant.g.assign(3, std::vector<AtomSet>(3, AtomSet(3)));
    projection.g.assign(3, std::vector<AtomSet>(3, AtomSet(3)));
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) {
            canonical.g[a][b] = sep.singleton(ctx.encode({a, b}));
            projection.g[a][b] = m3.singleton(b);
        }
    return factor_bimorphism(ctx, sep, canonical).holds() &&
           factor_bimorphism(ctx, m3, constant).holds() &&
           factor_bimorphism(ctx, m3, projection).holds();
}

} // namespace

int main() {
    nlohmann::ordered_json fx = load_fixtures(WTP_FIXTURES_PATH);
    struct Criterion {
        int number;
        std::string text;
        std::function<bool()> run;
    };
    std::vector<Criterion> criteria = {
        {1, "biorthogonal product equals the bottom product on MO4 x MO4",
         [&] { return theorem_ok("T-AERTS-EQ", fx); }},
        {2, "a power-set factor collapses the interval (2^3 x MO3, 2^2 x 2^2)",
         [&] { return theorem_ok("T-SINGLETON", fx); }},
        {3, "skew triple splits the interval on MO3 x MO3",
         [&] { return theorem_ok("T-MO3-SPLIT", fx); }},
        {4, "top product covering: fails on MO4 x MO4 chain, holds on 2^3 x MO4 scan",
         [&] { return theorem_ok("T-TOP-COVER", fx); }},
        {5, "bottom product on MO4 x MO4 fails covering and orthomodularity",
         [&] { return theorem_ok("T-AERTS-COVER", fx); }},
        {6, "middle product validates, has the covering property, and is proper",
         [&] { return theorem_ok("T-CIRC-UNIQUE", fx); }},
        {7, "exactly the bottom product member admits an orthocomplementation",
         [&] { return theorem_ok("T-ORTHO-MAIN", fx); }},
        {8, "every automorphism of the MO3 x MO3 bottom product factors; order 72",
         [&] { return theorem_ok("T-FACTOR", fx); }},
        {9, "central elements are products of factor central elements",
         [&] { return theorem_ok("T-CENTRAL-LIFT", fx); }},
        {10, "box isomorphism, dual-map correspondence, bimorphism factorization",
         [&] { return correspondences_ok(fx); }},
        {11, "exact inner-product-space instance checks at m = n = 2",
         [&] { return theorem_ok("T-DCIRC", fx); }},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        std::string error;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                        .count();
        std::printf("criterion %2d: %s  %s (%.2fs)%s%s\n", c.number,
                    ok ? "PASS" : "FAIL", c.text.c_str(), dt,
                    error.empty() ? "" : " error: ", error.c_str());
        if (!ok) ++failures;
    }
    return failures;
}
