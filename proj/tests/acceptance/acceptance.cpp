// Acceptance checks. Prints one PASS/FAIL line per criterion; pass criterion
// numbers as arguments to run a subset. Exit status 1 if anything failed.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "defco/approximation.hpp"
#include "defco/decomposition.hpp"
#include "defco/exact_dp.hpp"
#include "defco/gadgets.hpp"
#include "defco/oracle.hpp"
#include "defco/structural.hpp"
#include "reference.hpp"

using namespace defco;
using namespace defco::testing;

namespace {

// Collects the first few problems; a criterion passes when there are none.
struct Tally {
    long checks = 0;
    long failures = 0;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (ok)
            return;
        ++failures;
        if (notes.size() < 5)
            notes.push_back(what);
    }
};

std::string describe(const std::string& name, int colors, int d) {
    return name + " colors=" + std::to_string(colors) + " deficiency=" + std::to_string(d);
}

std::vector<CorpusGraph> main_corpus() { return random_corpus(540, 1, 10, 20240); }

bool small_eps_ok(const ApproxOutcome& a, int d) { return a.budget == d; }

Tally oracle_equivalence() {
    Tally t;
    for (const auto& cg : main_corpus()) {
        auto nice = make_nice(cg.graph, heuristic_decomposition(cg.graph));
        for (int colors = 1; colors <= 3; ++colors)
            for (int d = 0; d <= 2; ++d) {
                auto want = brute_force_decide(cg.graph, colors, d);
                auto got = solve_exact(cg.graph, nice, colors, d);
                t.expect(got.has_value() == want.has_value(), "decision " + describe(cg.name, colors, d));
                if (got)
                    t.expect(verify(cg.graph, *got, colors, d).valid, "certificate " + describe(cg.name, colors, d));
            }
    }
    return t;
}

Tally table_semantics() {
    Tally t;
    for (const auto& cg : random_corpus(100, 1, 7, 777)) {
        auto nice = make_nice(cg.graph, heuristic_decomposition(cg.graph));
        for (int colors = 1; colors <= 3; ++colors)
            for (int d = 0; d <= 2; ++d) {
                ExactDp dp(cg.graph, nice, colors, d);
                dp.run();
                for (int node = 0; node < static_cast<int>(nice.nodes.size()); ++node) {
                    std::set<PlainSignature> got;
                    for (const auto& e : dp.table(node).entries()) {
                        PlainSignature s;
                        for (const auto& slot : e.signature)
                            s.emplace_back(slot.color, slot.value);
                        got.insert(s);
                    }
                    t.expect(got == realizable_signatures(cg.graph, nice, node, colors, d),
                             "node " + std::to_string(node) + " " + describe(cg.name, colors, d));
                }
            }
    }
    return t;
}

Tally approximation_soundness() {
    Tally t;
    for (const auto& cg : main_corpus()) {
        auto td = heuristic_decomposition(cg.graph);
        for (int colors = 1; colors <= 3; ++colors)
            for (int d = 0; d <= 2; ++d) {
                const bool yes = brute_force_decide(cg.graph, colors, d).has_value();
                const std::string tag = describe(cg.name, colors, d);
                for (double eps : {0.1, 0.5, 1.0}) {
                    auto out = solve_approx_deficiency(cg.graph, td, colors, d, eps);
                    const int budget = static_cast<int>(std::floor((1 + eps) * d + 1e-9));
                    t.expect(out.budget == budget, "budget " + tag);
                    t.expect(std::pow(1 + out.delta, out.balanced_height) <= 1 + eps + 1e-12, "height error " + tag);
                    if (yes)
                        t.expect(out.coloring.has_value(), "false no " + tag);
                    if (out.coloring)
                        t.expect(verify(cg.graph, *out.coloring, colors, budget).valid, "over budget " + tag);
                }
                const double tiny = 0.99 / (d + 1);
                auto exact_like = solve_approx_deficiency(cg.graph, td, colors, d, tiny);
                t.expect(small_eps_ok(exact_like, d), "small eps budget " + tag);
                t.expect(exact_like.coloring.has_value() == yes, "small eps decision " + tag);
            }
    }
    return t;
}

Tally halving() {
    Tally t;
    static const double probs[] = {0.02, 0.1, 0.3, 0.6};
    for (int i = 0; i < 1000; ++i) {
        const int n = 1 + (i * 37) % 200;
        Graph g = random_graph(n, probs[i % 4], 5000 + i);
        auto h = halve_local_search(g);
        auto prof = deficiency_profile(g, h.coloring);
        bool ok = true;
        for (int v = 0; v < n; ++v)
            ok = ok && prof[v] <= g.degree(v) / 2 && h.coloring[v] >= 1 && h.coloring[v] <= 2;
        t.expect(ok, "bound on graph " + std::to_string(i));
        t.expect(h.flips <= static_cast<std::int64_t>(g.num_edges()), "flips on graph " + std::to_string(i));
    }
    return t;
}

Tally double_colors() {
    Tally t;
    for (const auto& cg : main_corpus()) {
        auto td = heuristic_decomposition(cg.graph);
        for (int colors = 1; colors <= 3; ++colors)
            for (int d = 0; d <= 2; ++d) {
                const std::string tag = describe(cg.name, colors, d);
                const bool yes = brute_force_decide(cg.graph, colors, d).has_value();
                auto out = solve_double_colors(cg.graph, td, colors, d);
                t.expect(out.coloring.has_value() == yes, "decision " + tag);
                if (out.coloring) {
                    t.expect(out.coloring->max_color() <= 2 * colors, "colors " + tag);
                    t.expect(verify(cg.graph, *out.coloring, 2 * colors, d).valid, "verify " + tag);
                }
            }
        for (int d = 0; d <= 2; ++d) {
            auto m = minimize_colors(cg.graph, td, d);
            const int best = min_colors(cg.graph, d);
            t.expect(m.coloring.max_color() <= 2 * best, "ratio " + describe(cg.name, best, d));
            t.expect(verify(cg.graph, m.coloring, 2 * best, d).valid, "ratio verify " + cg.name);
        }
    }
    return t;
}

Tally structural() {
    Tally t;
    for (const auto& cg : main_corpus())
        for (int colors = 1; colors <= 3; ++colors)
            for (int d = 0; d <= 2; ++d) {
                const std::string tag = describe(cg.name, colors, d);
                const bool yes = brute_force_decide(cg.graph, colors, d).has_value();
                auto vc = solve_by_vc(cg.graph, colors, d);
                t.expect((vc.verdict == Verdict::yes) == yes, "vc " + tag);
                if (vc.coloring)
                    t.expect(verify(cg.graph, *vc.coloring, colors, d).valid, "vc verify " + tag);
                auto fvs = solve_by_fvs(cg.graph, colors, d);
                if (colors == 2) {
                    t.expect(fvs.verdict == Verdict::unsupported, "fvs two colors " + tag);
                } else {
                    t.expect((fvs.verdict == Verdict::yes) == yes, "fvs " + tag);
                    if (fvs.coloring)
                        t.expect(verify(cg.graph, *fvs.coloring, colors, d).valid, "fvs verify " + tag);
                }
                auto plus = approx_plus_one_fvs(cg.graph, colors, d);
                if (yes)
                    t.expect(plus.coloring.has_value(), "plus-one false no " + tag);
                if (plus.coloring)
                    t.expect(verify(cg.graph, *plus.coloring, colors + 1, d).valid, "plus-one verify " + tag);
            }
    return t;
}

Tally gadget_forcing() {
    Tally t;
    for (int i = 1; i <= 4; ++i)
        for (int j = 0; j <= 3; ++j) {
            auto tower = build_tower(i, j);
            const std::string tag = "T(" + std::to_string(i) + "," + std::to_string(j) + ")";
            t.expect(tower.graph.num_vertices() == ref_tower_size(i, j), "size " + tag);
            t.expect(verify(tower.graph, Coloring{tower.level}, i, 0).valid, "level coloring " + tag);
            if (i >= 2 && i <= 3 && j <= 2)
                t.expect(!brute_force_decide(tower.graph, i - 1, j), "not colorable " + tag);
        }
    for (int c = 2; c <= 3; ++c)
        for (int d = 0; d <= 2; ++d) {
            Graph host(2);
            auto rec = attach_equality(host, 0, 1, c, d);
            for (int a = 1; a <= c; ++a)
                for (int b = 1; b <= c; ++b)
                    t.expect(endpoint_assignment_extends(host, {0, 1}, {a, b}, c, d) == (a == b),
                             "equality " + describe("", c, d));
            Coloring col{std::vector<int>(host.num_vertices(), 0)};
            col.color[0] = col.color[1] = c;
            extend_gadgets({rec}, c, col);
            t.expect(verify(host, col, c, d).valid, "equality extension " + describe("", c, d));
        }
    for (int d = 0; d <= 1; ++d) {
        Graph host(3);
        auto rec = attach_palette(host, 0, 1, 2, 3, d);
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= 3; ++b)
                for (int c = 1; c <= 3; ++c) {
                    const bool repeated = a == b || b == c || a == c;
                    t.expect(endpoint_assignment_extends(host, {0, 1, 2}, {a, b, c}, 3, d) == repeated,
                             "palette " + describe("", 3, d));
                    if (!repeated)
                        continue;
                    Coloring col{std::vector<int>(host.num_vertices(), 0)};
                    col.color[0] = a;
                    col.color[1] = b;
                    col.color[2] = c;
                    extend_gadgets({rec}, 3, col);
                    t.expect(verify(host, col, 3, d).valid, "palette extension " + describe("", 3, d));
                }
    }
    return t;
}

Tally reductions() {
    Tally t;
    int witnessed[2] = {0, 0};
    for (int k = 2; k <= 3; ++k)
        for (int n = 2; n <= 3; ++n)
            for (std::uint64_t seed = 1; seed <= 60; ++seed) {
                auto mcc = random_mcc(k, n, 0.45, seed, true);
                const int m = static_cast<int>(mcc.graph.num_edges());
                const int d = m - k * (k - 1) / 2;
                for (auto c : {Construction::td, Construction::pw}) {
                    const int need = c == Construction::td ? std::max(n, k) : std::max(n, 3);
                    if (d < need || d > need + 2)
                        continue;
                    for (int colors = 2; colors <= 3; ++colors) {
                        if (predict_size(mcc, colors, c) > 300000)
                            continue;
                        auto gen = build_hardness(mcc, colors, c);
                        const std::string tag = to_string(c) + " k=" + std::to_string(k) + " n=" +
                                                std::to_string(n) + " seed=" + std::to_string(seed) +
                                                " colors=" + std::to_string(colors);
                        t.expect(gen.instance.deficiency == d, "deficiency " + tag);
                        auto census = c == Construction::td ? census_td(k, n, m, colors) : census_pw(k, n, m, colors);
                        t.expect(role_census(gen.instance.graph) == census, "census " + tag);
                        auto col = witness_coloring(gen, *mcc.planted);
                        t.expect(verify(gen.instance, col).valid, "witness " + tag);
                        ++witnessed[c == Construction::td ? 0 : 1];
                        if (c == Construction::pw) {
                            const auto cls = mcc.class_of();
                            const std::int64_t pal = colors >= 3 ? ref_palette_size(colors, d) : 0;
                            bool degrees = true;
                            for (int i = 1; i <= k; ++i)
                                for (int j = 1; j <= 2 * m; ++j) {
                                    const auto& part = gen.layout.edges[(j - 1) / 2];
                                    const bool touched = cls[part.mcc_u] == i || cls[part.mcc_v] == i;
                                    const std::int64_t want = 2 * (j > 1) + 2 * (j < 2 * m) + touched + pal;
                                    for (int x : gen.layout.grid[i - 1][j - 1])
                                        degrees = degrees && gen.instance.graph.degree(x) == want;
                                }
                            t.expect(degrees, "grid degrees " + tag);
                        } else if (colors == 2) {
                            t.expect(leaves_forest(gen.instance.graph, gen.certificate), "certificate " + tag);
                            t.expect(static_cast<int>(gen.certificate.size()) <= 2 * k * k + 2, "certificate size " + tag);
                        }
                    }
                }
            }
    t.expect(witnessed[0] >= 12 && witnessed[1] >= 12, "too few instances witnessed");
    return t;
}

Tally balancing() {
    Tally t;
    auto check = [&](const Graph& g, const TreeDecomposition& td, const std::string& tag) {
        auto b = balance(g, td);
        const double bound = kBalanceHeightConstant * (1 + std::log2(std::max(1, g.num_vertices())));
        t.expect(validate(g, b).ok(), "valid " + tag);
        t.expect(b.width() <= 3 * td.width() + 2, "width " + tag);
        t.expect(b.height() <= bound, "height " + tag);
    };
    t.expect(kBalanceHeightConstant <= 10, "constant");
    Graph p = path(1000);
    TreeDecomposition pd;
    for (int i = 0; i + 1 < 1000; ++i) {
        pd.bags.push_back({i, i + 1});
        pd.parent.push_back(i - 1);
    }
    check(p, pd, "P1000");
    for (const auto& cg : random_corpus(99, 1, 60, 9090))
        check(cg.graph, heuristic_decomposition(cg.graph), cg.name);
    return t;
}

Tally cross_solver() {
    Tally t;
    for (const auto& cg : main_corpus()) {
        auto td = heuristic_decomposition(cg.graph);
        auto nice = make_nice(cg.graph, td);
        for (int colors = 1; colors <= 3; ++colors)
            for (int d = 0; d <= 2; ++d) {
                const bool oracle = brute_force_decide(cg.graph, colors, d).has_value();
                std::vector<bool> answers{
                    solve_exact(cg.graph, nice, colors, d).has_value(),
                    solve_approx_deficiency(cg.graph, td, colors, d, 0.99 / (d + 1)).coloring.has_value(),
                    solve_by_vc(cg.graph, colors, d).verdict == Verdict::yes,
                };
                if (colors != 2)
                    answers.push_back(solve_by_fvs(cg.graph, colors, d).verdict == Verdict::yes);
                bool agree = true;
                for (bool a : answers)
                    agree = agree && a == oracle;
                t.expect(agree, describe(cg.name, colors, d));
            }
    }
    return t;
}

struct Criterion {
    int id;
    const char* title;
    std::function<Tally()> run;
};

} // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> all{
        {1, "exact dp matches the oracle", oracle_equivalence},
        {2, "dp tables equal realizable signatures", table_semantics},
        {3, "deficiency approximation is sound", approximation_soundness},
        {4, "halving local search bound", halving},
        {5, "color 2-approximation", double_colors},
        {6, "fvs / vc solvers and the +1 approximation", structural},
        {7, "tower, equality and palette forcing", gadget_forcing},
        {8, "reductions: witnesses and censuses", reductions},
        {9, "balanced decompositions", balancing},
        {10, "solvers agree with each other", cross_solver},
    };
    std::set<int> wanted;
    for (int i = 1; i < argc; ++i) {
        std::istringstream in(argv[i]);
        int id = 0;
        if (!(in >> id) || id < 1 || id > static_cast<int>(all.size())) {
            std::fprintf(stderr, "usage: %s [criterion 1-10 ...]\n", argv[0]);
            return 2;
        }
        wanted.insert(id);
    }
    bool ok = true;
    for (const auto& c : all) {
        if (!wanted.empty() && !wanted.count(c.id))
            continue;
        const auto start = std::chrono::steady_clock::now();
        Tally t;
        std::string crash;
        try {
            t = c.run();
        } catch (const std::exception& e) {
            crash = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool pass = crash.empty() && t.failures == 0;
        ok = ok && pass;
        std::printf("%s criterion %d: %s (%ld checks, %ld failed, %.1fs)\n", pass ? "PASS" : "FAIL", c.id, c.title,
                    t.checks, t.failures, secs);
        if (!crash.empty())
            std::printf("    exception: %s\n", crash.c_str());
        for (const auto& note : t.notes)
            std::printf("    %s\n", note.c_str());
        std::fflush(stdout);
    }
    return ok ? 0 : 1;
}
