#include "doctest.h"

#include <cmath>

#include "corpus.hpp"
#include "defco/approximation.hpp"
#include "defco/errors.hpp"
#include "defco/oracle.hpp"

using namespace defco;
using namespace defco::testing;

namespace {

int max_same(const Graph& g, const Coloring& c) {
    int worst = 0;
    for (int v : deficiency_profile(g, c))
        worst = std::max(worst, v);
    return worst;
}

// K2 plus `pages` vertices adjacent to both; width 2, degrees pages+1.
Graph book(int pages) {
    Graph g(pages + 2);
    g.add_edge(0, 1);
    for (int v = 2; v < pages + 2; ++v) {
        g.add_edge(0, v);
        g.add_edge(1, v);
    }
    return g;
}

} // namespace

TEST_CASE("value set: zero deficiency") {
    auto s = build_value_set(0, 0.5, 10);
    CHECK(s.size() == 1);
    CHECK(s.value(0) == 0);
    CHECK(s.round_up(0) == 0);
    CHECK_FALSE(s.round_up(1));
}

TEST_CASE("value set: powers of two") {
    auto s = build_value_set_with_delta(4, 0.1, 1.0);
    CHECK(s.cap == 4);
    REQUIRE(s.size() == 4);
    CHECK(s.value(0) == 0);
    CHECK(s.value(1) == 1);
    CHECK(s.value(2) == 2);
    CHECK(s.value(3) == 4);
    CHECK(s.round_up(0) == 0);
    CHECK(s.round_up(1) == 1);
    REQUIRE(s.round_up(3));
    CHECK(s.value(*s.round_up(3)) == 4);
    CHECK_FALSE(s.round_up(5));
}

TEST_CASE("value set: deficiency 10, eps 0.5, n 16") {
    CHECK(default_delta(0.5, 16) == doctest::Approx(0.03125));
    auto s = build_value_set(10, 0.5, 16);
    CHECK(s.delta == doctest::Approx(0.03125));
    int largest = 0;
    double x = 1;
    while (x * 1.03125 <= 15)
        x *= 1.03125, ++largest;
    CHECK(s.size() == 1 + largest + 1);
    CHECK(s.cap == 15);
    for (int i = 1; i < s.size(); ++i)
        CHECK(s.value(i) >= s.value(i - 1));
    CHECK(s.value(s.size() - 1) <= 15);
}

TEST_CASE("value set: delta clamp and errors") {
    CHECK(default_delta(8.0, 2) == doctest::Approx(1.0));
    CHECK(default_delta(1.0, 3) == doctest::Approx(0.25));
    CHECK_THROWS_AS(build_value_set(3, 0.0, 10), PreconditionError);
    CHECK_THROWS_AS(build_value_set(3, -1.0, 10), PreconditionError);
}

TEST_CASE("round_up is the smallest member at least x") {
    for (double eps : {0.1, 0.5, 2.0})
        for (int d : {1, 5, 30, 200}) {
            auto s = build_value_set(d, eps, 50);
            for (std::int64_t x = 0; x <= s.cap + 3; ++x) {
                auto r = s.round_up(x);
                if (x > s.value(s.size() - 1)) {
                    CHECK_FALSE(r);
                    continue;
                }
                CHECK(s.value(s.size() - 1) <= s.cap);
                REQUIRE(r);
                CHECK(s.value(*r) >= x);
                if (*r > 0)
                    CHECK(s.value(*r - 1) < x);
            }
        }
}

TEST_CASE("approx: K4 with two colors") {
    Graph k4 = complete(4);
    for (double eps : {0.1, 0.5, 1.0, 3.0}) {
        auto out = solve_approx_deficiency(k4, heuristic_decomposition(k4), 2, 1, eps);
        REQUIRE(out.coloring);
        CHECK(out.budget == static_cast<int>(std::floor((1 + eps) * 1 + 1e-9)));
        CHECK(verify(k4, *out.coloring, 2, out.budget).valid);
    }
}

TEST_CASE("approx: one-sided error and budget soundness on the corpus") {
    for (const auto& cg : random_corpus(200, 1, 10, 31337)) {
        auto td = heuristic_decomposition(cg.graph);
        for (int colors = 2; colors <= 3; ++colors)
            for (int d = 0; d <= 3; ++d)
                for (double eps : {0.1, 0.5, 1.0}) {
                    CAPTURE(cg.name);
                    CAPTURE(colors);
                    CAPTURE(d);
                    CAPTURE(eps);
                    auto out = solve_approx_deficiency(cg.graph, td, colors, d, eps);
                    CHECK(std::pow(1 + out.delta, out.balanced_height) <= 1 + eps + 1e-12);
                    CHECK(std::pow(1 + out.delta, out.rounding_depth) <= 1 + eps + 1e-12);
                    if (out.coloring)
                        CHECK(verify(cg.graph, *out.coloring, colors, out.budget).valid);
                    else
                        CHECK_FALSE(brute_force_decide(cg.graph, colors, d));
                    if (brute_force_decide(cg.graph, colors, d))
                        CHECK(out.coloring.has_value());
                }
    }
}

TEST_CASE("approx: tiny eps gives the exact decision") {
    for (const auto& cg : random_corpus(120, 1, 10, 4711)) {
        auto td = heuristic_decomposition(cg.graph);
        for (int d = 1; d <= 3; ++d) {
            auto out = solve_approx_deficiency(cg.graph, td, 2, d, 0.9 / d);
            CHECK(out.budget == d);
            CHECK(out.coloring.has_value() == brute_force_decide(cg.graph, 2, d).has_value());
        }
    }
}

TEST_CASE("approx: within (1+eps) of the minimum deficiency") {
    for (const auto& cg : random_corpus(80, 2, 10, 606)) {
        auto td = heuristic_decomposition(cg.graph);
        int best = min_deficiency(cg.graph, 2);
        for (double eps : {0.05, 0.25}) {
            auto out = solve_approx_deficiency(cg.graph, td, 2, best, eps);
            REQUIRE(out.coloring);
            CHECK(max_same(cg.graph, *out.coloring) <= (1 + eps) * best + 1e-9);
        }
    }
}

TEST_CASE("approx: larger sparse graphs") {
    for (int n = 30; n <= 60; n += 5) {
        Graph g = random_graph(n, 0.07, n);
        auto td = heuristic_decomposition(g);
        if (td.width() > 5)
            continue;
        auto out = solve_approx_deficiency(g, td, 2, 2, 0.5);
        if (out.coloring)
            CHECK(verify(g, *out.coloring, 2, out.budget).valid);
    }
    Graph b = book(60);
    auto out = solve_approx_deficiency(b, heuristic_decomposition(b), 2, 30, 0.2);
    REQUIRE(out.coloring);
    CHECK(verify(b, *out.coloring, 2, out.budget).valid);
}

TEST_CASE("approx rejects an invalid decomposition") {
    TreeDecomposition bad;
    bad.bags = {{0}};
    bad.parent = {-1};
    CHECK_THROWS_AS(solve_approx_deficiency(path(2), bad, 2, 1, 0.5), InputError);
}

TEST_CASE("halving examples") {
    auto e = halve_local_search(edgeless(6));
    CHECK(e.flips == 0);
    for (int c : e.coloring.color)
        CHECK(c == 1);

    Graph k4 = complete(4);
    auto h = halve_local_search(k4);
    for (int v : deficiency_profile(k4, h.coloring))
        CHECK(v <= 1);
}

TEST_CASE("halving bound on the corpus") {
    for (const auto& cg : random_corpus(200, 1, 40, 2718)) {
        auto h = halve_local_search(cg.graph);
        auto prof = deficiency_profile(cg.graph, h.coloring);
        for (int v = 0; v < cg.graph.num_vertices(); ++v) {
            CHECK(prof[v] <= cg.graph.degree(v) / 2);
            CHECK((h.coloring.color[v] == 1 || h.coloring.color[v] == 2));
        }
        CHECK(h.flips <= cg.graph.num_edges());
    }
}

TEST_CASE("double colors: exact branch") {
    Graph p = path(7);
    auto out = solve_double_colors(p, heuristic_decomposition(p), 2, 0);
    REQUIRE(out.coloring);
    CHECK(out.exact_branch);
    CHECK(verify(p, *out.coloring, 2, 0).valid);
    CHECK_FALSE(solve_double_colors(p, heuristic_decomposition(p), 1, 0).coloring);

    for (const auto& cg : random_corpus(200, 1, 10, 1618)) {
        auto td = heuristic_decomposition(cg.graph);
        for (int colors = 1; colors <= 3; ++colors)
            for (int d = 0; d <= 2; ++d) {
                auto out2 = solve_double_colors(cg.graph, td, colors, d);
                bool yes = brute_force_decide(cg.graph, colors, d).has_value();
                if (yes) {
                    REQUIRE(out2.coloring);
                    CHECK(verify(cg.graph, *out2.coloring, 2 * colors, d).valid);
                } else {
                    CHECK_FALSE(out2.coloring);
                }
            }
    }
}

TEST_CASE("double colors: approximation branch") {
    Graph s = star(45);
    auto out = solve_double_colors(s, heuristic_decomposition(s), 2, 20);
    CHECK_FALSE(out.exact_branch);
    REQUIRE(out.coloring);
    CHECK(verify(s, *out.coloring, 4, 20).valid);
    CHECK_FALSE(solve_double_colors(s, heuristic_decomposition(s), 1, 20).coloring);

    for (int pages : {40, 70}) {
        Graph b = book(pages);
        auto td = heuristic_decomposition(b);
        auto r = solve_double_colors(b, td, 2, 25);
        CHECK_FALSE(r.exact_branch);
        REQUIRE(r.coloring);
        CHECK(verify(b, *r.coloring, 4, 25).valid);
    }
}

TEST_CASE("minimize colors stays within twice the optimum") {
    for (const auto& cg : random_corpus(60, 1, 9, 141)) {
        for (int d = 0; d <= 2; ++d) {
            auto td = heuristic_decomposition(cg.graph);
            auto m = minimize_colors(cg.graph, td, d);
            int best = min_colors(cg.graph, d);
            CHECK(m.tried_colors <= best);
            CHECK(verify(cg.graph, m.coloring, 2 * best, d).valid);
        }
    }
}

TEST_CASE("greedy defective coloring stays within the deficiency") {
    for (const auto& cg : random_corpus(150, 1, 30, 9))
        for (int d = 0; d <= 3; ++d) {
            auto c = greedy_defective(cg.graph, d);
            CHECK(verify(cg.graph, c, std::max(1, c.max_color()), d).valid);
            if (d == 0)
                CHECK(c.max_color() <= degeneracy(cg.graph) + 1);
        }
    CHECK(greedy_defective(complete(4), 1).max_color() == 2);
}
