#include "doctest.h"

#include <limits>

#include "defco/errors.hpp"
#include "defco/gadgets.hpp"
#include "defco/oracle.hpp"
#include "reference.hpp"

using namespace defco;
using namespace defco::testing;

namespace {

// edges given as ((class, index), (class, index)), all 1-based
MccInstance make_mcc(int k, int n, const std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>>& edges) {
    MccInstance m;
    m.k = k;
    m.n = n;
    m.graph = Graph(k * n);
    m.classes.assign(k, {});
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j)
            m.classes[i].push_back(i * n + j);
    for (auto [a, b] : edges)
        m.graph.add_edge(m.vertex(a.first, a.second), m.vertex(b.first, b.second));
    return m;
}

std::vector<int> with_role(const Graph& g, const std::string& prefix, int step) {
    std::vector<int> out;
    for (int v = 0; v < g.num_vertices(); ++v) {
        const auto& r = g.role(v);
        if (role_step(r) == step && r.rfind(prefix, 0) == 0)
            out.push_back(v);
    }
    return out;
}

// Planted instances whose deficiency is large enough for the witness.
std::vector<MccInstance> planted_corpus(int k, int n, Construction c, int want) {
    std::vector<MccInstance> out;
    for (std::uint64_t seed = 1; static_cast<int>(out.size()) < want && seed < 500; ++seed) {
        auto m = random_mcc(k, n, 0.45, seed, true);
        const int d = static_cast<int>(m.graph.num_edges()) - k * (k - 1) / 2;
        const int need = c == Construction::td ? std::max(n, k) : std::max(n, 3);
        if (d >= need && d <= need + 3)
            out.push_back(std::move(m));
    }
    return out;
}

} // namespace

TEST_CASE("tower sizes") {
    CHECK(tower_size(1, 0) == 1);
    CHECK(tower_size(1, 5) == 1);
    CHECK(tower_size(2, 1) == 3);
    CHECK(tower_size(3, 1) == 7);
    CHECK(tower_size(200, 9) == std::numeric_limits<std::int64_t>::max());
    for (int i = 1; i <= 4; ++i)
        for (int j = 0; j <= 3; ++j) {
            auto t = build_tower(i, j);
            CHECK(t.graph.num_vertices() == ref_tower_size(i, j));
            CHECK(tower_size(i, j) == ref_tower_size(i, j));
        }
    CHECK_THROWS_AS(build_tower(10, 9, 1000), BudgetExceeded);
    CHECK_THROWS_AS(build_tower(0, 1), PreconditionError);
}

TEST_CASE("tower shapes") {
    CHECK(build_tower(1, 3).graph.num_edges() == 0);
    auto t = build_tower(2, 1);
    CHECK(t.graph.num_edges() == 2);
    CHECK(t.graph.max_degree() == 2);
    auto t3 = build_tower(3, 1);
    CHECK(t3.graph.max_degree() == 6);
}

TEST_CASE("towers: level coloring and forcing") {
    for (int i = 1; i <= 4; ++i)
        for (int j = 0; j <= 3; ++j) {
            auto t = build_tower(i, j);
            CHECK(verify(t.graph, Coloring{t.level}, i, 0).valid);
        }
    for (int i = 2; i <= 3; ++i)
        for (int j = 0; j <= 2; ++j) {
            auto t = build_tower(i, j);
            CAPTURE(i);
            CAPTURE(j);
            CHECK_FALSE(brute_force_decide(t.graph, i - 1, j));
        }
}

TEST_CASE("equality gadget sizes") {
    for (int d = 0; d <= 3; ++d) {
        Graph host(2);
        auto rec = attach_equality(host, 0, 1, 2, d);
        CHECK(static_cast<int>(rec.internals.size()) == 2 * d + 1);
        CHECK(host.num_edges() == static_cast<std::size_t>(2 * (2 * d + 1)));
        CHECK_FALSE(host.has_edge(0, 1));
        for (int x : rec.internals)
            CHECK(host.degree(x) == 2);
    }
    Graph host(2);
    CHECK(attach_equality(host, 0, 1, 3, 1).internals.size() == 12);
    CHECK(equality_size(3, 1) == 12);
    for (int c = 2; c <= 4; ++c)
        for (int d = 0; d <= 3; ++d)
            CHECK(equality_size(c, d) == ref_equality_size(c, d));
    Graph bad(2);
    CHECK_THROWS_AS(attach_equality(bad, 0, 1, 1, 1), PreconditionError);
    CHECK_THROWS_AS(attach_equality(bad, 0, 0, 2, 1), PreconditionError);
}

TEST_CASE("palette gadget sizes") {
    Graph h(3);
    CHECK(attach_palette(h, 0, 1, 2, 3, 1).internals.size() == 4);
    Graph h0(3);
    CHECK(attach_palette(h0, 0, 1, 2, 3, 0).internals.size() == 1);
    Graph h4(3);
    auto rec = attach_palette(h4, 0, 1, 2, 4, 1);
    CHECK(rec.internals.size() == 21);
    for (int x : rec.internals) {
        CHECK(h4.has_edge(x, 0));
        CHECK(h4.has_edge(x, 1));
        CHECK(h4.has_edge(x, 2));
    }
    for (int c = 3; c <= 5; ++c)
        for (int d = 0; d <= 3; ++d)
            CHECK(palette_size(c, d) == ref_palette_size(c, d));
    Graph bad(3);
    CHECK_THROWS_AS(attach_palette(bad, 0, 1, 2, 2, 1), PreconditionError);
}

TEST_CASE("equality gadgets force equal endpoints") {
    for (int c = 2; c <= 3; ++c)
        for (int d = 0; d <= 2; ++d) {
            Graph host(2);
            attach_equality(host, 0, 1, c, d);
            for (int a = 1; a <= c; ++a)
                for (int b = 1; b <= c; ++b) {
                    CAPTURE(c);
                    CAPTURE(d);
                    CHECK(endpoint_assignment_extends(host, {0, 1}, {a, b}, c, d) == (a == b));
                }
        }
}

TEST_CASE("palette gadgets force a repeated color") {
    for (int d = 0; d <= 1; ++d) {
        Graph host(3);
        attach_palette(host, 0, 1, 2, 3, d);
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= 3; ++b)
                for (int c = 1; c <= 3; ++c) {
                    bool repeated = a == b || b == c || a == c;
                    CHECK(endpoint_assignment_extends(host, {0, 1, 2}, {a, b, c}, 3, d) == repeated);
                }
    }
}

TEST_CASE("extend_gadgets colors the internals") {
    for (int c = 2; c <= 4; ++c)
        for (int d = 0; d <= 2; ++d) {
            Graph host(5);
            std::vector<GadgetRecord> gs;
            gs.push_back(attach_equality(host, 0, 1, c, d));
            if (c >= 3)
                gs.push_back(attach_palette(host, 2, 3, 4, c, d));
            Coloring col{std::vector<int>(host.num_vertices(), 0)};
            col.color[0] = col.color[1] = 1;
            col.color[2] = 1;
            col.color[3] = 1;
            col.color[4] = 2;
            extend_gadgets(gs, c, col);
            CHECK(verify(host, col, c, d).valid);
        }
    Graph host(2);
    std::vector<GadgetRecord> gs{attach_equality(host, 0, 1, 2, 1)};
    Coloring col{std::vector<int>(host.num_vertices(), 0)};
    col.color[0] = 1;
    col.color[1] = 2;
    CHECK_THROWS_AS(extend_gadgets(gs, 2, col), PreconditionError);
}

TEST_CASE("random mcc") {
    auto a = random_mcc(3, 4, 0.3, 9, true);
    validate_mcc(a);
    REQUIRE(a.planted);
    CHECK(verify_clique(a, *a.planted));
    auto b = random_mcc(3, 4, 0.3, 9, true);
    CHECK(a.graph.edges() == b.graph.edges());
    CHECK(*a.planted == *b.planted);

    auto full = random_mcc(3, 2, 1.0, 1, false);
    for (int x = 1; x <= 2; ++x)
        for (int y = 1; y <= 2; ++y)
            for (int z = 1; z <= 2; ++z)
                CHECK(verify_clique(full, {x, y, z}));
    CHECK(full.graph.num_edges() == 12);

    auto none = random_mcc(2, 3, 0.0, 1, false);
    CHECK(none.graph.num_edges() == 0);
    for (int x = 1; x <= 3; ++x)
        for (int y = 1; y <= 3; ++y)
            CHECK_FALSE(verify_clique(none, {x, y}));

    auto bad = make_mcc(2, 2, {});
    bad.graph.add_edge(bad.vertex(1, 1), bad.vertex(1, 2));
    CHECK_THROWS_AS(validate_mcc(bad), InputError);
}

TEST_CASE("td construction: small census") {
    auto m = make_mcc(2, 2, {{{1, 1}, {2, 1}}, {{1, 2}, {2, 2}}});
    CHECK(hardness_deficiency(m) == 1);
    auto gen = build_hardness_td(m, 2);
    const auto& g = gen.instance.graph;
    CHECK(gen.instance.deficiency == 1);
    CHECK(gen.instance.num_colors == 2);
    CHECK(role_census(g) == census_td(2, 2, 2, 2));
    CHECK(with_role(g, "c^", 6).size() == 8);
    CHECK(with_role(g, "g^", 7).size() == 4);
    CHECK(with_role(g, "c_U", 19).size() == 1);
    CHECK(g.num_vertices() == predict_size(m, 2, Construction::td));
    for (int v = 0; v < g.num_vertices(); ++v)
        CHECK(role_step(g.role(v)) > 0);
}

TEST_CASE("td construction: censuses and certificates") {
    for (int k = 2; k <= 3; ++k)
        for (int n = 2; n <= 3; ++n)
            for (std::uint64_t seed = 1; seed <= 4; ++seed)
                for (int c = 2; c <= 3; ++c) {
                    auto m = random_mcc(k, n, 0.5, seed, true);
                    if (predict_size(m, c, Construction::td) > 400000)
                        continue;
                    auto gen = build_hardness_td(m, c);
                    const int mm = static_cast<int>(m.graph.num_edges());
                    CHECK(gen.instance.deficiency == mm - k * (k - 1) / 2);
                    CHECK(role_census(gen.instance.graph) == census_td(k, n, mm, c));
                    for (const auto& gad : gen.gadgets)
                        if (gad.kind == GadgetKind::equality) {
                            const int outside = (gad.endpoints[0] != gen.layout.p_a && gad.endpoints[0] != gen.layout.p_b) +
                                                (gad.endpoints[1] != gen.layout.p_a && gad.endpoints[1] != gen.layout.p_b);
                            CHECK(outside <= 1);
                        }
                    if (c == 2) {
                        CHECK(static_cast<int>(gen.certificate.size()) <= 2 * k * k + 2);
                        CHECK(leaves_forest(gen.instance.graph, gen.certificate));
                    } else {
                        CHECK(gen.certificate.empty());
                    }
                }
}

TEST_CASE("pw construction: small census") {
    auto m = make_mcc(2, 2, {{{1, 1}, {2, 1}}, {{1, 2}, {2, 1}}});
    auto gen = build_hardness_pw(m, 2);
    const auto& g = gen.instance.graph;
    CHECK(gen.instance.deficiency == 1);
    REQUIRE(gen.layout.grid.size() == 2);
    for (const auto& row : gen.layout.grid) {
        REQUIRE(row.size() == 4);
        for (const auto& cell : row)
            CHECK(cell.size() == 2);
    }
    CHECK(with_role(g, "b^", 7).size() == 12);
    CHECK(with_role(g, "c_U", 14).size() == 1);
    int checkers = 0;
    for (int v = 0; v < g.num_vertices(); ++v)
        checkers += role_step(g.role(v)) == 13;
    CHECK(checkers == 2);
    CHECK(role_census(g) == census_pw(2, 2, 2, 2));
}

TEST_CASE("pw construction: censuses and grid degrees") {
    for (int k = 2; k <= 3; ++k)
        for (int n = 2; n <= 3; ++n)
            for (std::uint64_t seed = 1; seed <= 4; ++seed)
                for (int c = 2; c <= 3; ++c) {
                    auto m = random_mcc(k, n, 0.5, seed, true);
                    if (predict_size(m, c, Construction::pw) > 400000)
                        continue;
                    auto gen = build_hardness_pw(m, c);
                    const int mm = static_cast<int>(m.graph.num_edges());
                    const auto& g = gen.instance.graph;
                    CHECK(role_census(g) == census_pw(k, n, mm, c));
                    const auto cls = m.class_of();
                    const std::int64_t pal = c >= 3 ? ref_palette_size(c, gen.instance.deficiency) : 0;
                    for (int i = 1; i <= k; ++i)
                        for (int j = 1; j <= 2 * mm; ++j) {
                            const auto& part = gen.layout.edges[(j - 1) / 2];
                            const bool touched = cls[part.mcc_u] == i || cls[part.mcc_v] == i;
                            const std::int64_t expected = 2 * (j > 1) + 2 * (j < 2 * mm) + touched + pal;
                            for (int x : gen.layout.grid[i - 1][j - 1])
                                CHECK(g.degree(x) == expected);
                        }
                }
}

TEST_CASE("constructions refuse bad parameters") {
    auto sparse = make_mcc(3, 2, {{{1, 1}, {2, 1}}});
    CHECK_THROWS_AS(hardness_deficiency(sparse), PreconditionError);
    CHECK_THROWS_AS(build_hardness_td(sparse, 2), PreconditionError);
    CHECK_THROWS_AS(build_hardness_pw(sparse, 2), PreconditionError);
    auto m = random_mcc(3, 3, 0.5, 1, true);
    CHECK_THROWS_AS(build_hardness_td(m, 1), PreconditionError);
    CHECK_THROWS_AS(build_hardness_td(m, 3, 100), BudgetExceeded);
    CHECK_THROWS_AS(build_hardness_pw(m, 3, 100), BudgetExceeded);
}

TEST_CASE("td witness colorings") {
    int checked[2] = {0, 0};
    for (int k = 2; k <= 3; ++k)
        for (int n = 2; n <= 3; ++n)
            for (const auto& m : planted_corpus(k, n, Construction::td, 3))
                for (int c = 2; c <= 3; ++c) {
                    if (predict_size(m, c, Construction::td) > 400000)
                        continue;
                    ++checked[c - 2];
                    auto gen = build_hardness_td(m, c);
                    const int d = gen.instance.deficiency;
                    auto col = witness_coloring_td(gen, *m.planted);
                    const auto& g = gen.instance.graph;
                    CAPTURE(k);
                    CAPTURE(n);
                    CAPTURE(c);
                    CHECK(verify(g, col, c, d).valid);
                    auto prof = deficiency_profile(g, col);
                    for (int v : with_role(g, "c_U", 19))
                        CHECK(prof[v] == d);
                    for (int v : with_role(g, "l_", 11))
                        CHECK(prof[v] == d);
                }
    CHECK(checked[0] >= 8);
    CHECK(checked[1] >= 4);
}

TEST_CASE("pw witness colorings") {
    int checked[2] = {0, 0};
    for (int k = 2; k <= 3; ++k)
        for (int n = 2; n <= 3; ++n)
            for (const auto& m : planted_corpus(k, n, Construction::pw, 3))
                for (int c = 2; c <= 3; ++c) {
                    if (predict_size(m, c, Construction::pw) > 400000)
                        continue;
                    ++checked[c - 2];
                    auto gen = build_hardness_pw(m, c);
                    const int d = gen.instance.deficiency;
                    auto col = witness_coloring_pw(gen, *m.planted);
                    const auto& g = gen.instance.graph;
                    CHECK(verify(g, col, c, d).valid);
                    auto prof = deficiency_profile(g, col);
                    for (int v : with_role(g, "c_U", 14))
                        CHECK(prof[v] == d);
                    for (int v : with_role(g, "b^", 7))
                        CHECK(prof[v] == d);
                }
    CHECK(checked[0] >= 8);
    CHECK(checked[1] >= 4);
}

TEST_CASE("witness preconditions") {
    auto m = planted_corpus(3, 3, Construction::td, 1).at(0);
    auto gen = build_hardness_td(m, 2);
    std::vector<int> wrong = *m.planted;
    bool found = false;
    for (int x = 1; x <= 3 && !found; ++x) {
        wrong[0] = x;
        found = !verify_clique(m, wrong);
    }
    REQUIRE(found);
    CHECK_THROWS_AS(witness_coloring_td(gen, wrong), PreconditionError);
    CHECK_THROWS_AS(witness_coloring_pw(gen, *m.planted), PreconditionError);

    auto small = make_mcc(2, 3, {{{1, 1}, {2, 1}}, {{1, 2}, {2, 2}}});
    auto tiny = build_hardness_td(small, 2);
    CHECK_THROWS_AS(witness_coloring(tiny, {1, 1}), PreconditionError);
}

TEST_CASE("role steps") {
    CHECK(role_step("p_A@1") == 1);
    CHECK(role_step("B(c_e3)@23") == 23);
    CHECK(role_step("plain") == -1);
    CHECK(to_string(Construction::pw) == "pw");
    CHECK(construction_from_string("td") == Construction::td);
    CHECK_THROWS_AS(construction_from_string("xx"), InputError);
}
