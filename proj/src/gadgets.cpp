#include "defco/gadgets.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <random>
#include <set>

#include "defco/errors.hpp"

namespace defco {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();

std::int64_t sat_add(std::int64_t a, std::int64_t b) { return a > kInf - b ? kInf : a + b; }
std::int64_t sat_mul(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0)
        return 0;
    return a > kInf / b ? kInf : a * b;
}

std::int64_t choose2(std::int64_t x) { return x * (x - 1) / 2; }

// Appends one copy of T(i,j) to g; returns nothing, fills members/levels.
void append_tower(Graph& g, int i, int j, const std::string& role, std::vector<int>& members,
                  std::vector<int>& levels) {
    if (i == 1) {
        members.push_back(g.add_vertex(role));
        levels.push_back(1);
        return;
    }
    const std::size_t first = members.size();
    for (int c = 0; c <= j; ++c)
        append_tower(g, i - 1, j, role, members, levels);
    const std::size_t last = members.size();
    const int top = g.add_vertex(role);
    for (std::size_t x = first; x < last; ++x)
        g.add_edge(members[x], top);
    members.push_back(top);
    levels.push_back(i);
}

GadgetRecord attach_copies(Graph& host, std::vector<int> endpoints, int copies, int tower_height,
                           int deficiency, GadgetKind kind, const std::string& role) {
    GadgetRecord rec;
    rec.kind = kind;
    rec.step = role_step(role);
    for (int c = 0; c < copies; ++c)
        append_tower(host, tower_height, deficiency, role, rec.internals, rec.levels);
    for (int x : rec.internals)
        for (int e : endpoints)
            host.add_edge(e, x);
    rec.endpoints = std::move(endpoints);
    return rec;
}

void check_distinct(const Graph& host, const std::vector<int>& vs) {
    for (std::size_t a = 0; a < vs.size(); ++a) {
        if (vs[a] < 0 || vs[a] >= host.num_vertices())
            throw PreconditionError("gadget endpoint outside the host graph");
        for (std::size_t b = a + 1; b < vs.size(); ++b)
            if (vs[a] == vs[b])
                throw PreconditionError("gadget endpoints must be distinct");
    }
}

std::string tag(const std::string& name, int step) { return name + "@" + std::to_string(step); }

} // namespace

int role_step(const std::string& role) {
    auto at = role.rfind('@');
    if (at == std::string::npos || at + 1 == role.size())
        return -1;
    try {
        return std::stoi(role.substr(at + 1));
    } catch (const std::exception&) {
        return -1;
    }
}

// ---------------------------------------------------------------- mcc

std::vector<int> MccInstance::class_of() const {
    std::vector<int> out(graph.num_vertices(), 0);
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (int v : classes[i])
            out[v] = static_cast<int>(i) + 1;
    return out;
}

std::vector<int> MccInstance::index_of() const {
    std::vector<int> out(graph.num_vertices(), 0);
    for (const auto& cls : classes)
        for (std::size_t j = 0; j < cls.size(); ++j)
            out[cls[j]] = static_cast<int>(j) + 1;
    return out;
}

void validate_mcc(const MccInstance& mcc) {
    if (mcc.k < 1 || mcc.n < 1)
        throw InputError("mcc needs k >= 1 and n >= 1");
    if (static_cast<int>(mcc.classes.size()) != mcc.k)
        throw InputError("mcc has " + std::to_string(mcc.classes.size()) + " classes, expected k=" +
                         std::to_string(mcc.k));
    if (mcc.graph.num_vertices() != mcc.k * mcc.n)
        throw InputError("mcc graph must have k*n vertices");
    std::vector<int> seen(mcc.graph.num_vertices(), 0);
    for (const auto& cls : mcc.classes) {
        if (static_cast<int>(cls.size()) != mcc.n)
            throw InputError("every mcc class must have n vertices");
        for (int v : cls) {
            if (v < 0 || v >= mcc.graph.num_vertices() || seen[v]++)
                throw InputError("mcc classes must partition the vertices (vertex " + std::to_string(v) + ")");
        }
    }
    const auto cls = mcc.class_of();
    for (auto [u, v] : mcc.graph.edges())
        if (cls[u] == cls[v])
            throw InputError("mcc edge inside class " + std::to_string(cls[u]));
    if (mcc.planted && static_cast<int>(mcc.planted->size()) != mcc.k)
        throw InputError("planted clique must name one index per class");
}

MccInstance random_mcc(int k, int n, double edge_prob, std::uint64_t seed, bool plant) {
    if (k < 2 || n < 1)
        throw PreconditionError("random_mcc needs k >= 2 and n >= 1");
    if (!(edge_prob >= 0 && edge_prob <= 1))
        throw PreconditionError("edge probability must be in [0,1]");
    std::mt19937_64 rng(seed);
    MccInstance mcc;
    mcc.k = k;
    mcc.n = n;
    mcc.graph = Graph(k * n);
    mcc.classes.assign(k, {});
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j)
            mcc.classes[i].push_back(i * n + j);
    std::vector<int> pick;
    if (plant) {
        std::uniform_int_distribution<int> index(1, n);
        for (int i = 0; i < k; ++i)
            pick.push_back(index(rng));
        mcc.planted = pick;
    }
    std::bernoulli_distribution coin(edge_prob);
    for (int u = 0; u < k * n; ++u)
        for (int v = u + 1; v < k * n; ++v) {
            const int cu = u / n, cv = v / n;
            if (cu == cv)
                continue;
            const bool forced = plant && u % n + 1 == pick[cu] && v % n + 1 == pick[cv];
            // draw regardless so the noise edges do not depend on the plant
            const bool drawn = coin(rng);
            if (forced || drawn)
                mcc.graph.add_edge(u, v);
        }
    return mcc;
}

bool verify_clique(const MccInstance& mcc, const std::vector<int>& clique) {
    if (static_cast<int>(clique.size()) != mcc.k)
        return false;
    for (int x : clique)
        if (x < 1 || x > mcc.n)
            return false;
    for (int a = 1; a <= mcc.k; ++a)
        for (int b = a + 1; b <= mcc.k; ++b)
            if (!mcc.graph.has_edge(mcc.vertex(a, clique[a - 1]), mcc.vertex(b, clique[b - 1])))
                return false;
    return true;
}

// ---------------------------------------------------------------- gadgets

std::int64_t tower_size(int i, int j) {
    if (i < 1 || j < 0)
        throw PreconditionError("tower needs i >= 1 and j >= 0");
    std::int64_t v = 1;
    for (int level = 2; level <= i; ++level)
        v = sat_add(sat_mul(j + 1, v), 1);
    return v;
}

Tower build_tower(int i, int j, std::int64_t vertex_cap) {
    const std::int64_t size = tower_size(i, j);
    if (size > vertex_cap)
        throw BudgetExceeded("T(" + std::to_string(i) + "," + std::to_string(j) + ") has " +
                             std::to_string(size) + " vertices, cap is " + std::to_string(vertex_cap));
    Tower t;
    std::vector<int> members;
    append_tower(t.graph, i, j, "tower", members, t.level);
    return t;
}

std::int64_t equality_size(int num_colors, int deficiency) {
    return sat_mul(sat_add(sat_mul(num_colors, deficiency), 1), tower_size(num_colors - 1, deficiency));
}

std::int64_t palette_size(int num_colors, int deficiency) {
    return sat_mul(sat_add(sat_mul(choose2(num_colors), deficiency), 1),
                   tower_size(num_colors - 2, deficiency));
}

GadgetRecord attach_equality(Graph& host, int v1, int v2, int num_colors, int deficiency,
                             const std::string& role) {
    if (num_colors < 2)
        throw PreconditionError("equality gadget needs at least 2 colors");
    if (deficiency < 0)
        throw PreconditionError("deficiency must be >= 0");
    check_distinct(host, {v1, v2});
    return attach_copies(host, {v1, v2}, num_colors * deficiency + 1, num_colors - 1, deficiency,
                         GadgetKind::equality, role);
}

GadgetRecord attach_palette(Graph& host, int v1, int v2, int v3, int num_colors, int deficiency,
                            const std::string& role) {
    if (num_colors < 3)
        throw PreconditionError("palette gadget needs at least 3 colors");
    if (deficiency < 0)
        throw PreconditionError("deficiency must be >= 0");
    check_distinct(host, {v1, v2, v3});
    const int copies = static_cast<int>(choose2(num_colors)) * deficiency + 1;
    return attach_copies(host, {v1, v2, v3}, copies, num_colors - 2, deficiency, GadgetKind::palette,
                         role);
}

void extend_gadgets(const std::vector<GadgetRecord>& gadgets, int num_colors, Coloring& coloring) {
    for (const GadgetRecord& g : gadgets) {
        std::set<int> used;
        for (int e : g.endpoints) {
            if (coloring[e] < 1)
                throw PreconditionError("gadget endpoint left uncolored");
            used.insert(coloring[e]);
        }
        const std::size_t allowed = g.kind == GadgetKind::equality ? 1 : 2;
        if (used.size() > allowed)
            throw PreconditionError(g.kind == GadgetKind::equality
                                        ? "equality gadget endpoints have different colors"
                                        : "palette gadget endpoints use three colors");
        std::vector<int> free;
        for (int c = 1; c <= num_colors; ++c)
            if (!used.count(c))
                free.push_back(c);
        for (std::size_t x = 0; x < g.internals.size(); ++x)
            coloring.color[g.internals[x]] = free[g.levels[x] - 1];
    }
}

std::string to_string(Construction c) { return c == Construction::td ? "td" : "pw"; }

Construction construction_from_string(const std::string& s) {
    if (s == "td" || s == "hardness-td")
        return Construction::td;
    if (s == "pw" || s == "hardness-pw")
        return Construction::pw;
    throw InputError("unknown construction '" + s + "'");
}

// ---------------------------------------------------------------- generators

int hardness_deficiency(const MccInstance& mcc) {
    const std::int64_t d = static_cast<std::int64_t>(mcc.graph.num_edges()) - choose2(mcc.k);
    if (d < 0)
        throw PreconditionError("mcc has fewer than C(k,2) edges, the deficiency would be negative");
    return static_cast<int>(d);
}

std::int64_t predict_size(const MccInstance& mcc, int num_colors, Construction construction) {
    if (num_colors < 2)
        throw PreconditionError("hardness constructions need at least 2 colors");
    const std::int64_t k = mcc.k, n = mcc.n, m = static_cast<std::int64_t>(mcc.graph.num_edges());
    const std::int64_t d = hardness_deficiency(mcc);
    const std::int64_t b = std::max<std::int64_t>(0, d - n);
    const std::int64_t eq = equality_size(num_colors, static_cast<int>(d));
    const std::int64_t pal = num_colors >= 3 ? palette_size(num_colors, static_cast<int>(d)) : 0;
    std::int64_t main = 0, eqs = 0, pals = 0;
    if (construction == Construction::td) {
        const std::int64_t transfers = 2 * k * (k - 1);
        main = 2 + 2 * d + 2 * n * k + 2 * k + transfers + m * (2 * n + 1) + 1 + 2 * k * b +
               transfers * b + m * d;
        eqs = 2 * d + 2 * k + transfers + 1 + 2 * k * b + transfers * b + m * d;
        pals = 2 * n * k + m * (2 * n + 1);
    } else {
        const std::int64_t backbone = 2 * k * (2 * m - 1);
        const std::int64_t later = k * 2 * m * n + backbone + 2 * n * m + 4 * m + m + 1 + m * d +
                                   4 * m * b + backbone * b;
        main = 2 + 2 * d + later;
        eqs = 2 * d + backbone + 4 * m + 1 + m * d + 4 * m * b + backbone * b;
        pals = later;
    }
    std::int64_t total = sat_add(main, sat_mul(eqs, eq));
    if (num_colors >= 3)
        total = sat_add(total, sat_mul(pals, pal));
    return total;
}

namespace {

class Builder {
public:
    Builder(const MccInstance& mcc, int num_colors, Construction construction, std::int64_t cap)
        : mcc_(mcc), colors_(num_colors) {
        validate_mcc(mcc);
        const std::int64_t size = predict_size(mcc, num_colors, construction);
        if (size > cap)
            throw BudgetExceeded("instance would have " + std::to_string(size) +
                                 " vertices, cap is " + std::to_string(cap));
        d_ = hardness_deficiency(mcc);
        budget_ = std::max(0, d_ - mcc.n);
        out_.construction = construction;
        out_.source = mcc;
        out_.instance.num_colors = num_colors;
        out_.instance.deficiency = d_;
        edges_ = ordered_edges();
    }

    GeneratedInstance td() {
        const int k = mcc_.k, n = mcc_.n;
        palette_part();
        auto& L = out_.layout;

        // 6-10: choice and guards
        L.choice.assign(k, {});
        for (int i = 1; i <= k; ++i)
            for (int j = 1; j <= 2 * n; ++j)
                L.choice[i - 1].push_back(add("c^" + s(i) + "_" + s(j), 6));
        std::vector<std::array<int, 2>> guard(k);
        for (int i = 1; i <= k; ++i)
            for (int side = 0; side < 2; ++side)
                guard[i - 1][side] = add("g^" + s(i) + "_" + ab(side), 7);
        for (int i = 1; i <= k; ++i)
            for (int c : L.choice[i - 1])
                for (int side = 0; side < 2; ++side)
                    g().add_edge(c, guard[i - 1][side]);
        for (int i = 1; i <= k; ++i)
            for (int side = 0; side < 2; ++side)
                eq(pal_(side), guard[i - 1][side], 9);
        if (colors_ >= 3)
            for (int i = 1; i <= k; ++i)
                for (int c : L.choice[i - 1])
                    pal(c, 10);

        // 11-14: transfer vertices, low[i][j] / high[i][j] for i != j
        std::vector<std::vector<int>> low(k, std::vector<int>(k, -1)), high = low;
        for (int i = 1; i <= k; ++i)
            for (int j = 1; j <= k; ++j)
                if (i != j) {
                    high[i - 1][j - 1] = add("h_" + s(i) + "," + s(j), 11);
                    low[i - 1][j - 1] = add("l_" + s(i) + "," + s(j), 11);
                }
        for (int i = 1; i <= k; ++i)
            for (int j = 1; j <= k; ++j) {
                if (i == j)
                    continue;
                for (int l = 1; l <= n; ++l)
                    g().add_edge(low[i - 1][j - 1], L.choice[i - 1][l - 1]);
                for (int l = n + 1; l <= 2 * n; ++l)
                    g().add_edge(high[i - 1][j - 1], L.choice[i - 1][l - 1]);
            }
        for (int i = 1; i <= k; ++i)
            for (int j = 1; j <= k; ++j)
                if (i != j) {
                    eq(out_.layout.p_a, low[i - 1][j - 1], 14);
                    eq(out_.layout.p_a, high[i - 1][j - 1], 14);
                }

        // 15-18: edge representation
        const auto cls = mcc_.class_of();
        const auto idx = mcc_.index_of();
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            auto [u, v] = edges_[e];
            const int j1 = cls[u], j2 = cls[v], i1 = idx[u], i2 = idx[v];
            const std::string id = s(static_cast<int>(e) + 1);
            EdgePart part{u, v, {}, -1};
            const int sizes[4] = {n - i1, i1, n - i2, i2};
            const char* names[4] = {"L1_e", "H1_e", "L2_e", "H2_e"};
            const int owner[4] = {low[j1 - 1][j2 - 1], high[j1 - 1][j2 - 1], low[j2 - 1][j1 - 1],
                                  high[j2 - 1][j1 - 1]};
            std::vector<int> sets[4];
            for (int q = 0; q < 4; ++q)
                for (int x = 0; x < sizes[q]; ++x)
                    sets[q].push_back(add(names[q] + id, 15));
            for (int q = 0; q < 4; ++q)
                for (int x : sets[q])
                    g().add_edge(owner[q], x);
            part.checker = add("c_e" + id, 17);
            for (int q = 0; q < 4; ++q)
                for (int x : sets[q]) {
                    g().add_edge(part.checker, x);
                    part.members.push_back(x);
                }
            if (colors_ >= 3) {
                for (int x : part.members)
                    pal(x, 18);
                pal(part.checker, 18);
            }
            L.edges.push_back(std::move(part));
        }

        // 19-20
        const int cu = add("c_U", 19);
        for (const auto& part : L.edges)
            g().add_edge(cu, part.checker);
        eq(L.p_a, cu, 20);

        // 21-23: budget setting
        for (int i = 1; i <= k; ++i)
            for (int side = 0; side < 2; ++side)
                budget_set(guard[i - 1][side], budget_, pal_(side), 21);
        for (int i = 1; i <= k; ++i)
            for (int j = 1; j <= k; ++j)
                if (i != j) {
                    budget_set(low[i - 1][j - 1], budget_, L.p_a, 22);
                    budget_set(high[i - 1][j - 1], budget_, L.p_a, 22);
                }
        for (const auto& part : L.edges)
            budget_set(part.checker, d_, L.p_b, 23);

        if (colors_ == 2) {
            auto& cert = out_.certificate;
            cert = {L.p_a, L.p_b};
            for (const auto& gs : guard)
                cert.insert(cert.end(), gs.begin(), gs.end());
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    if (i != j) {
                        cert.push_back(low[i][j]);
                        cert.push_back(high[i][j]);
                    }
            std::sort(cert.begin(), cert.end());
        }
        return finish();
    }

    GeneratedInstance pw() {
        const int k = mcc_.k, n = mcc_.n, m = static_cast<int>(edges_.size());
        palette_part();
        auto& L = out_.layout;
        std::vector<int> later; // main vertices of steps 6-17, for step 18

        // 6: the k x 2m grid
        L.grid.assign(k, std::vector<std::vector<int>>(2 * m));
        for (int i = 1; i <= k; ++i)
            for (int j = 1; j <= 2 * m; ++j)
                for (int x = 0; x < n; ++x)
                    L.grid[i - 1][j - 1].push_back(later_add(later, "C_" + s(i) + "," + s(j), 6));

        // 7-8: backbone
        std::vector<std::pair<int, int>> backbone; // (vertex, side)
        for (int i = 1; i <= k; ++i)
            for (int j = 1; j <= 2 * m - 1; ++j)
                for (int side = 0; side < 2; ++side) {
                    const int b = later_add(later, "b^" + ab(side) + "_" + s(i) + "," + s(j), 7);
                    for (int x : L.grid[i - 1][j - 1])
                        g().add_edge(b, x);
                    for (int x : L.grid[i - 1][j])
                        g().add_edge(b, x);
                    backbone.emplace_back(b, side);
                }
        for (auto [b, side] : backbone)
            eq(pal_(side), b, 8);

        // 9-13: edge representation
        const auto cls = mcc_.class_of();
        const auto idx = mcc_.index_of();
        std::vector<int> connectors;
        for (int e = 1; e <= m; ++e) {
            auto [u, v] = edges_[e - 1];
            const int i1 = cls[u], i2 = cls[v], j1 = idx[u], j2 = idx[v];
            const std::string id = s(e);
            EdgePart part{u, v, {}, -1};
            const int sizes[4] = {n - j1, j1, n - j2, j2};
            const char* set_names[4] = {"H1_", "L1_", "H2_", "L2_"};
            const char* conn_names[4] = {"h1_", "l1_", "h2_", "l2_"};
            std::vector<int> sets[4];
            for (int q = 0; q < 4; ++q)
                for (int x = 0; x < sizes[q]; ++x)
                    sets[q].push_back(later_add(later, set_names[q] + id, 9));
            int conn[4];
            for (int q = 0; q < 4; ++q) {
                conn[q] = later_add(later, conn_names[q] + id, 10);
                for (int x : sets[q])
                    g().add_edge(conn[q], x);
            }
            const int row[4] = {i1, i1, i2, i2};
            const int col[4] = {2 * e - 1, 2 * e, 2 * e - 1, 2 * e};
            for (int q = 0; q < 4; ++q)
                for (int x : L.grid[row[q] - 1][col[q] - 1])
                    g().add_edge(conn[q], x);
            for (int q = 0; q < 4; ++q) {
                eq(L.p_a, conn[q], 12);
                connectors.push_back(conn[q]);
            }
            part.checker = later_add(later, "c_" + id, 13);
            for (int q = 0; q < 4; ++q)
                for (int x : sets[q]) {
                    g().add_edge(part.checker, x);
                    part.members.push_back(x);
                }
            L.edges.push_back(std::move(part));
        }

        // 14-17
        const int cu = later_add(later, "c_U", 14);
        for (const auto& part : L.edges)
            g().add_edge(cu, part.checker);
        eq(L.p_a, cu, 14);
        for (const auto& part : L.edges)
            budget_set(part.checker, d_, L.p_b, 15, &later);
        for (int c : connectors)
            budget_set(c, budget_, L.p_a, 16, &later);
        for (auto [b, side] : backbone)
            budget_set(b, budget_, pal_(side), 17, &later);

        // 18
        if (colors_ >= 3)
            for (int v : later)
                pal(v, 18);
        return finish();
    }

private:
    Graph& g() { return out_.instance.graph; }
    static std::string s(int x) { return std::to_string(x); }
    static std::string ab(int side) { return side == 0 ? "A" : "B"; }
    int pal_(int side) const { return side == 0 ? out_.layout.p_a : out_.layout.p_b; }

    int add(const std::string& name, int step) { return g().add_vertex(tag(name, step)); }
    int later_add(std::vector<int>& later, const std::string& name, int step) {
        int v = add(name, step);
        later.push_back(v);
        return v;
    }

    void eq(int anchor, int v, int step) {
        out_.gadgets.push_back(attach_equality(g(), anchor, v, colors_, d_, tag("eq", step)));
    }
    void pal(int v, int step) {
        out_.gadgets.push_back(
            attach_palette(g(), out_.layout.p_a, out_.layout.p_b, v, colors_, d_, tag("pal", step)));
    }

    // Independent set of `size` vertices hanging off `owner`, each tied to `anchor`.
    void budget_set(int owner, int size, int anchor, int step, std::vector<int>* later = nullptr) {
        std::vector<int> members;
        const std::string name = "B(" + g().role(owner).substr(0, g().role(owner).rfind('@')) + ")";
        for (int x = 0; x < size; ++x) {
            int v = add(name, step);
            if (later)
                later->push_back(v);
            g().add_edge(owner, v);
            members.push_back(v);
        }
        for (int v : members)
            eq(anchor, v, step);
    }

    // Steps 1-5, shared by both constructions.
    void palette_part() {
        auto& L = out_.layout;
        L.p_a = add("p_A", 1);
        L.p_b = add("p_B", 1);
        std::vector<int> copies[2];
        for (int i = 1; i <= d_; ++i)
            for (int side = 0; side < 2; ++side)
                copies[side].push_back(add("p^" + s(i) + "_" + ab(side), 2));
        for (int i = 0; i < d_; ++i)
            for (int side = 0; side < 2; ++side)
                eq(pal_(side), copies[side][i], 3);
        g().add_edge(L.p_a, L.p_b);
        for (int side = 0; side < 2; ++side)
            for (int v : copies[side])
                g().add_edge(pal_(side), v);
    }

    // Edges by (min id, max id), lower class first.
    std::vector<std::pair<int, int>> ordered_edges() const {
        const auto cls = mcc_.class_of();
        std::vector<std::pair<int, int>> e = mcc_.graph.edges();
        for (auto& [u, v] : e)
            if (u > v)
                std::swap(u, v);
        std::sort(e.begin(), e.end());
        for (auto& [u, v] : e)
            if (cls[u] > cls[v])
                std::swap(u, v);
        return e;
    }

    GeneratedInstance finish() {
        const std::int64_t expected = predict_size(mcc_, colors_, out_.construction);
        if (expected != g().num_vertices())
            throw std::logic_error("size prediction disagrees with the construction");
        return std::move(out_);
    }

    const MccInstance& mcc_;
    int colors_;
    int d_ = 0;
    int budget_ = 0;
    std::vector<std::pair<int, int>> edges_;
    GeneratedInstance out_;
};

void require_clique(const GeneratedInstance& gen, const std::vector<int>& clique) {
    if (!verify_clique(gen.source, clique))
        throw PreconditionError("the given indices do not form a multicolored clique");
}

Coloring start_coloring(const GeneratedInstance& gen) {
    Coloring c{std::vector<int>(gen.instance.graph.num_vertices(), 0)};
    c.color[gen.layout.p_a] = 1;
    c.color[gen.layout.p_b] = 2;
    return c;
}

// Equality gadgets anchored at p_A / p_B pass the anchor's color on.
void color_anchored(const GeneratedInstance& gen, Coloring& c) {
    for (const auto& gad : gen.gadgets)
        if (gad.kind == GadgetKind::equality)
            c.color[gad.endpoints[1]] = c[gad.endpoints[0]];
}

void color_edge_parts(const GeneratedInstance& gen, const std::vector<int>& clique, Coloring& c) {
    const auto cls = gen.source.class_of();
    const auto idx = gen.source.index_of();
    for (const auto& part : gen.layout.edges) {
        const bool in = clique[cls[part.mcc_u] - 1] == idx[part.mcc_u] &&
                        clique[cls[part.mcc_v] - 1] == idx[part.mcc_v];
        for (int x : part.members)
            c.color[x] = in ? 1 : 2;
        c.color[part.checker] = in ? 2 : 1;
    }
}

} // namespace

GeneratedInstance build_hardness_td(const MccInstance& mcc, int num_colors, std::int64_t vertex_cap) {
    return Builder(mcc, num_colors, Construction::td, vertex_cap).td();
}

GeneratedInstance build_hardness_pw(const MccInstance& mcc, int num_colors, std::int64_t vertex_cap) {
    return Builder(mcc, num_colors, Construction::pw, vertex_cap).pw();
}

GeneratedInstance build_hardness(const MccInstance& mcc, int num_colors, Construction construction,
                                 std::int64_t vertex_cap) {
    return construction == Construction::td ? build_hardness_td(mcc, num_colors, vertex_cap)
                                            : build_hardness_pw(mcc, num_colors, vertex_cap);
}

Coloring witness_coloring_td(const GeneratedInstance& gen, const std::vector<int>& clique) {
    if (gen.construction != Construction::td)
        throw PreconditionError("not a td instance");
    require_clique(gen, clique);
    const int n = gen.source.n, k = gen.source.k, d = gen.instance.deficiency;
    if (d < std::max(n, k))
        throw PreconditionError("witness needs deficiency >= max(n, k)");
    Coloring c = start_coloring(gen);
    color_anchored(gen, c);
    for (int i = 1; i <= k; ++i) {
        const int f = clique[i - 1];
        for (int l = 1; l <= 2 * n; ++l) {
            const bool one = l <= f || (l >= n + 1 && l <= 2 * n - f);
            c.color[gen.layout.choice[i - 1][l - 1]] = one ? 1 : 2;
        }
    }
    color_edge_parts(gen, clique, c);
    extend_gadgets(gen.gadgets, gen.instance.num_colors, c);
    return c;
}

Coloring witness_coloring_pw(const GeneratedInstance& gen, const std::vector<int>& clique) {
    if (gen.construction != Construction::pw)
        throw PreconditionError("not a pw instance");
    require_clique(gen, clique);
    const int n = gen.source.n, k = gen.source.k, d = gen.instance.deficiency;
    if (d < std::max(n, 3))
        throw PreconditionError("witness needs deficiency >= max(n, 3)");
    Coloring c = start_coloring(gen);
    color_anchored(gen, c);
    for (int i = 1; i <= k; ++i) {
        const int sigma = clique[i - 1];
        const auto& row = gen.layout.grid[i - 1];
        for (std::size_t j = 0; j < row.size(); ++j) {
            const int ones = j % 2 == 0 ? sigma : n - sigma; // column j+1
            for (int x = 0; x < n; ++x)
                c.color[row[j][x]] = x < ones ? 1 : 2;
        }
    }
    color_edge_parts(gen, clique, c);
    extend_gadgets(gen.gadgets, gen.instance.num_colors, c);
    return c;
}

Coloring witness_coloring(const GeneratedInstance& gen, const std::vector<int>& clique) {
    return gen.construction == Construction::td ? witness_coloring_td(gen, clique)
                                                : witness_coloring_pw(gen, clique);
}

} // namespace defco
