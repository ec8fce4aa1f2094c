#include "defco/structural.hpp"

#include <algorithm>

#include "defco/errors.hpp"

namespace defco {

namespace {

std::vector<int> normalized(std::vector<int> s, int n) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int v : s)
        if (v < 0 || v >= n)
            throw PreconditionError("parameter set contains vertex " + std::to_string(v) + " outside the graph");
    return s;
}

StructuralResult from_coloring(std::optional<Coloring> c, std::string route, std::vector<int> set) {
    StructuralResult r;
    r.verdict = c ? Verdict::yes : Verdict::no;
    r.coloring = std::move(c);
    r.route = std::move(route);
    r.parameter_set = std::move(set);
    return r;
}

StructuralResult single_color(const Graph& graph, int deficiency, std::vector<int> set) {
    std::optional<Coloring> c;
    if (graph.max_degree() <= deficiency)
        c = Coloring{std::vector<int>(graph.num_vertices(), 1)};
    return from_coloring(std::move(c), "degree-check", std::move(set));
}

std::optional<Coloring> exact_over(const Graph& graph, const std::vector<int>& set, int num_colors,
                                   int deficiency, DpOptions options) {
    // the separator decomposition bounds the width by |set|+1; take the
    // heuristic one when it is narrower
    TreeDecomposition td = from_separator(graph, set);
    TreeDecomposition alt = heuristic_decomposition(graph, EliminationStrategy::min_fill);
    if (alt.width() < td.width())
        td = std::move(alt);
    NiceDecomposition nice = make_nice(graph, td);
    return solve_exact(graph, nice, num_colors, deficiency, options);
}

} // namespace

StructuralResult solve_by_fvs(const Graph& graph, int num_colors, int deficiency,
                              const std::optional<std::vector<int>>& fvs, SearchLimits limits,
                              DpOptions options) {
    if (num_colors < 1 || deficiency < 0)
        throw PreconditionError("need num_colors >= 1 and deficiency >= 0");
    const int n = graph.num_vertices();
    std::vector<int> f;
    if (fvs) {
        f = normalized(*fvs, n);
        if (!leaves_forest(graph, f))
            throw PreconditionError("supplied set is not a feedback vertex set");
    }
    if (num_colors == 2) {
        StructuralResult r;
        r.verdict = Verdict::unsupported;
        r.route = "two colors: use the treewidth dp";
        r.parameter_set = f;
        return r;
    }
    if (num_colors == 1)
        return single_color(graph, deficiency, f);
    if (!fvs)
        f = exact_fvs(graph, limits);
    const int size = static_cast<int>(f.size());

    if (num_colors >= size + 2) {
        Coloring c{two_color_forest(graph, f, size + 1, size + 2)};
        for (int i = 0; i < size; ++i)
            c.color[f[i]] = i + 1;
        return from_coloring(std::move(c), "distinct-colors-on-fvs", f);
    }
    if (deficiency > size) {
        // F gets color 1: each of its vertices sees at most |F|-1 < deficiency
        // same-colored vertices; the forest is properly colored with 2 and 3
        Coloring c{two_color_forest(graph, f, 2, 3)};
        for (int v : f)
            c.color[v] = 1;
        return from_coloring(std::move(c), "one-color-on-fvs", f);
    }
    return from_coloring(exact_over(graph, f, num_colors, deficiency, options), "exact-dp", f);
}

StructuralResult solve_by_vc(const Graph& graph, int num_colors, int deficiency,
                             const std::optional<std::vector<int>>& vc, SearchLimits limits,
                             DpOptions options) {
    if (num_colors < 1 || deficiency < 0)
        throw PreconditionError("need num_colors >= 1 and deficiency >= 0");
    const int n = graph.num_vertices();
    std::vector<int> s;
    if (vc) {
        s = normalized(*vc, n);
        if (!covers_all_edges(graph, s))
            throw PreconditionError("supplied set is not a vertex cover");
    }
    if (num_colors == 1)
        return single_color(graph, deficiency, s);
    if (!vc)
        s = exact_vc(graph, limits);
    const int size = static_cast<int>(s.size());

    if (num_colors >= size + 1) {
        Coloring c{std::vector<int>(n, size + 1)};
        for (int i = 0; i < size; ++i)
            c.color[s[i]] = i + 1;
        return from_coloring(std::move(c), "distinct-colors-on-cover", s);
    }
    if (deficiency > size) {
        Coloring c{std::vector<int>(n, 2)};
        for (int v : s)
            c.color[v] = 1;
        return from_coloring(std::move(c), "one-color-on-cover", s);
    }
    return from_coloring(exact_over(graph, s, num_colors, deficiency, options), "exact-dp", s);
}

StructuralResult approx_plus_one_fvs(const Graph& graph, int num_colors, int deficiency,
                                     SearchLimits limits, DpOptions options) {
    return solve_by_fvs(graph, num_colors == 2 ? 3 : num_colors, deficiency, std::nullopt, limits,
                        options);
}

} // namespace defco
