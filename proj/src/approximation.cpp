#include "defco/approximation.hpp"

#include <algorithm>
#include <cmath>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "defco/errors.hpp"
#include "detail/dp_engine.hpp"

namespace defco {

namespace {

using Real = boost::multiprecision::cpp_bin_float_50;

struct RoundedCounts {
    const RoundedValueSet* sigma;

    bool can_forget(int value, int same_in_bag) const {
        return sigma->value(value) + same_in_bag <= sigma->cap;
    }
    std::optional<int> increment(int value) const { return sigma->round_up(sigma->value(value) + 1); }
    std::optional<int> combine(int a, int b) const {
        return sigma->round_up(sigma->value(a) + sigma->value(b));
    }
};

void check_epsilon(double epsilon) {
    if (!(epsilon > 0) || !std::isfinite(epsilon))
        throw PreconditionError("epsilon must be positive");
}

} // namespace

std::optional<int> RoundedValueSet::round_up(std::int64_t x) const {
    auto it = std::lower_bound(floor_value.begin(), floor_value.end(), x);
    if (it == floor_value.end())
        return std::nullopt;
    return static_cast<int>(it - floor_value.begin());
}

double default_delta(double epsilon, int n) {
    check_epsilon(epsilon);
    const double lg = std::log2(static_cast<double>(std::max(n, 4)));
    return std::min(1.0, epsilon / (lg * lg));
}

RoundedValueSet build_value_set(int deficiency, double epsilon, int n) {
    return build_value_set_with_delta(deficiency, epsilon, default_delta(epsilon, n));
}

RoundedValueSet build_value_set_with_delta(int deficiency, double epsilon, double delta) {
    check_epsilon(epsilon);
    if (deficiency < 0)
        throw PreconditionError("deficiency must be >= 0");
    if (!(delta > 0) || delta > 1)
        throw PreconditionError("delta must lie in (0, 1]");
    RoundedValueSet s;
    s.epsilon = epsilon;
    s.delta = delta;
    s.deficiency = deficiency;
    const Real cap = (Real(1) + Real(epsilon)) * deficiency;
    // 1e-9 absorbs eps values like 0.1 whose binary form sits just under the decimal
    s.cap = static_cast<int>(std::floor(static_cast<double>(cap) + 1e-9));
    s.floor_value.push_back(0);
    const Real step = Real(1) + Real(delta);
    for (Real p = 1; p <= cap; p *= step)
        s.floor_value.push_back(static_cast<std::int64_t>(floor(p)));
    return s;
}

int rounding_depth(const NiceDecomposition& nice) {
    std::vector<int> depth(nice.nodes.size(), 0);
    for (std::size_t t = 0; t < nice.nodes.size(); ++t) {
        const NiceNode& node = nice.nodes[t];
        int below = 0;
        for (int c : node.children)
            below = std::max(below, depth[c]);
        const bool rounds = node.kind == NodeKind::forget || node.kind == NodeKind::join;
        depth[t] = below + (rounds ? 1 : 0);
    }
    return depth.empty() ? 0 : depth.back();
}

ApproxOutcome solve_approx_deficiency(const Graph& graph, const TreeDecomposition& td,
                                      int num_colors, int deficiency, double epsilon,
                                      DpOptions options) {
    check_epsilon(epsilon);
    if (num_colors < 1 || deficiency < 0)
        throw PreconditionError("need num_colors >= 1 and deficiency >= 0");
    if (auto check = validate(graph, td); !check)
        throw InputError("invalid tree decomposition: " + check.violation);

    TreeDecomposition balanced = balance(graph, td);
    NiceDecomposition nice = make_nice(graph, balanced);

    ApproxOutcome out;
    out.balanced_height = balanced.height();
    out.balanced_width = balanced.width();
    out.rounding_depth = rounding_depth(nice);
    const int rounds = std::max({1, out.balanced_height, out.rounding_depth});
    const double per_round = std::expm1(std::log1p(epsilon) / rounds);
    out.delta = std::min(default_delta(epsilon, graph.num_vertices()), per_round);

    const Real growth = Real(1) + Real(out.delta);
    const Real limit = Real(1) + Real(epsilon);
    if (pow(growth, out.balanced_height) > limit * (1 + 1e-12) ||
        pow(growth, out.rounding_depth) > limit * (1 + 1e-12))
        throw std::logic_error("rounding error bound violated");

    RoundedValueSet sigma = build_value_set_with_delta(deficiency, epsilon, out.delta);
    out.budget = sigma.cap;
    out.value_set_size = sigma.size();

    if (graph.num_vertices() == 0) {
        out.coloring = Coloring{};
        return out;
    }
    if (num_colors >= degeneracy(graph) + 1) {
        out.coloring = proper_coloring_by_degeneracy(graph);
        return out;
    }
    auto tables = detail::run_tables(graph, nice, num_colors, RoundedCounts{&sigma}, options.threads);
    if (tables.back().empty())
        return out;
    out.coloring = detail::reconstruct(nice, tables, graph.num_vertices());
    return out;
}

HalvingResult halve_local_search(const Graph& graph) {
    const int n = graph.num_vertices();
    HalvingResult r;
    r.coloring.color.assign(n, 1);
    std::vector<int> same(n);
    std::vector<int> pending;
    for (int v = 0; v < n; ++v) {
        same[v] = graph.degree(v);
        if (2 * same[v] > graph.degree(v))
            pending.push_back(v);
    }
    auto& color = r.coloring.color;
    while (!pending.empty()) {
        int v = pending.back();
        pending.pop_back();
        if (2 * same[v] <= graph.degree(v))
            continue;
        const int old = color[v];
        color[v] = 3 - old;
        same[v] = graph.degree(v) - same[v];
        ++r.flips;
        for (int w : graph.neighbors(v)) {
            if (color[w] == old) {
                --same[w];
            } else {
                ++same[w];
                if (2 * same[w] > graph.degree(w))
                    pending.push_back(w);
            }
        }
    }
    return r;
}

DoubleColorsOutcome solve_double_colors(const Graph& graph, const TreeDecomposition& td,
                                        int num_colors, int deficiency, DpOptions options) {
    if (num_colors < 1 || deficiency < 0)
        throw PreconditionError("need num_colors >= 1 and deficiency >= 0");
    if (auto check = validate(graph, td); !check)
        throw InputError("invalid tree decomposition: " + check.violation);
    DoubleColorsOutcome out;
    if (deficiency < 20) {
        out.exact_branch = true;
        out.coloring = solve_exact(graph, make_nice(graph, td), num_colors, deficiency, options);
        return out;
    }
    ApproxOutcome approx = solve_approx_deficiency(graph, td, num_colors, deficiency, 0.1, options);
    if (!approx.coloring)
        return out;
    Coloring c = std::move(*approx.coloring);
    const auto profile = deficiency_profile(graph, c);
    for (int col = 1; col <= num_colors; ++col) {
        std::vector<int> members;
        bool over = false;
        for (int v = 0; v < graph.num_vertices(); ++v)
            if (c[v] == col) {
                members.push_back(v);
                over = over || profile[v] > deficiency;
            }
        if (!over)
            continue;
        Graph part = graph.induced(members);
        HalvingResult halves = halve_local_search(part);
        for (std::size_t i = 0; i < members.size(); ++i)
            if (halves.coloring.color[i] == 2)
                c.color[members[i]] = num_colors + col;
    }
    out.coloring = std::move(c);
    return out;
}

Coloring greedy_defective(const Graph& graph, int deficiency) {
    const int n = graph.num_vertices();
    auto order = min_degree_elimination_order(graph);
    std::vector<int> color(n, 0), same(n, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int v = *it;
        for (int c = 1;; ++c) {
            int mine = 0;
            bool ok = true;
            for (int w : graph.neighbors(v))
                if (color[w] == c) {
                    ++mine;
                    ok = ok && same[w] < deficiency;
                }
            if (!ok || mine > deficiency)
                continue;
            color[v] = c;
            same[v] = mine;
            for (int w : graph.neighbors(v))
                same[w] += color[w] == c;
            break;
        }
    }
    return Coloring{color};
}

MinColorsOutcome minimize_colors(const Graph& graph, const TreeDecomposition& td, int deficiency,
                                 DpOptions options) {
    Coloring greedy = greedy_defective(graph, deficiency);
    const int upper = std::max(1, greedy.max_color());
    for (int k = 1;; ++k) {
        // every k' < k failed, so the optimum is >= k and the greedy coloring
        // is already within a factor 2
        if (2 * k >= upper)
            return {std::move(greedy), k};
        auto out = solve_double_colors(graph, td, k, deficiency, options);
        if (out.coloring)
            return {std::move(*out.coloring), k};
    }
}

} // namespace defco
