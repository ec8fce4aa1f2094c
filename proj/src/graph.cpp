#include "defco/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "defco/errors.hpp"

namespace defco {

Graph::Graph(int n) {
    if (n < 0)
        throw PreconditionError("negative vertex count");
    adj_.resize(static_cast<std::size_t>(n));
    roles_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= num_vertices())
        throw InputError("vertex " + std::to_string(v) + " out of range");
}

int Graph::add_vertex(std::string role) {
    adj_.emplace_back();
    roles_.push_back(std::move(role));
    return num_vertices() - 1;
}

namespace {
// Most insertions append (generators create vertices in increasing order).
void sorted_insert(std::vector<int>& list, int x) {
    if (list.empty() || list.back() < x) {
        list.push_back(x);
        return;
    }
    list.insert(std::lower_bound(list.begin(), list.end(), x), x);
}
} // namespace

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw InputError("self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v))
        throw InputError("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
    sorted_insert(adj_[static_cast<std::size_t>(u)], v);
    sorted_insert(adj_[static_cast<std::size_t>(v)], u);
    ++num_edges_;
}

bool Graph::has_edge(int u, int v) const {
    const auto& a = adj_[static_cast<std::size_t>(u)];
    const auto& b = adj_[static_cast<std::size_t>(v)];
    const auto& shorter = a.size() <= b.size() ? a : b;
    int target = a.size() <= b.size() ? v : u;
    return std::binary_search(shorter.begin(), shorter.end(), target);
}

int Graph::max_degree() const {
    int best = 0;
    for (const auto& list : adj_)
        best = std::max(best, static_cast<int>(list.size()));
    return best;
}

void Graph::set_role(int v, std::string role) {
    check_vertex(v);
    roles_[static_cast<std::size_t>(v)] = std::move(role);
}

int Graph::find_role(const std::string& role) const {
    auto it = std::find(roles_.begin(), roles_.end(), role);
    return it == roles_.end() ? -1 : static_cast<int>(it - roles_.begin());
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(num_edges_);
    for (int u = 0; u < num_vertices(); ++u)
        for (int v : neighbors(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(std::span<const int> vertices) const {
    std::vector<int> local(adj_.size(), -1);
    Graph sub(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        check_vertex(vertices[i]);
        local[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
        sub.roles_[i] = roles_[static_cast<std::size_t>(vertices[i])];
    }
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (int w : neighbors(vertices[i])) {
            int j = local[static_cast<std::size_t>(w)];
            if (j > static_cast<int>(i))
                sub.add_edge(static_cast<int>(i), j);
        }
    return sub;
}

int Coloring::max_color() const {
    return color.empty() ? 0 : *std::max_element(color.begin(), color.end());
}

int Coloring::distinct_colors() const {
    return static_cast<int>(std::set<int>(color.begin(), color.end()).size());
}

std::vector<int> deficiency_profile(const Graph& graph, const Coloring& coloring) {
    const int n = graph.num_vertices();
    if (coloring.size() < n)
        throw InputError("coloring misses vertex " + std::to_string(coloring.size()));
    if (coloring.size() > n)
        throw InputError("coloring mentions vertex " + std::to_string(n) +
                         " outside the graph");
    for (int v = 0; v < n; ++v)
        if (coloring[v] < 1)
            throw InputError("vertex " + std::to_string(v) + " has invalid color " +
                             std::to_string(coloring[v]));
    std::vector<int> profile(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        for (int w : graph.neighbors(v))
            if (coloring[w] == coloring[v])
                ++profile[static_cast<std::size_t>(v)];
    return profile;
}

VerificationReport verify(const Graph& graph, const Coloring& coloring, int num_colors,
                          int deficiency) {
    if (num_colors < 1 || deficiency < 0)
        throw PreconditionError("need num_colors >= 1 and deficiency >= 0");
    VerificationReport report;
    report.per_vertex_deficiency = deficiency_profile(graph, coloring);
    for (int v = 0; v < graph.num_vertices(); ++v)
        if (coloring[v] > num_colors)
            throw InputError("vertex " + std::to_string(v) + " has color " +
                             std::to_string(coloring[v]) + " outside 1.." +
                             std::to_string(num_colors));
    for (int v = 0; v < graph.num_vertices(); ++v) {
        int d = report.per_vertex_deficiency[static_cast<std::size_t>(v)];
        report.max_deficiency = std::max(report.max_deficiency, d);
        if (d > deficiency)
            report.violating_vertices.push_back(v);
    }
    report.valid = report.max_deficiency <= deficiency;
    return report;
}

VerificationReport verify(const DefectiveInstance& instance, const Coloring& coloring) {
    return verify(instance.graph, coloring, instance.num_colors, instance.deficiency);
}

std::vector<int> min_degree_elimination_order(const Graph& graph) {
    const int n = graph.num_vertices();
    std::vector<int> degree(static_cast<std::size_t>(n));
    std::set<std::pair<int, int>> queue;
    for (int v = 0; v < n; ++v) {
        degree[static_cast<std::size_t>(v)] = graph.degree(v);
        queue.emplace(graph.degree(v), v);
    }
    std::vector<bool> removed(static_cast<std::size_t>(n), false);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    while (!queue.empty()) {
        auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        removed[static_cast<std::size_t>(v)] = true;
        order.push_back(v);
        for (int w : graph.neighbors(v)) {
            if (removed[static_cast<std::size_t>(w)])
                continue;
            auto& dw = degree[static_cast<std::size_t>(w)];
            queue.erase({dw, w});
            --dw;
            queue.emplace(dw, w);
        }
    }
    return order;
}

int degeneracy(const Graph& graph) {
    auto order = min_degree_elimination_order(graph);
    std::vector<int> position(order.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        position[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    int best = 0;
    for (int v = 0; v < graph.num_vertices(); ++v) {
        int later = 0;
        for (int w : graph.neighbors(v))
            if (position[static_cast<std::size_t>(w)] > position[static_cast<std::size_t>(v)])
                ++later;
        best = std::max(best, later);
    }
    return best;
}

Coloring proper_coloring_by_degeneracy(const Graph& graph) {
    auto order = min_degree_elimination_order(graph);
    Coloring c;
    c.color.assign(static_cast<std::size_t>(graph.num_vertices()), 0);
    std::vector<bool> used;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        used.assign(static_cast<std::size_t>(graph.degree(v)) + 2, false);
        for (int w : graph.neighbors(v)) {
            int cw = c.color[static_cast<std::size_t>(w)];
            if (cw > 0 && cw < static_cast<int>(used.size()))
                used[static_cast<std::size_t>(cw)] = true;
        }
        int pick = 1;
        while (used[static_cast<std::size_t>(pick)])
            ++pick;
        c.color[static_cast<std::size_t>(v)] = pick;
    }
    return c;
}

namespace {
// Union-find cycle test on the graph restricted to vertices with keep[v].
bool acyclic_on(const Graph& graph, const std::vector<bool>& keep) {
    std::vector<int> parent(static_cast<std::size_t>(graph.num_vertices()));
    for (int v = 0; v < graph.num_vertices(); ++v)
        parent[static_cast<std::size_t>(v)] = v;
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            auto& p = parent[static_cast<std::size_t>(x)];
            p = parent[static_cast<std::size_t>(p)];
            x = p;
        }
        return x;
    };
    for (auto [u, v] : graph.edges()) {
        if (!keep[static_cast<std::size_t>(u)] || !keep[static_cast<std::size_t>(v)])
            continue;
        int a = find(u), b = find(v);
        if (a == b)
            return false;
        parent[static_cast<std::size_t>(a)] = b;
    }
    return true;
}

std::vector<bool> complement_mask(const Graph& graph, std::span<const int> removed) {
    std::vector<bool> keep(static_cast<std::size_t>(graph.num_vertices()), true);
    for (int v : removed) {
        if (v < 0 || v >= graph.num_vertices())
            throw InputError("vertex " + std::to_string(v) + " out of range");
        keep[static_cast<std::size_t>(v)] = false;
    }
    return keep;
}
} // namespace

bool is_forest(const Graph& graph) {
    return acyclic_on(graph, std::vector<bool>(static_cast<std::size_t>(graph.num_vertices()), true));
}

bool leaves_forest(const Graph& graph, std::span<const int> removed) {
    return acyclic_on(graph, complement_mask(graph, removed));
}

bool covers_all_edges(const Graph& graph, std::span<const int> cover) {
    auto keep = complement_mask(graph, cover);
    for (auto [u, v] : graph.edges())
        if (keep[static_cast<std::size_t>(u)] && keep[static_cast<std::size_t>(v)])
            return false;
    return true;
}

std::vector<int> two_color_forest(const Graph& graph, std::span<const int> removed, int first,
                                  int second) {
    auto keep = complement_mask(graph, removed);
    std::vector<int> color(static_cast<std::size_t>(graph.num_vertices()), 0);
    std::queue<int> q;
    for (int s = 0; s < graph.num_vertices(); ++s) {
        if (!keep[static_cast<std::size_t>(s)] || color[static_cast<std::size_t>(s)] != 0)
            continue;
        color[static_cast<std::size_t>(s)] = first;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            int other = color[static_cast<std::size_t>(v)] == first ? second : first;
            for (int w : graph.neighbors(v)) {
                if (!keep[static_cast<std::size_t>(w)])
                    continue;
                if (color[static_cast<std::size_t>(w)] == 0) {
                    color[static_cast<std::size_t>(w)] = other;
                    q.push(w);
                } else if (color[static_cast<std::size_t>(w)] != other) {
                    throw PreconditionError("remainder is not a forest");
                }
            }
        }
    }
    return color;
}

} // namespace defco
