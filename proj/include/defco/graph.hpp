#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace defco {

/// Undirected simple graph over vertices 0..n-1.
///
/// Adjacency lists are kept sorted so that `has_edge` is a binary search.
/// Every vertex carries an optional role label; generators use it to name
/// construction vertices (palette, choice, checker, ...).
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    /// Builds a graph from an edge list. Throws InputError on self-loops,
    /// parallel edges and out-of-range endpoints.
    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

    int num_vertices() const { return static_cast<int>(adj_.size()); }
    std::size_t num_edges() const { return num_edges_; }

    int add_vertex(std::string role = {});
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;

    std::span<const int> neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    int max_degree() const;

    const std::string& role(int v) const { return roles_[static_cast<std::size_t>(v)]; }
    void set_role(int v, std::string role);
    /// First vertex whose role equals `role`, or -1.
    int find_role(const std::string& role) const;

    std::vector<std::pair<int, int>> edges() const;

    /// Subgraph induced by `vertices` (relabelled 0..k-1 in the given order).
    Graph induced(std::span<const int> vertices) const;

private:
    void check_vertex(int v) const;

    std::vector<std::vector<int>> adj_;
    std::vector<std::string> roles_;
    std::size_t num_edges_ = 0;
};

/// A graph together with the target pair (number of colors, deficiency budget).
struct DefectiveInstance {
    Graph graph;
    int num_colors = 1;
    int deficiency = 0;
};

/// Total map vertex -> color in 1..num_colors.
struct Coloring {
    std::vector<int> color;

    int size() const { return static_cast<int>(color.size()); }
    int operator[](int v) const { return color[static_cast<std::size_t>(v)]; }
    int max_color() const;
    int distinct_colors() const;
};

struct VerificationReport {
    bool valid = false;
    std::vector<int> per_vertex_deficiency;
    int max_deficiency = 0;
    std::vector<int> violating_vertices;
};

/// Number of same-colored neighbors of every vertex. Throws InputError when the
/// coloring does not cover the graph or uses a color < 1.
std::vector<int> deficiency_profile(const Graph& graph, const Coloring& coloring);

/// Checks a coloring against (num_colors, deficiency). Colors outside
/// 1..num_colors are input errors, not verification failures.
VerificationReport verify(const Graph& graph, const Coloring& coloring, int num_colors,
                          int deficiency);
VerificationReport verify(const DefectiveInstance& instance, const Coloring& coloring);

/// Vertex order obtained by repeatedly deleting a vertex of minimum degree.
std::vector<int> min_degree_elimination_order(const Graph& graph);

/// Max over the elimination of the degree of the removed vertex.
int degeneracy(const Graph& graph);

/// Greedy proper coloring along the reversed min-degree elimination order;
/// uses at most degeneracy+1 colors.
Coloring proper_coloring_by_degeneracy(const Graph& graph);

/// True when the graph has no cycle.
bool is_forest(const Graph& graph);

/// True when `removed` meets every cycle / every edge of the graph.
bool leaves_forest(const Graph& graph, std::span<const int> removed);
bool covers_all_edges(const Graph& graph, std::span<const int> cover);

/// Proper 2-coloring (colors `first`, `second`) of the forest G - removed, BFS
/// per component. Entries for removed vertices are left 0.
std::vector<int> two_color_forest(const Graph& graph, std::span<const int> removed, int first,
                                  int second);

} // namespace defco
