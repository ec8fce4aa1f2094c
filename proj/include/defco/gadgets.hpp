#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "defco/graph.hpp"

namespace defco {

inline constexpr std::int64_t kDefaultVertexCap = 1'000'000;

/// Multi-colored clique instance: k independent classes of n vertices each.
/// classes[i][j] is the vertex with index j+1 in class i+1.
struct MccInstance {
    Graph graph;
    int k = 0;
    int n = 0;
    std::vector<std::vector<int>> classes;
    /// planted[i] = index (1..n) chosen in class i+1
    std::optional<std::vector<int>> planted;

    /// Class (1..k) and index (1..n) of every vertex.
    std::vector<int> class_of() const;
    std::vector<int> index_of() const;
    int vertex(int cls, int index) const { return classes[cls - 1][index - 1]; }
};

/// Checks the class structure (partition, sizes, independence).
/// Throws InputError describing the first problem.
void validate_mcc(const MccInstance& mcc);

/// Cross-class edges with probability edge_prob; with `plant`, one index per
/// class is drawn and the clique on them is forced. Deterministic in seed.
MccInstance random_mcc(int k, int n, double edge_prob, std::uint64_t seed, bool plant);

/// True when clique[i] (1..n) picks pairwise adjacent vertices of the classes.
bool verify_clique(const MccInstance& mcc, const std::vector<int>& clique);

/// Vertex count of T(i,j), saturating at INT64_MAX.
std::int64_t tower_size(int i, int j);

/// T(1,j) = K1; T(i,j) = j+1 disjoint copies of T(i-1,j) plus a universal vertex.
/// level[v] is the recursion level (1 for the K1 copies, i for the top).
struct Tower {
    Graph graph;
    std::vector<int> level;
};
Tower build_tower(int i, int j, std::int64_t vertex_cap = kDefaultVertexCap);

enum class GadgetKind { equality, palette };

/// An attached gadget: endpoints in the host, the added tower copies, and the
/// level of every internal vertex inside its copy.
struct GadgetRecord {
    GadgetKind kind = GadgetKind::equality;
    std::vector<int> endpoints;
    std::vector<int> internals;
    std::vector<int> levels;
    int step = 0;
};

/// num_colors*deficiency+1 copies of T(num_colors-1, deficiency), each vertex
/// adjacent to both endpoints. Internals get role `role`.
GadgetRecord attach_equality(Graph& host, int v1, int v2, int num_colors, int deficiency,
                             const std::string& role = "eq");
/// C(num_colors,2)*deficiency+1 copies of T(num_colors-2, deficiency), each
/// vertex adjacent to the three endpoints.
GadgetRecord attach_palette(Graph& host, int v1, int v2, int v3, int num_colors, int deficiency,
                            const std::string& role = "pal");

std::int64_t equality_size(int num_colors, int deficiency);
std::int64_t palette_size(int num_colors, int deficiency);

/// Colors the internals of every gadget properly with colors not used by its
/// endpoints (endpoints must be colored already). Throws PreconditionError
/// when an equality gadget's endpoints differ or a palette's use three colors.
void extend_gadgets(const std::vector<GadgetRecord>& gadgets, int num_colors, Coloring& coloring);

enum class Construction { td, pw };
std::string to_string(Construction c);
Construction construction_from_string(const std::string& s);

/// Main (non-gadget) vertices the witness builders color directly.
struct EdgePart {
    int mcc_u = -1; ///< endpoint in the lower class
    int mcc_v = -1;
    std::vector<int> members; ///< the four independent sets
    int checker = -1;         ///< c_e / c_j
};

struct Layout {
    int p_a = -1;
    int p_b = -1;
    std::vector<std::vector<int>> choice;            ///< td: choice[i][l], l < 2n
    std::vector<std::vector<std::vector<int>>> grid; ///< pw: grid[i][j] = C_{i+1,j+1}
    std::vector<EdgePart> edges;                     ///< in edge-number order
};

struct GeneratedInstance {
    DefectiveInstance instance;
    Construction construction = Construction::td;
    MccInstance source;
    std::vector<GadgetRecord> gadgets;
    Layout layout;
    /// td with two colors: guards, transfers, p_A and p_B. Empty otherwise.
    std::vector<int> certificate;
};

/// m - C(k,2); throws PreconditionError when negative.
int hardness_deficiency(const MccInstance& mcc);

/// Exact vertex count the generators will produce (saturating).
std::int64_t predict_size(const MccInstance& mcc, int num_colors, Construction construction);

/// Both throw PreconditionError for num_colors < 2 or negative deficiency and
/// BudgetExceeded when predict_size exceeds vertex_cap.
GeneratedInstance build_hardness_td(const MccInstance& mcc, int num_colors,
                                    std::int64_t vertex_cap = kDefaultVertexCap);
GeneratedInstance build_hardness_pw(const MccInstance& mcc, int num_colors,
                                    std::int64_t vertex_cap = kDefaultVertexCap);
GeneratedInstance build_hardness(const MccInstance& mcc, int num_colors, Construction construction,
                                 std::int64_t vertex_cap = kDefaultVertexCap);

/// Colorings from a clique (clique[i] in 1..n). They need the deficiency to
/// be at least max(n, k) (td) or max(n, 3) (pw); below that the explicit
/// coloring overloads some vertex and PreconditionError is thrown, as for an
/// invalid clique.
Coloring witness_coloring_td(const GeneratedInstance& gen, const std::vector<int>& clique);
Coloring witness_coloring_pw(const GeneratedInstance& gen, const std::vector<int>& clique);
Coloring witness_coloring(const GeneratedInstance& gen, const std::vector<int>& clique);

/// Step number encoded in a role ("name@step"), or -1.
int role_step(const std::string& role);

} // namespace defco
