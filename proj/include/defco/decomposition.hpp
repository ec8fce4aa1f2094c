#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "defco/graph.hpp"

namespace defco {

/// Rooted tree decomposition. Bags are sorted vertex lists; `parent[root] == -1`.
struct TreeDecomposition {
    std::vector<std::vector<int>> bags;
    std::vector<int> parent;
    int root = 0;

    int num_nodes() const { return static_cast<int>(bags.size()); }
    /// Largest bag size minus one (-1 for a decomposition without vertices).
    int width() const;
    /// Number of nodes on the longest root-to-leaf path.
    int height() const;
    std::vector<std::vector<int>> children() const;
};

/// Result of `validate`: empty `violation` means the decomposition is valid.
struct ValidationResult {
    std::string violation;
    bool ok() const { return violation.empty(); }
    explicit operator bool() const { return ok(); }
};

/// Checks the tree shape and the three decomposition axioms (vertex coverage,
/// edge coverage, connectivity of each vertex's bags). Reports the first failure.
ValidationResult validate(const Graph& graph, const TreeDecomposition& td);

enum class EliminationStrategy { min_degree, min_fill };

/// Decomposition from a greedy elimination order. Width is only an upper bound
/// on the treewidth.
TreeDecomposition heuristic_decomposition(const Graph& graph,
                                          EliminationStrategy strategy = EliminationStrategy::min_degree);

/// Decomposition of width <= |s|+1 for a graph whose remainder after deleting
/// `s` is a forest: `s` is added to every bag of a width-1 decomposition of the
/// forest. Throws PreconditionError otherwise.
TreeDecomposition from_separator(const Graph& graph, const std::vector<int>& separator);

/// Merges every node into a neighbor whose bag contains it. Width is unchanged;
/// afterwards the node count is at most max(1, n).
TreeDecomposition compress(const TreeDecomposition& td);

/// Upper bound factor on balanced height used by `balance`:
/// height <= kBalanceHeightConstant * (1 + log2 n).
inline constexpr int kBalanceHeightConstant = 3;

/// Rebuilds a valid decomposition of width <= 3w+2 and logarithmic height.
/// Recursively splits the decomposition tree at a node chosen so that each
/// remaining piece touches at most two already-split nodes; the new bag is the
/// split node's bag joined with the bags of those (at most two) boundary nodes.
TreeDecomposition balance(const Graph& graph, const TreeDecomposition& td);

enum class NodeKind : std::uint8_t { leaf, introduce, forget, join };

struct NiceNode {
    NodeKind kind = NodeKind::leaf;
    int vertex = -1; ///< introduced / forgotten vertex
    std::vector<int> bag;
    std::vector<int> children;
};

/// Nice tree decomposition; nodes are stored in post-order (children first), so
/// the root is the last node.
struct NiceDecomposition {
    std::vector<NiceNode> nodes;

    int root() const { return static_cast<int>(nodes.size()) - 1; }
    int width() const;
    int height() const;
    TreeDecomposition as_tree() const;
};

/// Converts a valid decomposition into nice form of identical width. Leaf and
/// root bags have size one (except for the empty graph, whose only node is an
/// empty leaf).
NiceDecomposition make_nice(const Graph& graph, const TreeDecomposition& td);

/// Validates the underlying decomposition plus the nice-form node rules.
ValidationResult validate_nice(const Graph& graph, const NiceDecomposition& nice);

/// Caps for the exact branching searches below.
struct SearchLimits {
    int max_size = 20;
    std::uint64_t max_nodes = 20'000'000;
};

/// Minimum feedback vertex set by iterative deepening over short-cycle
/// branching. Throws BudgetExceeded beyond the limits.
std::vector<int> exact_fvs(const Graph& graph, SearchLimits limits = {});

/// Minimum vertex cover by degree-1 reduction and max-degree branching.
std::vector<int> exact_vc(const Graph& graph, SearchLimits limits = {});

} // namespace defco
