#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "defco/decomposition.hpp"
#include "defco/exact_dp.hpp"
#include "defco/graph.hpp"

namespace defco {

/// Sigma = {0} u {(1+delta)^i : (1+delta)^i <= (1+eps) * deficiency}.
///
/// Index 0 stands for the value 0, index i+1 for (1+delta)^i. Counts are
/// integers, so every member is compared through its floor: an integer x is
/// at most (1+delta)^i exactly when it is at most floor((1+delta)^i).
struct RoundedValueSet {
    double epsilon = 0;
    double delta = 0;
    int deficiency = 0;
    /// Largest integer deficiency a coloring may reach: floor((1+eps) * deficiency).
    int cap = 0;
    /// floor of each member, by index (nondecreasing).
    std::vector<std::int64_t> floor_value;

    int size() const { return static_cast<int>(floor_value.size()); }
    std::int64_t value(int index) const { return floor_value[static_cast<std::size_t>(index)]; }
    /// Smallest member >= x (as an index), or nullopt past the cap.
    std::optional<int> round_up(std::int64_t x) const;
};

/// delta = eps / (log2 max(n,4))^2, clamped to <= 1. Throws PreconditionError
/// for eps <= 0 or deficiency < 0.
double default_delta(double epsilon, int n);
RoundedValueSet build_value_set(int deficiency, double epsilon, int n);
RoundedValueSet build_value_set_with_delta(int deficiency, double epsilon, double delta);

/// Largest number of forget and join nodes on a root-to-leaf path; every
/// stored value is rounded at most this many times.
int rounding_depth(const NiceDecomposition& nice);

struct ApproxOutcome {
    std::optional<Coloring> coloring;
    /// floor((1+eps) * deficiency); returned colorings are valid for it.
    int budget = 0;
    double delta = 0;
    int balanced_height = 0;
    int balanced_width = 0;
    int rounding_depth = 0;
    int value_set_size = 0;
};

/// balance -> make_nice -> DP over rounded values. Returns either a coloring
/// with deficiency <= floor((1+eps) * deficiency) or nothing, in which case the
/// graph has no (num_colors, deficiency)-coloring. delta is shrunk below the
/// default so that (1+delta)^k <= 1+eps for the balanced height and the
/// rounding depth. Throws InputError on an invalid decomposition.
ApproxOutcome solve_approx_deficiency(const Graph& graph, const TreeDecomposition& td,
                                      int num_colors, int deficiency, double epsilon,
                                      DpOptions options = {});

struct HalvingResult {
    Coloring coloring; ///< colors 1 and 2
    std::int64_t flips = 0;
};

/// Local search from the all-1 coloring: flip any vertex with more than half
/// of its neighbors in its own color. Every flip grows the cut, so there are
/// at most |E| of them.
HalvingResult halve_local_search(const Graph& graph);

struct DoubleColorsOutcome {
    std::optional<Coloring> coloring;
    bool exact_branch = false;
};

/// Either a coloring with <= 2*num_colors colors and deficiency <= deficiency,
/// or nothing when no (num_colors, deficiency)-coloring exists. Small budgets
/// (< 20) go to the exact DP; larger ones use the approximation with eps=1/10
/// and split the over-full classes with halve_local_search.
DoubleColorsOutcome solve_double_colors(const Graph& graph, const TreeDecomposition& td,
                                        int num_colors, int deficiency, DpOptions options = {});

/// Greedy along the reversed min-degree elimination order: each vertex takes
/// the smallest color keeping it and its colored neighbors within deficiency.
Coloring greedy_defective(const Graph& graph, int deficiency);

/// Tries num_colors = 1, 2, ... with solve_double_colors and stops at the
/// first success, or as soon as the greedy coloring is provably within a
/// factor 2. Either way at most twice the minimum number of colors is used.
struct MinColorsOutcome {
    Coloring coloring;
    int tried_colors = 0;
};
MinColorsOutcome minimize_colors(const Graph& graph, const TreeDecomposition& td, int deficiency,
                                 DpOptions options = {});

} // namespace defco
