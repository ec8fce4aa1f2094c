#pragma once

#include <optional>

#include "defco/graph.hpp"

namespace defco {

/// Largest vertex count the brute force accepts, per number of colors.
/// One color is a degree check and never refused.
struct OracleBudget {
    int max_n_two_colors = 16;
    int max_n_more_colors = 12;

    /// Defaults, overridden by DEFCO_BUDGET="<n>" (both caps) or "<n2>,<n3>".
    static OracleBudget from_env();
    bool allows(int n, int num_colors) const;
};

/// Exhaustive search: vertices by descending degree, a branch dies as soon as
/// some vertex has more than `deficiency` same-colored neighbors, and a new
/// color is only opened once all smaller ones are in use. Throws
/// BudgetExceeded instead of guessing on graphs above the budget.
std::optional<Coloring> brute_force_decide(const Graph& graph, int num_colors, int deficiency,
                                           OracleBudget budget = OracleBudget::from_env());

/// Smallest deficiency admitting a num_colors-coloring (binary search).
int min_deficiency(const Graph& graph, int num_colors, OracleBudget budget = OracleBudget::from_env());

/// Smallest number of colors admitting the given deficiency.
int min_colors(const Graph& graph, int deficiency, OracleBudget budget = OracleBudget::from_env());

} // namespace defco
