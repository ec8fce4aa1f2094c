#pragma once

#include <optional>
#include <string>
#include <vector>

#include "defco/decomposition.hpp"
#include "defco/exact_dp.hpp"
#include "defco/graph.hpp"

namespace defco {

enum class Verdict { yes, no, unsupported };

struct StructuralResult {
    Verdict verdict = Verdict::no;
    std::optional<Coloring> coloring;
    /// Which case produced the answer, e.g. "degree-check" or "exact-dp".
    std::string route;
    /// The feedback vertex set / vertex cover that was used.
    std::vector<int> parameter_set;
};

/// Exact solver parameterized by a feedback vertex set. num_colors == 2 is
/// refused with Verdict::unsupported. A supplied set is checked and rejected
/// with PreconditionError when G minus it has a cycle; otherwise exact_fvs is
/// used (may throw BudgetExceeded).
StructuralResult solve_by_fvs(const Graph& graph, int num_colors, int deficiency,
                              const std::optional<std::vector<int>>& fvs = std::nullopt,
                              SearchLimits limits = {}, DpOptions options = {});

/// Exact solver parameterized by a vertex cover.
StructuralResult solve_by_vc(const Graph& graph, int num_colors, int deficiency,
                             const std::optional<std::vector<int>>& vc = std::nullopt,
                             SearchLimits limits = {}, DpOptions options = {});

/// Either a coloring with <= num_colors+1 colors and deficiency <= deficiency,
/// or Verdict::no, which then holds for (num_colors, deficiency). For two
/// colors the fvs solver runs with three.
StructuralResult approx_plus_one_fvs(const Graph& graph, int num_colors, int deficiency,
                                     SearchLimits limits = {}, DpOptions options = {});

} // namespace defco
