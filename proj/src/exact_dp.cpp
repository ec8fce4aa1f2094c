#include "defco/exact_dp.hpp"

#include "defco/errors.hpp"
#include "detail/dp_engine.hpp"

namespace defco {

std::size_t SignatureHash::operator()(const Signature& s) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (const Slot& slot : s) {
        h ^= static_cast<std::size_t>(slot.color) * 0x9e3779b97f4a7c15ull + static_cast<std::size_t>(slot.value);
        h *= 0x100000001b3ull;
        h ^= h >> 29;
    }
    return h;
}

bool DpTable::insert(Signature signature, int left, int right) {
    auto [it, fresh] = index_.try_emplace(signature, static_cast<int>(entries_.size()));
    if (!fresh)
        return false;
    entries_.push_back({std::move(signature), left, right});
    return true;
}

bool DpTable::contains(const Signature& signature) const { return index_.count(signature) > 0; }

int DpTable::position(int v) const {
    auto it = std::lower_bound(bag_.begin(), bag_.end(), v);
    return it != bag_.end() && *it == v ? static_cast<int>(it - bag_.begin()) : -1;
}

DpTable table_leaf(int v, int num_colors) { return detail::leaf(v, num_colors); }

DpTable table_introduce(const DpTable& child, int v, int num_colors) {
    return detail::introduce(child, v, num_colors);
}

DpTable table_forget(const DpTable& child, int v, const Graph& graph, int deficiency) {
    return detail::forget(child, v, graph, detail::ExactCounts{deficiency});
}

DpTable table_join(const DpTable& left, const DpTable& right, int deficiency) {
    return detail::join(left, right, detail::ExactCounts{deficiency});
}

ExactDp::ExactDp(const Graph& graph, const NiceDecomposition& nice, int num_colors, int deficiency)
    : graph_(graph), nice_(nice), num_colors_(num_colors), deficiency_(deficiency) {
    if (num_colors < 1 || deficiency < 0)
        throw PreconditionError("need num_colors >= 1 and deficiency >= 0");
}

void ExactDp::run(DpOptions options) {
    tables_ = detail::run_tables(graph_, nice_, num_colors_, detail::ExactCounts{deficiency_},
                                 options.threads);
}

Coloring ExactDp::reconstruct() const {
    if (!feasible())
        throw PreconditionError("no root signature to reconstruct from");
    return detail::reconstruct(nice_, tables_, graph_.num_vertices());
}

std::optional<Coloring> solve_exact(const Graph& graph, const NiceDecomposition& nice,
                                    int num_colors, int deficiency, DpOptions options) {
    if (num_colors < 1 || deficiency < 0)
        throw PreconditionError("need num_colors >= 1 and deficiency >= 0");
    if (auto check = validate_nice(graph, nice); !check)
        throw InputError("invalid nice decomposition: " + check.violation);
    if (num_colors >= degeneracy(graph) + 1)
        return proper_coloring_by_degeneracy(graph);
    ExactDp dp(graph, nice, num_colors, deficiency);
    dp.run(options);
    if (!dp.feasible())
        return std::nullopt;
    return dp.reconstruct();
}

} // namespace defco
