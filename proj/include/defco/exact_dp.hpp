#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "defco/decomposition.hpp"
#include "defco/graph.hpp"

namespace defco {

/// Per bag vertex: its color and how many already-forgotten neighbors share it.
/// For the approximation DP `value` is an index into a rounded value set.
struct Slot {
    int color = 0;
    int value = 0;
    friend bool operator==(const Slot&, const Slot&) = default;
};

/// Signature of a partial solution; slot i belongs to the i-th vertex of the
/// (sorted) bag.
using Signature = std::vector<Slot>;

struct SignatureHash {
    std::size_t operator()(const Signature& s) const noexcept;
};

/// One DP table row. `left`/`right` point at the child rows it was built from
/// (-1 when unused) and drive reconstruction.
struct DpEntry {
    Signature signature;
    int left = -1;
    int right = -1;
};

/// Deduplicated set of signatures over a fixed bag. The first witness inserted
/// for a signature is the one kept.
class DpTable {
public:
    DpTable() = default;
    explicit DpTable(std::vector<int> bag) : bag_(std::move(bag)) {}

    const std::vector<int>& bag() const { return bag_; }
    const std::vector<DpEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    /// Returns false when the signature was already present.
    bool insert(Signature signature, int left = -1, int right = -1);
    bool contains(const Signature& signature) const;
    /// Index of the bag vertex `v`, or -1.
    int position(int v) const;

private:
    std::vector<int> bag_;
    std::vector<DpEntry> entries_;
    std::unordered_map<Signature, int, SignatureHash> index_;
};

DpTable table_leaf(int v, int num_colors);
DpTable table_introduce(const DpTable& child, int v, int num_colors);
DpTable table_forget(const DpTable& child, int v, const Graph& graph, int deficiency);
DpTable table_join(const DpTable& left, const DpTable& right, int deficiency);

struct DpOptions {
    /// Worker threads for subtree-parallel table computation (1 = sequential).
    int threads = 1;
};

/// Runs the exact signature DP over every node of a nice decomposition and
/// keeps all tables (needed for reconstruction and inspection).
class ExactDp {
public:
    ExactDp(const Graph& graph, const NiceDecomposition& nice, int num_colors, int deficiency);

    void run(DpOptions options = {});
    const DpTable& table(int node) const { return tables_[node]; }
    bool feasible() const { return !tables_.empty() && !tables_.back().empty(); }
    /// A coloring matching some root signature; requires feasible().
    Coloring reconstruct() const;

private:
    const Graph& graph_;
    const NiceDecomposition& nice_;
    int num_colors_;
    int deficiency_;
    std::vector<DpTable> tables_;
};

/// Decides (num_colors, deficiency)-colorability and returns a certificate.
/// Colorings with num_colors >= degeneracy+1 are returned directly from the
/// greedy proper coloring. Throws InputError on an invalid decomposition.
std::optional<Coloring> solve_exact(const Graph& graph, const NiceDecomposition& nice,
                                    int num_colors, int deficiency, DpOptions options = {});

} // namespace defco
