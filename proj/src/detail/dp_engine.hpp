#pragma once

// Signature DP over nice decompositions, parameterized by how same-color
// counts are stored and combined. ExactCounts keeps integers; the rounded
// arithmetic of the approximation scheme plugs in the same way.

#include <algorithm>
#include <condition_variable>
#include <map>
#include <mutex>
#include <thread>

#include "defco/errors.hpp"
#include "defco/exact_dp.hpp"

namespace defco::detail {

struct ExactCounts {
    int budget;

    bool can_forget(int value, int same_in_bag) const { return value + same_in_bag <= budget; }
    std::optional<int> increment(int value) const {
        return value + 1 <= budget ? std::optional<int>(value + 1) : std::nullopt;
    }
    std::optional<int> combine(int a, int b) const {
        return a + b <= budget ? std::optional<int>(a + b) : std::nullopt;
    }
};

inline DpTable leaf(int v, int num_colors) {
    DpTable table({v});
    for (int c = 1; c <= num_colors; ++c)
        table.insert({Slot{c, 0}});
    return table;
}

inline DpTable introduce(const DpTable& child, int v, int num_colors) {
    if (child.position(v) >= 0)
        throw PreconditionError("introduced vertex already in bag");
    std::vector<int> bag = child.bag();
    auto at = std::lower_bound(bag.begin(), bag.end(), v);
    const auto pos = at - bag.begin();
    bag.insert(at, v);
    DpTable table(std::move(bag));
    const auto& rows = child.entries();
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int c = 1; c <= num_colors; ++c) {
            Signature s = rows[i].signature;
            s.insert(s.begin() + pos, Slot{c, 0});
            table.insert(std::move(s), static_cast<int>(i));
        }
    return table;
}

template <class Arith>
DpTable forget(const DpTable& child, int v, const Graph& graph, const Arith& arith) {
    const int pos = child.position(v);
    if (pos < 0)
        throw PreconditionError("forgotten vertex not in bag");
    const auto& bag = child.bag();
    std::vector<int> bag_neighbor;
    for (int i = 0; i < static_cast<int>(bag.size()); ++i)
        if (i != pos && graph.has_edge(v, bag[i]))
            bag_neighbor.push_back(i);
    std::vector<int> new_bag = bag;
    new_bag.erase(new_bag.begin() + pos);
    DpTable table(std::move(new_bag));
    const auto& rows = child.entries();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const Signature& s = rows[r].signature;
        const Slot mine = s[pos];
        Signature next = s;
        int same = 0;
        bool ok = true;
        for (int i : bag_neighbor) {
            if (s[i].color != mine.color)
                continue;
            ++same;
            auto bumped = arith.increment(s[i].value);
            if (!bumped) {
                ok = false;
                break;
            }
            next[i].value = *bumped;
        }
        if (!ok || !arith.can_forget(mine.value, same))
            continue;
        next.erase(next.begin() + pos);
        table.insert(std::move(next), static_cast<int>(r));
    }
    return table;
}

template <class Arith>
DpTable join(const DpTable& left, const DpTable& right, const Arith& arith) {
    if (left.bag() != right.bag())
        throw PreconditionError("join of tables over different bags");
    const std::size_t width = left.bag().size();
    std::map<std::vector<int>, std::vector<int>> by_colors;
    const auto& rrows = right.entries();
    for (std::size_t r = 0; r < rrows.size(); ++r) {
        std::vector<int> key(width);
        for (std::size_t i = 0; i < width; ++i)
            key[i] = rrows[r].signature[i].color;
        by_colors[key].push_back(static_cast<int>(r));
    }
    DpTable table(left.bag());
    const auto& lrows = left.entries();
    std::vector<int> key(width);
    for (std::size_t l = 0; l < lrows.size(); ++l) {
        const Signature& a = lrows[l].signature;
        for (std::size_t i = 0; i < width; ++i)
            key[i] = a[i].color;
        auto it = by_colors.find(key);
        if (it == by_colors.end())
            continue;
        for (int r : it->second) {
            const Signature& b = rrows[r].signature;
            Signature merged = a;
            bool ok = true;
            for (std::size_t i = 0; i < width && ok; ++i) {
                auto sum = arith.combine(a[i].value, b[i].value);
                if (sum)
                    merged[i].value = *sum;
                else
                    ok = false;
            }
            if (ok)
                table.insert(std::move(merged), static_cast<int>(l), r);
        }
    }
    return table;
}

template <class Arith>
DpTable compute_node(const NiceDecomposition& nice, const std::vector<DpTable>& tables, int t,
                     const Graph& graph, int num_colors, const Arith& arith) {
    const NiceNode& node = nice.nodes[t];
    switch (node.kind) {
    case NodeKind::leaf:
        if (node.bag.empty()) {
            DpTable empty_bag(std::vector<int>{});
            empty_bag.insert({});
            return empty_bag;
        }
        return leaf(node.bag.front(), num_colors);
    case NodeKind::introduce:
        return introduce(tables[node.children[0]], node.vertex, num_colors);
    case NodeKind::forget:
        return forget(tables[node.children[0]], node.vertex, graph, arith);
    case NodeKind::join:
        return join(tables[node.children[0]], tables[node.children[1]], arith);
    }
    return {};
}

/// Fills one table per nice node. With threads > 1, a node is scheduled once
/// both children are sealed; each table has exactly one writer.
template <class Arith>
std::vector<DpTable> run_tables(const Graph& graph, const NiceDecomposition& nice, int num_colors,
                                const Arith& arith, int threads) {
    const int count = static_cast<int>(nice.nodes.size());
    std::vector<DpTable> tables(count);
    if (threads <= 1) {
        for (int t = 0; t < count; ++t)
            tables[t] = compute_node(nice, tables, t, graph, num_colors, arith);
        return tables;
    }
    std::vector<int> parent(count, -1), pending(count, 0);
    std::vector<int> ready;
    for (int t = 0; t < count; ++t) {
        pending[t] = static_cast<int>(nice.nodes[t].children.size());
        for (int c : nice.nodes[t].children)
            parent[c] = t;
        if (pending[t] == 0)
            ready.push_back(t);
    }
    std::mutex mutex;
    std::condition_variable wake;
    int finished = 0;
    std::exception_ptr failure;
    auto worker = [&] {
        std::unique_lock lock(mutex);
        while (true) {
            wake.wait(lock, [&] { return !ready.empty() || finished == count || failure; });
            if (finished == count || failure)
                return;
            int t = ready.back();
            ready.pop_back();
            lock.unlock();
            DpTable result;
            try {
                result = compute_node(nice, tables, t, graph, num_colors, arith);
            } catch (...) {
                lock.lock();
                failure = std::current_exception();
                wake.notify_all();
                return;
            }
            lock.lock();
            tables[t] = std::move(result);
            ++finished;
            if (parent[t] >= 0 && --pending[parent[t]] == 0)
                ready.push_back(parent[t]);
            wake.notify_all();
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i)
        pool.emplace_back(worker);
    for (auto& th : pool)
        th.join();
    if (failure)
        std::rethrow_exception(failure);
    return tables;
}

/// Walks back-references from the first root row down to every leaf.
inline Coloring reconstruct(const NiceDecomposition& nice, const std::vector<DpTable>& tables,
                            int num_vertices) {
    Coloring c;
    c.color.assign(num_vertices, 0);
    if (num_vertices == 0)
        return c;
    std::vector<std::pair<int, int>> stack{{nice.root(), 0}};
    while (!stack.empty()) {
        auto [t, row] = stack.back();
        stack.pop_back();
        const DpEntry& e = tables[t].entries()[row];
        const auto& bag = tables[t].bag();
        for (std::size_t i = 0; i < bag.size(); ++i)
            c.color[bag[i]] = e.signature[i].color;
        const auto& kids = nice.nodes[t].children;
        if (kids.size() >= 1)
            stack.emplace_back(kids[0], e.left);
        if (kids.size() == 2)
            stack.emplace_back(kids[1], e.right);
    }
    return c;
}

} // namespace defco::detail
