#include <algorithm>
#include <deque>

#include "defco/decomposition.hpp"
#include "defco/errors.hpp"

namespace defco {

namespace {

// Connected part of the compressed decomposition tree still to be split.
// `portals` are its nodes adjacent to already-split nodes; there are at most two.
struct Piece {
    std::vector<int> nodes;
    std::vector<int> portals;
    int new_parent = -1;
};

class Balancer {
public:
    explicit Balancer(const TreeDecomposition& td) : td_(td), adj_(td.num_nodes()), mark_(td.num_nodes(), -1) {
        for (int t = 0; t < td.num_nodes(); ++t)
            if (td.parent[t] >= 0) {
                adj_[t].push_back(td.parent[t]);
                adj_[td.parent[t]].push_back(t);
            }
        scratch_size_.assign(td.num_nodes(), 0);
        scratch_parent_.assign(td.num_nodes(), -1);
        seen_.assign(td.num_nodes(), 0);
    }

    TreeDecomposition run() {
        std::vector<int> all(td_.num_nodes());
        for (int t = 0; t < td_.num_nodes(); ++t)
            all[t] = t;
        std::deque<Piece> queue;
        queue.push_back({all, {}, -1});
        while (!queue.empty()) {
            Piece piece = std::move(queue.front());
            queue.pop_front();
            split(piece, queue);
        }
        out_.root = 0;
        return std::move(out_);
    }

private:
    void split(const Piece& piece, std::deque<Piece>& queue) {
        const int id = next_id_++;
        for (int t : piece.nodes)
            mark_[t] = id;
        const int size = static_cast<int>(piece.nodes.size());
        int x = centroid(piece.nodes.front(), id, size);
        if (piece.portals.size() == 2)
            x = closest_on_path(piece.portals[0], piece.portals[1], x, id);

        std::vector<int> bag = td_.bags[x];
        for (int p : piece.portals) {
            std::vector<int> merged;
            std::set_union(bag.begin(), bag.end(), td_.bags[p].begin(), td_.bags[p].end(),
                           std::back_inserter(merged));
            bag = std::move(merged);
        }
        const int me = out_.num_nodes();
        out_.bags.push_back(std::move(bag));
        out_.parent.push_back(piece.new_parent);

        mark_[x] = -2; // split
        for (int y : adj_[x]) {
            if (mark_[y] != id)
                continue;
            Piece child;
            child.new_parent = me;
            const int child_id = next_id_++;
            std::vector<int> stack{y};
            mark_[y] = child_id;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                child.nodes.push_back(u);
                for (int w : adj_[u])
                    if (mark_[w] == id) {
                        mark_[w] = child_id;
                        stack.push_back(w);
                    }
            }
            for (int p : piece.portals)
                if (p != x && mark_[p] == child_id)
                    child.portals.push_back(p);
            if (std::find(child.portals.begin(), child.portals.end(), y) == child.portals.end())
                child.portals.push_back(y);
            queue.push_back(std::move(child));
        }
    }

    // Node whose removal leaves parts of size <= size/2.
    int centroid(int start, int id, int size) {
        std::vector<int> order{start};
        scratch_parent_[start] = -1;
        for (std::size_t i = 0; i < order.size(); ++i) {
            int u = order[i];
            for (int w : adj_[u])
                if (mark_[w] == id && w != scratch_parent_[u]) {
                    scratch_parent_[w] = u;
                    order.push_back(w);
                }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            int u = *it;
            scratch_size_[u] = 1;
            for (int w : adj_[u])
                if (mark_[w] == id && w != scratch_parent_[u])
                    scratch_size_[u] += scratch_size_[w];
        }
        for (int u : order) {
            int largest = size - scratch_size_[u];
            for (int w : adj_[u])
                if (mark_[w] == id && w != scratch_parent_[u])
                    largest = std::max(largest, scratch_size_[w]);
            if (2 * largest <= size)
                return u;
        }
        return start;
    }

    // Node on the p1..p2 path nearest to `target`.
    int closest_on_path(int p1, int p2, int target, int id) {
        std::vector<int> order{p1};
        scratch_parent_[p1] = -1;
        for (std::size_t i = 0; i < order.size(); ++i) {
            int u = order[i];
            for (int w : adj_[u])
                if (mark_[w] == id && w != scratch_parent_[u]) {
                    scratch_parent_[w] = u;
                    order.push_back(w);
                }
        }
        std::vector<int> on_path;
        for (int u = p2; u != -1; u = scratch_parent_[u])
            on_path.push_back(u);
        std::sort(on_path.begin(), on_path.end());
        auto on = [&](int u) { return std::binary_search(on_path.begin(), on_path.end(), u); };
        if (on(target))
            return target;
        ++stamp_;
        std::vector<int> frontier{target};
        seen_[target] = stamp_;
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            for (int w : adj_[frontier[i]]) {
                if (mark_[w] != id || seen_[w] == stamp_)
                    continue;
                if (on(w))
                    return w;
                seen_[w] = stamp_;
                frontier.push_back(w);
            }
        }
        return p1;
    }

    const TreeDecomposition& td_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> mark_;
    std::vector<int> scratch_size_;
    std::vector<int> scratch_parent_;
    std::vector<int> seen_;
    int stamp_ = 0;
    int next_id_ = 0;
    TreeDecomposition out_;
};

} // namespace

TreeDecomposition balance(const Graph& graph, const TreeDecomposition& td) {
    if (auto check = validate(graph, td); !check)
        throw InputError("invalid tree decomposition: " + check.violation);
    TreeDecomposition compact = compress(td);
    return Balancer(compact).run();
}

} // namespace defco
