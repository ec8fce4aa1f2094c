#include <algorithm>
#include <deque>

#include "defco/decomposition.hpp"
#include "defco/errors.hpp"

namespace defco {

namespace {

class FvsSearch {
public:
    FvsSearch(const Graph& g, SearchLimits limits) : g_(g), limits_(limits), alive_(g.num_vertices(), true) {}

    std::vector<int> run() {
        for (int k = 0; k <= limits_.max_size; ++k) {
            chosen_.clear();
            if (decide(alive_, k)) {
                std::sort(chosen_.begin(), chosen_.end());
                return chosen_;
            }
        }
        throw BudgetExceeded("feedback vertex set larger than cap " + std::to_string(limits_.max_size));
    }

private:
    // Deletes vertices of degree <= 1 until none remain.
    void prune(std::vector<bool>& alive) const {
        const int n = g_.num_vertices();
        std::vector<int> degree(n, 0);
        std::deque<int> low;
        for (int v = 0; v < n; ++v) {
            if (!alive[v])
                continue;
            for (int w : g_.neighbors(v))
                degree[v] += alive[w] ? 1 : 0;
            if (degree[v] <= 1)
                low.push_back(v);
        }
        while (!low.empty()) {
            int v = low.front();
            low.pop_front();
            if (!alive[v])
                continue;
            alive[v] = false;
            for (int w : g_.neighbors(v))
                if (alive[w] && --degree[w] == 1)
                    low.push_back(w);
        }
    }

    // Vertex set of a shortest closed walk found by BFS from every vertex; it
    // contains a cycle, so every feedback vertex set meets it.
    std::vector<int> short_cycle(const std::vector<bool>& alive) const {
        const int n = g_.num_vertices();
        std::vector<int> best;
        std::vector<int> dist(n), parent(n);
        for (int r = 0; r < n; ++r) {
            if (!alive[r])
                continue;
            std::fill(dist.begin(), dist.end(), -1);
            dist[r] = 0;
            parent[r] = -1;
            std::deque<int> queue{r};
            bool done = false;
            while (!queue.empty() && !done) {
                int u = queue.front();
                queue.pop_front();
                for (int w : g_.neighbors(u)) {
                    if (!alive[w] || w == parent[u])
                        continue;
                    if (dist[w] < 0) {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                        continue;
                    }
                    std::size_t len = static_cast<std::size_t>(dist[u] + dist[w] + 1);
                    if (best.empty() || len < best.size()) {
                        best.clear();
                        for (int x = u; x != -1; x = parent[x])
                            best.push_back(x);
                        for (int x = w; x != -1; x = parent[x])
                            best.push_back(x);
                        std::sort(best.begin(), best.end());
                        best.erase(std::unique(best.begin(), best.end()), best.end());
                    }
                    done = true;
                    break;
                }
            }
            if (best.size() == 3)
                break;
        }
        return best;
    }

    bool decide(std::vector<bool> alive, int k) {
        if (++nodes_ > limits_.max_nodes)
            throw BudgetExceeded("feedback vertex set search exceeded node budget");
        prune(alive);
        if (std::none_of(alive.begin(), alive.end(), [](bool b) { return b; }))
            return true;
        if (k == 0)
            return false;
        auto cycle = short_cycle(alive);
        std::sort(cycle.begin(), cycle.end(), [&](int a, int b) { return g_.degree(a) > g_.degree(b); });
        for (int v : cycle) {
            alive[v] = false;
            chosen_.push_back(v);
            if (decide(alive, k - 1))
                return true;
            chosen_.pop_back();
            alive[v] = true;
        }
        return false;
    }

    const Graph& g_;
    SearchLimits limits_;
    std::vector<bool> alive_;
    std::vector<int> chosen_;
    std::uint64_t nodes_ = 0;
};

class VcSearch {
public:
    VcSearch(const Graph& g, SearchLimits limits) : g_(g), limits_(limits) {}

    std::vector<int> run() {
        std::vector<bool> alive(g_.num_vertices(), true);
        for (int k = 0; k <= limits_.max_size; ++k) {
            chosen_.clear();
            if (decide(alive, k)) {
                std::sort(chosen_.begin(), chosen_.end());
                return chosen_;
            }
        }
        throw BudgetExceeded("vertex cover larger than cap " + std::to_string(limits_.max_size));
    }

private:
    int live_degree(const std::vector<bool>& alive, int v) const {
        int d = 0;
        for (int w : g_.neighbors(v))
            d += alive[w] ? 1 : 0;
        return d;
    }

    bool decide(std::vector<bool> alive, int k) {
        if (++nodes_ > limits_.max_nodes)
            throw BudgetExceeded("vertex cover search exceeded node budget");
        const std::size_t mark = chosen_.size();
        auto undo = [&] { chosen_.resize(mark); };
        // Degree-1 rule: taking the neighbor of a pendant vertex is always safe.
        for (bool again = true; again;) {
            again = false;
            for (int v = 0; v < g_.num_vertices(); ++v) {
                if (!alive[v] || live_degree(alive, v) != 1)
                    continue;
                int w = *std::find_if(g_.neighbors(v).begin(), g_.neighbors(v).end(),
                                      [&](int x) { return alive[x]; });
                if (k == 0) {
                    undo();
                    return false;
                }
                alive[w] = false;
                chosen_.push_back(w);
                --k;
                again = true;
            }
        }
        int best = -1, best_degree = 0, edges = 0;
        for (int v = 0; v < g_.num_vertices(); ++v) {
            if (!alive[v])
                continue;
            int d = live_degree(alive, v);
            edges += d;
            if (d > best_degree) {
                best = v;
                best_degree = d;
            }
        }
        edges /= 2;
        if (best < 0)
            return true;
        if (k == 0 || edges > k * best_degree) {
            undo();
            return false;
        }
        alive[best] = false;
        chosen_.push_back(best);
        if (decide(alive, k - 1))
            return true;
        chosen_.pop_back();
        alive[best] = true;
        if (best_degree <= k) {
            std::vector<int> nb;
            for (int w : g_.neighbors(best))
                if (alive[w])
                    nb.push_back(w);
            for (int w : nb) {
                alive[w] = false;
                chosen_.push_back(w);
            }
            if (decide(alive, k - best_degree))
                return true;
        }
        undo();
        return false;
    }

    const Graph& g_;
    SearchLimits limits_;
    std::vector<int> chosen_;
    std::uint64_t nodes_ = 0;
};

} // namespace

std::vector<int> exact_fvs(const Graph& graph, SearchLimits limits) {
    return FvsSearch(graph, limits).run();
}

std::vector<int> exact_vc(const Graph& graph, SearchLimits limits) {
    return VcSearch(graph, limits).run();
}

} // namespace defco
