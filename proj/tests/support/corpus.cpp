#include "corpus.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace defco::testing {

Graph random_graph(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                g.add_edge(u, v);
    return g;
}

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

Graph cycle(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v)
        g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

Graph star(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v)
        g.add_edge(0, v);
    return g;
}

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

Graph edgeless(int n) { return Graph(n); }

std::vector<CorpusGraph> random_corpus(int count, int min_n, int max_n, std::uint64_t base_seed) {
    static const double probs[] = {0.2, 0.5, 0.8};
    std::vector<CorpusGraph> out;
    for (int i = 0; i < count; ++i) {
        const int n = min_n + i % (max_n - min_n + 1);
        const double p = probs[(i / (max_n - min_n + 1)) % 3];
        const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(i);
        out.push_back({"G(" + std::to_string(n) + "," + std::to_string(p).substr(0, 3) + ")#" +
                           std::to_string(seed),
                       random_graph(n, p, seed)});
    }
    return out;
}

Graph permuted(const Graph& g, std::uint64_t seed) {
    std::vector<int> perm(g.num_vertices());
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h(g.num_vertices());
    for (auto [u, v] : g.edges())
        h.add_edge(perm[u], perm[v]);
    return h;
}

} // namespace defco::testing
