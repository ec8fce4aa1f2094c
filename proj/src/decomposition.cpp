#include "defco/decomposition.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <tuple>

#include "defco/errors.hpp"

namespace defco {

namespace {

bool contains(const std::vector<int>& sorted, int x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<int> set_difference(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::string vertex_name(int v) { return std::to_string(v + 1); }

} // namespace

int TreeDecomposition::width() const {
    std::size_t largest = 0;
    for (const auto& bag : bags)
        largest = std::max(largest, bag.size());
    return static_cast<int>(largest) - 1;
}

std::vector<std::vector<int>> TreeDecomposition::children() const {
    std::vector<std::vector<int>> kids(bags.size());
    for (int t = 0; t < num_nodes(); ++t)
        if (parent[t] >= 0)
            kids[parent[t]].push_back(t);
    return kids;
}

int TreeDecomposition::height() const {
    if (bags.empty())
        return 0;
    auto kids = children();
    int best = 0;
    std::vector<std::pair<int, int>> stack{{root, 1}};
    while (!stack.empty()) {
        auto [t, depth] = stack.back();
        stack.pop_back();
        best = std::max(best, depth);
        for (int c : kids[t])
            stack.emplace_back(c, depth + 1);
    }
    return best;
}

ValidationResult validate(const Graph& graph, const TreeDecomposition& td) {
    const int n = graph.num_vertices();
    const int nodes = td.num_nodes();
    if (nodes == 0)
        return {"decomposition has no nodes"};
    if (static_cast<int>(td.parent.size()) != nodes)
        return {"parent array size differs from bag count"};
    if (td.root < 0 || td.root >= nodes || td.parent[td.root] != -1)
        return {"root node " + std::to_string(td.root) + " is not a parentless node"};
    for (int t = 0; t < nodes; ++t) {
        if (t != td.root && (td.parent[t] < 0 || td.parent[t] >= nodes))
            return {"node " + std::to_string(t) + " has no valid parent"};
        const auto& bag = td.bags[t];
        for (std::size_t i = 0; i < bag.size(); ++i) {
            if (bag[i] < 0 || bag[i] >= n)
                return {"bag " + std::to_string(t) + " holds unknown vertex " + std::to_string(bag[i])};
            if (i > 0 && bag[i - 1] >= bag[i])
                return {"bag " + std::to_string(t) + " is not a sorted set"};
        }
    }
    // Every node must reach the root without revisiting a node.
    std::vector<int> state(nodes, 0); // 0 unseen, 1 on current walk, 2 reaches root
    state[td.root] = 2;
    for (int t = 0; t < nodes; ++t) {
        std::vector<int> walk;
        int cur = t;
        while (state[cur] == 0) {
            state[cur] = 1;
            walk.push_back(cur);
            cur = td.parent[cur];
        }
        if (state[cur] == 1)
            return {"parent pointers form a cycle through node " + std::to_string(cur)};
        for (int w : walk)
            state[w] = 2;
    }

    std::vector<std::vector<int>> nodes_of(n);
    for (int t = 0; t < nodes; ++t)
        for (int v : td.bags[t])
            nodes_of[v].push_back(t);
    for (int v = 0; v < n; ++v)
        if (nodes_of[v].empty())
            return {"vertex coverage: vertex " + vertex_name(v) + " is in no bag"};
    for (auto [u, v] : graph.edges()) {
        const auto& a = nodes_of[u].size() <= nodes_of[v].size() ? nodes_of[u] : nodes_of[v];
        int other = nodes_of[u].size() <= nodes_of[v].size() ? v : u;
        bool covered = std::any_of(a.begin(), a.end(),
                                   [&](int t) { return contains(td.bags[t], other); });
        if (!covered)
            return {"edge coverage: edge " + vertex_name(u) + "-" + vertex_name(v) +
                    " lies in no common bag"};
    }
    for (int v = 0; v < n; ++v) {
        int tops = 0;
        for (int t : nodes_of[v])
            if (td.parent[t] < 0 || !contains(td.bags[td.parent[t]], v))
                ++tops;
        if (tops != 1)
            return {"connectivity: bags containing vertex " + vertex_name(v) + " form " +
                    std::to_string(tops) + " separate subtrees"};
    }
    return {};
}

TreeDecomposition compress(const TreeDecomposition& td) {
    const int nodes = td.num_nodes();
    if (nodes <= 1)
        return td;
    std::vector<std::set<int>> adj(nodes);
    for (int t = 0; t < nodes; ++t)
        if (td.parent[t] >= 0) {
            adj[t].insert(td.parent[t]);
            adj[td.parent[t]].insert(t);
        }
    std::vector<int> merged_into(nodes, -1);
    std::deque<int> work;
    for (int t = 0; t < nodes; ++t)
        work.push_back(t);
    while (!work.empty()) {
        int u = work.front();
        work.pop_front();
        if (merged_into[u] >= 0)
            continue;
        int target = -1;
        for (int w : adj[u])
            if (is_subset(td.bags[u], td.bags[w])) {
                target = w;
                break;
            }
        if (target < 0)
            continue;
        merged_into[u] = target;
        adj[target].erase(u);
        for (int w : adj[u]) {
            if (w == target)
                continue;
            adj[w].erase(u);
            adj[w].insert(target);
            adj[target].insert(w);
            work.push_back(w);
        }
        adj[u].clear();
        work.push_back(target);
    }
    auto resolve = [&](int t) {
        while (merged_into[t] >= 0)
            t = merged_into[t];
        return t;
    };
    int new_root_old = resolve(td.root);
    TreeDecomposition out;
    std::vector<int> index(nodes, -1);
    std::vector<int> order{new_root_old};
    index[new_root_old] = 0;
    out.bags.push_back(td.bags[new_root_old]);
    out.parent.push_back(-1);
    for (std::size_t i = 0; i < order.size(); ++i) {
        int u = order[i];
        for (int w : adj[u]) {
            if (index[w] >= 0)
                continue;
            index[w] = static_cast<int>(order.size());
            order.push_back(w);
            out.bags.push_back(td.bags[w]);
            out.parent.push_back(index[u]);
        }
    }
    out.root = 0;
    return out;
}

TreeDecomposition heuristic_decomposition(const Graph& graph, EliminationStrategy strategy) {
    const int n = graph.num_vertices();
    TreeDecomposition td;
    if (n == 0) {
        td.bags.emplace_back();
        td.parent.push_back(-1);
        return td;
    }
    std::vector<std::set<int>> adj(n);
    for (int v = 0; v < n; ++v)
        adj[v].insert(graph.neighbors(v).begin(), graph.neighbors(v).end());
    std::vector<bool> eliminated(n, false);
    std::vector<int> position(n, -1);
    std::vector<std::vector<int>> bag_of(n);

    auto fill_in = [&](int v) {
        long long missing = 0;
        for (auto a = adj[v].begin(); a != adj[v].end(); ++a)
            for (auto b = std::next(a); b != adj[v].end(); ++b)
                if (!adj[*a].count(*b))
                    ++missing;
        return missing;
    };

    std::set<std::pair<int, int>> by_degree;
    if (strategy == EliminationStrategy::min_degree)
        for (int v = 0; v < n; ++v)
            by_degree.emplace(static_cast<int>(adj[v].size()), v);

    // min-fill keys are (fill, degree, v); above kExactDegree the fill is
    // replaced by its upper bound C(deg, 2), so hubs go late and stay cheap
    constexpr std::size_t kExactDegree = 128;
    using Key = std::tuple<long long, int, int>;
    std::set<Key> by_fill;
    std::vector<Key> key_of(n);
    auto score = [&](int v) -> Key {
        const long long d = static_cast<long long>(adj[v].size());
        return {adj[v].size() <= kExactDegree ? fill_in(v) : d * (d - 1) / 2, static_cast<int>(d), v};
    };
    auto rescore = [&](int v) {
        by_fill.erase(key_of[v]);
        key_of[v] = score(v);
        by_fill.insert(key_of[v]);
    };
    if (strategy == EliminationStrategy::min_fill)
        for (int v = 0; v < n; ++v) {
            key_of[v] = score(v);
            by_fill.insert(key_of[v]);
        }

    std::vector<int> order;
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        if (strategy == EliminationStrategy::min_degree) {
            pick = by_degree.begin()->second;
            by_degree.erase(by_degree.begin());
        } else {
            pick = std::get<2>(*by_fill.begin());
            by_fill.erase(by_fill.begin());
        }
        eliminated[pick] = true;
        position[pick] = step;
        order.push_back(pick);
        std::vector<int> nb(adj[pick].begin(), adj[pick].end());
        bag_of[pick] = nb;
        bag_of[pick].insert(std::lower_bound(bag_of[pick].begin(), bag_of[pick].end(), pick), pick);

        if (strategy == EliminationStrategy::min_degree)
            for (int w : nb)
                by_degree.erase({static_cast<int>(adj[w].size()), w});
        for (int w : nb)
            adj[w].erase(pick);
        std::vector<std::pair<int, int>> added;
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (adj[nb[i]].insert(nb[j]).second) {
                    adj[nb[j]].insert(nb[i]);
                    added.emplace_back(nb[i], nb[j]);
                }
        adj[pick].clear();
        if (strategy == EliminationStrategy::min_degree)
            for (int w : nb)
                by_degree.emplace(static_cast<int>(adj[w].size()), w);
        if (strategy == EliminationStrategy::min_fill) {
            // fill changes for nb and for common neighbors of a new edge
            std::set<int> near(nb.begin(), nb.end());
            for (auto [x, y] : added) {
                const auto& small = adj[x].size() <= adj[y].size() ? adj[x] : adj[y];
                const auto& big = adj[x].size() <= adj[y].size() ? adj[y] : adj[x];
                for (int z : small)
                    if (adj[z].size() <= kExactDegree && big.count(z))
                        near.insert(z);
            }
            for (int z : near)
                rescore(z);
        }
    }

    // Node i holds the bag of the i-th eliminated vertex; its parent is the bag
    // of the earliest-eliminated neighbor at elimination time.
    td.bags.resize(n);
    td.parent.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        td.bags[i] = bag_of[v];
        int next = -1;
        for (int w : bag_of[v])
            if (w != v && (next < 0 || position[w] < position[next]))
                next = w;
        td.parent[i] = next < 0 ? -1 : position[next];
    }
    td.root = n - 1;
    for (int i = 0; i < n - 1; ++i)
        if (td.parent[i] < 0)
            td.parent[i] = td.root; // disjoint components hang off the root
    return compress(td);
}

TreeDecomposition from_separator(const Graph& graph, const std::vector<int>& separator) {
    const int n = graph.num_vertices();
    std::vector<int> s = separator;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (!leaves_forest(graph, s))
        throw PreconditionError("graph minus the separator is not a forest");
    std::vector<bool> in_s(n, false);
    for (int v : s)
        in_s[v] = true;

    TreeDecomposition td;
    td.bags.push_back(s);
    td.parent.push_back(-1);
    td.root = 0;
    // One bag per forest vertex: {v, parent(v)} plus the separator.
    std::vector<int> node_of(n, -1);
    std::vector<int> tree_parent(n, -1);
    for (int r = 0; r < n; ++r) {
        if (in_s[r] || node_of[r] >= 0)
            continue;
        std::deque<int> queue{r};
        node_of[r] = td.num_nodes();
        td.bags.push_back(set_union(s, {r}));
        td.parent.push_back(0);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : graph.neighbors(v)) {
                if (in_s[w] || node_of[w] >= 0)
                    continue;
                tree_parent[w] = v;
                node_of[w] = td.num_nodes();
                td.bags.push_back(set_union(s, v < w ? std::vector<int>{v, w} : std::vector<int>{w, v}));
                td.parent.push_back(node_of[v]);
                queue.push_back(w);
            }
        }
    }
    return compress(td);
}

int NiceDecomposition::width() const {
    std::size_t largest = 0;
    for (const auto& node : nodes)
        largest = std::max(largest, node.bag.size());
    return static_cast<int>(largest) - 1;
}

int NiceDecomposition::height() const {
    std::vector<int> h(nodes.size(), 1);
    int best = 0;
    for (std::size_t t = 0; t < nodes.size(); ++t) {
        for (int c : nodes[t].children)
            h[t] = std::max(h[t], h[c] + 1);
        best = std::max(best, h[t]);
    }
    return best;
}

TreeDecomposition NiceDecomposition::as_tree() const {
    TreeDecomposition td;
    td.parent.assign(nodes.size(), -1);
    for (std::size_t t = 0; t < nodes.size(); ++t) {
        td.bags.push_back(nodes[t].bag);
        for (int c : nodes[t].children)
            td.parent[c] = static_cast<int>(t);
    }
    td.root = root();
    return td;
}

namespace {

class NiceBuilder {
public:
    int leaf(int v) {
        NiceNode node;
        node.kind = NodeKind::leaf;
        node.vertex = v;
        if (v >= 0)
            node.bag = {v};
        return push(std::move(node));
    }
    int introduce(int child, int v) {
        NiceNode node;
        node.kind = NodeKind::introduce;
        node.vertex = v;
        node.bag = set_union(out.nodes[child].bag, {v});
        node.children = {child};
        return push(std::move(node));
    }
    int forget(int child, int v) {
        NiceNode node;
        node.kind = NodeKind::forget;
        node.vertex = v;
        node.bag = set_difference(out.nodes[child].bag, {v});
        node.children = {child};
        return push(std::move(node));
    }
    int join(int a, int b) {
        NiceNode node;
        node.kind = NodeKind::join;
        node.bag = out.nodes[a].bag;
        node.children = {a, b};
        return push(std::move(node));
    }
    const std::vector<int>& bag(int t) const { return out.nodes[t].bag; }

    NiceDecomposition out;

private:
    int push(NiceNode node) {
        out.nodes.push_back(std::move(node));
        return static_cast<int>(out.nodes.size()) - 1;
    }
};

} // namespace

NiceDecomposition make_nice(const Graph& graph, const TreeDecomposition& input) {
    if (auto check = validate(graph, input); !check)
        throw InputError("invalid tree decomposition: " + check.violation);
    TreeDecomposition td = compress(input);
    NiceBuilder b;
    if (td.bags[td.root].empty()) { // empty graph
        b.leaf(-1);
        return std::move(b.out);
    }
    auto kids = td.children();
    // Post-order over the decomposition tree.
    std::vector<int> post;
    std::vector<std::pair<int, bool>> stack{{td.root, false}};
    while (!stack.empty()) {
        auto [t, expanded] = stack.back();
        stack.pop_back();
        if (expanded) {
            post.push_back(t);
            continue;
        }
        stack.emplace_back(t, true);
        for (int c : kids[t])
            stack.emplace_back(c, false);
    }
    std::vector<int> top(td.num_nodes(), -1);
    for (int t : post) {
        const auto& bag = td.bags[t];
        std::vector<int> branches;
        if (kids[t].empty()) {
            int cur = b.leaf(bag.front());
            for (std::size_t i = 1; i < bag.size(); ++i)
                cur = b.introduce(cur, bag[i]);
            branches.push_back(cur);
        }
        for (int c : kids[t]) {
            int cur = top[c];
            for (int v : set_difference(td.bags[c], bag))
                cur = b.forget(cur, v);
            for (int v : set_difference(bag, td.bags[c]))
                cur = b.introduce(cur, v);
            branches.push_back(cur);
        }
        // Balanced binary join tree over the branches.
        while (branches.size() > 1) {
            std::vector<int> next;
            for (std::size_t i = 0; i + 1 < branches.size(); i += 2)
                next.push_back(b.join(branches[i], branches[i + 1]));
            if (branches.size() % 2 == 1)
                next.push_back(branches.back());
            branches = std::move(next);
        }
        top[t] = branches.front();
    }
    int cur = top[td.root];
    while (b.bag(cur).size() > 1)
        cur = b.forget(cur, b.bag(cur).back());
    return std::move(b.out);
}

ValidationResult validate_nice(const Graph& graph, const NiceDecomposition& nice) {
    if (nice.nodes.empty())
        return {"nice decomposition has no nodes"};
    std::vector<int> parents(nice.nodes.size(), 0);
    for (std::size_t t = 0; t < nice.nodes.size(); ++t) {
        const auto& node = nice.nodes[t];
        std::string where = "node " + std::to_string(t) + ": ";
        for (int c : node.children) {
            if (c < 0 || c >= static_cast<int>(t))
                return {where + "children must precede their parent"};
            ++parents[c];
        }
        switch (node.kind) {
        case NodeKind::leaf:
            if (!node.children.empty())
                return {where + "leaf with children"};
            if (node.bag.size() != 1 && !(graph.num_vertices() == 0 && node.bag.empty()))
                return {where + "leaf bag must hold exactly one vertex"};
            break;
        case NodeKind::introduce: {
            if (node.children.size() != 1)
                return {where + "introduce node needs one child"};
            const auto& child = nice.nodes[node.children[0]].bag;
            if (contains(child, node.vertex) || set_union(child, {node.vertex}) != node.bag)
                return {where + "introduce bag must be child bag plus the new vertex"};
            break;
        }
        case NodeKind::forget: {
            if (node.children.size() != 1)
                return {where + "forget node needs one child"};
            const auto& child = nice.nodes[node.children[0]].bag;
            if (!contains(child, node.vertex) || set_difference(child, {node.vertex}) != node.bag)
                return {where + "forget bag must be child bag minus the vertex"};
            break;
        }
        case NodeKind::join:
            if (node.children.size() != 2)
                return {where + "join node needs two children"};
            if (nice.nodes[node.children[0]].bag != node.bag ||
                nice.nodes[node.children[1]].bag != node.bag)
                return {where + "join children must have identical bags"};
            break;
        }
    }
    for (std::size_t t = 0; t + 1 < nice.nodes.size(); ++t)
        if (parents[t] != 1)
            return {"node " + std::to_string(t) + " must have exactly one parent"};
    if (parents.back() != 0)
        return {"root must be the last node"};
    if (graph.num_vertices() > 0 && nice.nodes.back().bag.size() != 1)
        return {"root bag must hold exactly one vertex"};
    return validate(graph, nice.as_tree());
}

} // namespace defco
