#include "defco/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "defco/errors.hpp"

namespace defco {

OracleBudget OracleBudget::from_env() {
    OracleBudget b;
    const char* raw = std::getenv("DEFCO_BUDGET");
    if (raw == nullptr || *raw == '\0')
        return b;
    std::string text(raw);
    std::replace(text.begin(), text.end(), ',', ' ');
    std::istringstream in(text);
    int first = 0, second = 0;
    if (!(in >> first) || first < 0)
        throw InputError("DEFCO_BUDGET must be '<n>' or '<n2>,<n3>'");
    if (!(in >> second))
        second = first;
    b.max_n_two_colors = first;
    b.max_n_more_colors = second;
    return b;
}

bool OracleBudget::allows(int n, int num_colors) const {
    if (num_colors <= 1)
        return true;
    return n <= (num_colors == 2 ? max_n_two_colors : max_n_more_colors);
}

namespace {

class Search {
public:
    Search(const Graph& g, int colors, int deficiency)
        : g_(g), colors_(colors), deficiency_(deficiency), order_(g.num_vertices()),
          color_(g.num_vertices(), 0), same_(g.num_vertices(), 0) {
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
    }

    bool run() { return place(0, 0); }
    Coloring coloring() const { return Coloring{color_}; }

private:
    bool place(int i, int used) {
        if (i == static_cast<int>(order_.size()))
            return true;
        const int v = order_[i];
        const int top = std::min(colors_, used + 1);
        for (int c = 1; c <= top; ++c) {
            if (assign(v, c)) {
                if (place(i + 1, std::max(used, c)))
                    return true;
            }
            unassign(v, c);
        }
        return false;
    }

    // Colors v and updates counts; false when someone now exceeds the budget.
    bool assign(int v, int c) {
        color_[v] = c;
        bool ok = true;
        for (int w : g_.neighbors(v))
            if (color_[w] == c) {
                ++same_[v];
                ok = ++same_[w] <= deficiency_ && ok;
            }
        return ok && same_[v] <= deficiency_;
    }

    void unassign(int v, int c) {
        for (int w : g_.neighbors(v))
            if (color_[w] == c) {
                --same_[v];
                --same_[w];
            }
        color_[v] = 0;
    }

    const Graph& g_;
    int colors_;
    int deficiency_;
    std::vector<int> order_;
    std::vector<int> color_;
    std::vector<int> same_;
};

} // namespace

std::optional<Coloring> brute_force_decide(const Graph& graph, int num_colors, int deficiency,
                                           OracleBudget budget) {
    if (num_colors < 1 || deficiency < 0)
        throw PreconditionError("need num_colors >= 1 and deficiency >= 0");
    const int n = graph.num_vertices();
    if (num_colors == 1) {
        if (graph.max_degree() > deficiency)
            return std::nullopt;
        return Coloring{std::vector<int>(n, 1)};
    }
    if (!budget.allows(n, num_colors))
        throw BudgetExceeded("oracle refuses n=" + std::to_string(n) + " with " +
                             std::to_string(num_colors) + " colors (raise DEFCO_BUDGET)");
    Search s(graph, num_colors, deficiency);
    if (!s.run())
        return std::nullopt;
    return s.coloring();
}

int min_deficiency(const Graph& graph, int num_colors, OracleBudget budget) {
    int lo = 0, hi = graph.max_degree();
    while (lo < hi) {
        const int mid = (lo + hi) / 2;
        if (brute_force_decide(graph, num_colors, mid, budget))
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

int min_colors(const Graph& graph, int deficiency, OracleBudget budget) {
    // n colors always suffice
    for (int k = 1; k < graph.num_vertices(); ++k)
        if (brute_force_decide(graph, k, deficiency, budget))
            return k;
    return std::max(1, graph.num_vertices());
}

} // namespace defco
