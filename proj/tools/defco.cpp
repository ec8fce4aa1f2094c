// defco: defective coloring solvers, generators and checkers.
//
// Exit codes: 0 yes / valid, 1 no / invalid, 2 usage or input error,
// 3 refused because of a size budget.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "defco/approximation.hpp"
#include "defco/decomposition.hpp"
#include "defco/errors.hpp"
#include "defco/exact_dp.hpp"
#include "defco/gadgets.hpp"
#include "defco/graph.hpp"
#include "defco/io.hpp"
#include "defco/oracle.hpp"
#include "defco/structural.hpp"

using namespace defco;

namespace {

enum Exit { kYes = 0, kNo = 1, kUsage = 2, kBudget = 3 };

const std::map<std::string, EliminationStrategy> kStrategies{
    {"min-degree", EliminationStrategy::min_degree}, {"min-fill", EliminationStrategy::min_fill}};

struct SolveArgs {
    std::string graph, method = "exact", td_file, strategy = "min-fill", decomposition = "heuristic", out;
    int colors = 0, deficiency = 0, threads = 1;
    double epsilon = 0.5;
};

struct VerifyArgs {
    std::string graph, coloring;
    int colors = 0, deficiency = 0;
};

struct DecomposeArgs {
    std::string graph, strategy = "min-fill", out;
    bool balance = false, nice = false;
};

struct GenerateArgs {
    std::string kind, mcc, out, sidecar;
    int k = 3, n = 3, colors = 2, i = 1, j = 0;
    double p = 0.5;
    std::uint64_t seed = 1;
    bool plant = false;
    std::int64_t cap = kDefaultVertexCap;
};

struct WitnessArgs {
    std::string sidecar, clique, out;
};

TreeDecomposition pick_decomposition(const Graph& g, const SolveArgs& a) {
    if (!a.td_file.empty())
        return read_td_file(a.td_file, g);
    if (a.decomposition == "fvs")
        return from_separator(g, exact_fvs(g));
    if (a.decomposition == "vc")
        return from_separator(g, exact_vc(g));
    return heuristic_decomposition(g, kStrategies.at(a.strategy));
}

void print_coloring_summary(const Graph& g, const Coloring& c, int colors, int budget) {
    auto report = verify(g, c, colors, budget);
    std::cout << "colors used: " << c.distinct_colors() << "\n"
              << "max deficiency: " << report.max_deficiency << "\n";
}

// Re-checks a solver's answer; a solver bug turns into exit 1, never into a
// reported success.
int finish_yes(const Graph& g, const Coloring& c, int colors, int budget, const std::string& out,
               int colors_in_file) {
    auto report = verify(g, c, colors, budget);
    if (!report.valid) {
        std::cerr << "error: solver returned a coloring that fails verification\n";
        return kNo;
    }
    std::cout << "decision: yes\n";
    print_coloring_summary(g, c, colors, budget);
    if (!out.empty()) {
        write_coloring_file(out, c, colors_in_file);
        std::cout << "wrote " << out << "\n";
    }
    return kYes;
}

int run_solve(const SolveArgs& a) {
    Graph g = read_dimacs_file(a.graph);
    const DpOptions options{a.threads};
    const std::string& m = a.method;
    if (m == "oracle") {
        auto c = brute_force_decide(g, a.colors, a.deficiency);
        if (!c) {
            std::cout << "decision: no\n";
            return kNo;
        }
        return finish_yes(g, *c, a.colors, a.deficiency, a.out, a.colors);
    }
    if (m == "fvs" || m == "vc") {
        auto r = m == "fvs" ? solve_by_fvs(g, a.colors, a.deficiency, std::nullopt, {}, options)
                            : solve_by_vc(g, a.colors, a.deficiency, std::nullopt, {}, options);
        if (r.verdict == Verdict::unsupported) {
            std::cerr << "error: the fvs method does not handle --colors 2 "
                         "(two colors are hard for this parameter); use --method exact\n";
            return kUsage;
        }
        std::cout << "route: " << r.route << "\n" << m << " size: " << r.parameter_set.size() << "\n";
        if (r.verdict == Verdict::no) {
            std::cout << "decision: no\n";
            return kNo;
        }
        return finish_yes(g, *r.coloring, a.colors, a.deficiency, a.out, a.colors);
    }

    TreeDecomposition td = pick_decomposition(g, a);
    std::cout << "decomposition width: " << td.width() << "\n";
    if (m == "exact") {
        auto c = solve_exact(g, make_nice(g, td), a.colors, a.deficiency, options);
        if (!c) {
            std::cout << "decision: no\n";
            return kNo;
        }
        return finish_yes(g, *c, a.colors, a.deficiency, a.out, a.colors);
    }
    if (m == "approx-def") {
        auto r = solve_approx_deficiency(g, td, a.colors, a.deficiency, a.epsilon, options);
        std::cout << "delta: " << r.delta << "\nbalanced height: " << r.balanced_height
                  << "\nvalue set size: " << r.value_set_size << "\nbudget: " << r.budget << "\n";
        if (!r.coloring) {
            std::cout << "decision: no\n";
            return kNo;
        }
        return finish_yes(g, *r.coloring, a.colors, r.budget, a.out, a.colors);
    }
    // double-colors
    auto r = solve_double_colors(g, td, a.colors, a.deficiency, options);
    std::cout << "branch: " << (r.exact_branch ? "exact" : "approx+halving") << "\n";
    if (!r.coloring) {
        std::cout << "decision: no\n";
        return kNo;
    }
    return finish_yes(g, *r.coloring, 2 * a.colors, a.deficiency, a.out, 2 * a.colors);
}

int run_verify(const VerifyArgs& a) {
    Graph g = read_dimacs_file(a.graph);
    auto file = read_coloring_file(a.coloring, g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v)
        if (file.coloring[v] > a.colors) {
            std::cout << "valid: no\nvertex " << v + 1 << " uses color " << file.coloring[v]
                      << " outside 1.." << a.colors << "\n";
            return kNo;
        }
    auto report = verify(g, file.coloring, a.colors, a.deficiency);
    std::cout << "valid: " << (report.valid ? "yes" : "no") << "\n"
              << "max deficiency: " << report.max_deficiency << "\n"
              << "colors used: " << file.coloring.distinct_colors() << "\n";
    if (!report.violating_vertices.empty()) {
        std::cout << "violations:";
        for (int v : report.violating_vertices)
            std::cout << ' ' << v + 1 << '(' << report.per_vertex_deficiency[v] << ')';
        std::cout << "\n";
    }
    return report.valid ? kYes : kNo;
}

int run_decompose(const DecomposeArgs& a) {
    Graph g = read_dimacs_file(a.graph);
    TreeDecomposition td = heuristic_decomposition(g, kStrategies.at(a.strategy));
    std::cout << "heuristic width: " << td.width() << " height: " << td.height() << "\n";
    if (a.balance) {
        td = balance(g, td);
        std::cout << "balanced width: " << td.width() << " height: " << td.height() << "\n";
    }
    if (a.nice) {
        auto nice = make_nice(g, td);
        std::map<NodeKind, int> kinds;
        for (const auto& node : nice.nodes)
            ++kinds[node.kind];
        std::cout << "nice nodes: " << nice.nodes.size() << " (leaf " << kinds[NodeKind::leaf]
                  << ", introduce " << kinds[NodeKind::introduce] << ", forget "
                  << kinds[NodeKind::forget] << ", join " << kinds[NodeKind::join] << ")\n";
        td = nice.as_tree();
    }
    if (!a.out.empty()) {
        write_td_file(a.out, td, g.num_vertices());
        std::cout << "wrote " << a.out << "\n";
    }
    return kYes;
}

MccInstance mcc_from_args(const GenerateArgs& a) {
    if (!a.mcc.empty())
        return read_mcc_file(a.mcc);
    if (a.k < 2 || a.n < 1 || a.p < 0 || a.p > 1)
        throw PreconditionError("need --k >= 2, --n >= 1 and 0 <= --p <= 1");
    return random_mcc(a.k, a.n, a.p, a.seed, a.plant);
}

int run_generate(const GenerateArgs& a) {
    if (a.kind == "tower") {
        auto t = build_tower(a.i, a.j, a.cap);
        std::cout << "tower T(" << a.i << "," << a.j << "): " << t.graph.num_vertices() << " vertices\n";
        for (int v = 0; v < t.graph.num_vertices(); ++v)
            t.graph.set_role(v, "level" + std::to_string(t.level[v]));
        if (!a.out.empty())
            write_dimacs_file(a.out, t.graph);
        return kYes;
    }
    MccInstance mcc = mcc_from_args(a);
    if (a.kind == "mcc") {
        std::cout << "mcc k=" << mcc.k << " n=" << mcc.n << " edges=" << mcc.graph.num_edges() << "\n";
        if (!a.out.empty())
            write_mcc_file(a.out, mcc);
        else
            std::cout << mcc_to_json(mcc) << "\n";
        return kYes;
    }
    const Construction c = a.kind == "hardness-td" ? Construction::td : Construction::pw;
    const std::int64_t size = predict_size(mcc, a.colors, c);
    std::cout << "deficiency: " << hardness_deficiency(mcc) << "\npredicted vertices: " << size << "\n";
    if (size > a.cap) {
        std::cerr << "error: " << size << " vertices exceed the cap of " << a.cap << " (raise --cap)\n";
        return kBudget;
    }
    auto gen = build_hardness(mcc, a.colors, c, a.cap);
    std::cout << "vertices: " << gen.instance.graph.num_vertices()
              << "\nedges: " << gen.instance.graph.num_edges() << "\n";
    if (!gen.certificate.empty())
        std::cout << "certificate size: " << gen.certificate.size() << "\n";
    if (a.out.empty())
        return kYes;
    write_dimacs_file(a.out, gen.instance.graph);
    const std::string side = a.sidecar.empty() ? a.out + ".json" : a.sidecar;
    std::ofstream os(side);
    if (!os)
        throw InputError("cannot write '" + side + "'");
    os << sidecar_to_json(make_sidecar(gen, a.out)) << "\n";
    std::cout << "wrote " << a.out << " and " << side << "\n";
    return kYes;
}

std::vector<int> parse_clique(const std::string& text) {
    std::vector<int> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InputError("--clique must be comma-separated indices, got '" + text + "'");
        }
    }
    return out;
}

int run_witness(const WitnessArgs& a) {
    Sidecar side = read_sidecar_file(a.sidecar);
    std::vector<int> clique;
    if (!a.clique.empty())
        clique = parse_clique(a.clique);
    else if (side.mcc.planted)
        clique = *side.mcc.planted;
    else
        throw InputError("no --clique given and the sidecar has no planted clique");
    if (static_cast<int>(clique.size()) != side.mcc.k)
        throw InputError("clique needs " + std::to_string(side.mcc.k) + " indices");
    auto gen = build_hardness(side.mcc, side.num_colors, side.construction, kDefaultVertexCap);
    auto c = witness_coloring(gen, clique);
    auto report = verify(gen.instance, c);
    std::cout << "construction: " << to_string(side.construction) << "\nvertices: "
              << gen.instance.graph.num_vertices() << "\ndeficiency: " << gen.instance.deficiency
              << "\nmax deficiency: " << report.max_deficiency << "\nvalid: " << (report.valid ? "yes" : "no")
              << "\n";
    if (!a.out.empty())
        write_coloring_file(a.out, c, side.num_colors);
    return report.valid ? kYes : kNo;
}

int run_params(const std::string& path) {
    Graph g = read_dimacs_file(path);
    std::cout << "n: " << g.num_vertices() << "\nm: " << g.num_edges() << "\nmax degree: " << g.max_degree()
              << "\ndegeneracy: " << degeneracy(g) << "\n";
    for (const char* name : {"fvs", "vc"}) {
        try {
            auto s = std::string(name) == "fvs" ? exact_fvs(g) : exact_vc(g);
            std::cout << name << ": " << s.size() << "\n";
        } catch (const BudgetExceeded&) {
            std::cout << name << ": over search cap\n";
        }
    }
    std::cout << "heuristic width: " << heuristic_decomposition(g).width() << "\n";
    return kYes;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"defective coloring toolkit"};
    app.require_subcommand(1);

    SolveArgs sa;
    auto* solve = app.add_subcommand("solve", "decide (colors, deficiency)-colorability");
    solve->add_option("--graph", sa.graph, "DIMACS graph")->required()->check(CLI::ExistingFile);
    solve->add_option("--colors", sa.colors)->required()->check(CLI::PositiveNumber);
    solve->add_option("--deficiency", sa.deficiency)->required()->check(CLI::NonNegativeNumber);
    solve->add_option("--method", sa.method)
        ->check(CLI::IsMember({"exact", "approx-def", "double-colors", "fvs", "vc", "oracle"}));
    solve->add_option("--epsilon", sa.epsilon, "approx-def tolerance")->check(CLI::PositiveNumber);
    solve->add_option("--td-file", sa.td_file, "PACE .td decomposition")->check(CLI::ExistingFile);
    solve->add_option("--strategy", sa.strategy)->check(CLI::IsMember({"min-degree", "min-fill"}));
    solve->add_option("--decomposition", sa.decomposition, "heuristic, or built from an exact fvs / vc")
        ->check(CLI::IsMember({"heuristic", "fvs", "vc"}));
    solve->add_option("--out", sa.out, "coloring JSON");
    solve->add_option("--threads", sa.threads)->check(CLI::PositiveNumber);

    VerifyArgs va;
    auto* ver = app.add_subcommand("verify", "check a coloring");
    ver->add_option("--graph", va.graph)->required()->check(CLI::ExistingFile);
    ver->add_option("--coloring", va.coloring)->required()->check(CLI::ExistingFile);
    ver->add_option("--colors", va.colors)->required()->check(CLI::PositiveNumber);
    ver->add_option("--deficiency", va.deficiency)->required()->check(CLI::NonNegativeNumber);

    DecomposeArgs da;
    auto* dec = app.add_subcommand("decompose", "heuristic tree decomposition");
    dec->add_option("--graph", da.graph)->required()->check(CLI::ExistingFile);
    dec->add_option("--strategy", da.strategy)->check(CLI::IsMember({"min-degree", "min-fill"}));
    dec->add_flag("--balance", da.balance, "rebalance to logarithmic height");
    dec->add_flag("--nice", da.nice, "write the nice decomposition");
    dec->add_option("--out", da.out, "PACE .td output");

    GenerateArgs ga;
    auto* gen = app.add_subcommand("generate", "towers, mcc instances and hardness instances");
    gen->add_option("kind", ga.kind)->required()->check(CLI::IsMember({"tower", "mcc", "hardness-td", "hardness-pw"}));
    gen->add_option("--i", ga.i, "tower height")->check(CLI::PositiveNumber);
    gen->add_option("--j", ga.j, "tower branching parameter")->check(CLI::NonNegativeNumber);
    gen->add_option("--k", ga.k);
    gen->add_option("--n", ga.n);
    gen->add_option("--p", ga.p, "edge probability");
    gen->add_option("--seed", ga.seed);
    gen->add_flag("--plant", ga.plant, "force a multicolored clique");
    gen->add_option("--mcc", ga.mcc, "mcc JSON instead of a random one")->check(CLI::ExistingFile);
    gen->add_option("--colors", ga.colors)->check(CLI::Range(2, 64));
    gen->add_option("--cap", ga.cap, "vertex cap");
    gen->add_option("--out", ga.out);
    gen->add_option("--sidecar", ga.sidecar, "default: <out>.json");

    WitnessArgs wa;
    auto* wit = app.add_subcommand("witness", "color a generated instance from a clique");
    wit->add_option("--instance-sidecar", wa.sidecar)->required()->check(CLI::ExistingFile);
    wit->add_option("--clique", wa.clique, "comma-separated indices, default: the planted one");
    wit->add_option("--out", wa.out, "coloring JSON");

    std::string params_graph;
    auto* par = app.add_subcommand("params", "structural parameters of a graph");
    par->add_option("--graph", params_graph)->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kYes : kUsage;
    }

    try {
        if (*solve)
            return run_solve(sa);
        if (*ver)
            return run_verify(va);
        if (*dec)
            return run_decompose(da);
        if (*gen)
            return run_generate(ga);
        if (*wit)
            return run_witness(wa);
        return run_params(params_graph);
    } catch (const BudgetExceeded& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kBudget;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kUsage;
    }
}
