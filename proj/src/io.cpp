#include "defco/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "defco/errors.hpp"
#include "json.hpp"

namespace defco {

using nlohmann::json;

namespace {

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    return in;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw InputError("cannot write '" + path + "'");
    return out;
}

json parse_json(std::istream& in, const char* what) {
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed ") + what + " JSON: " + e.what());
    }
}

[[noreturn]] void fail_at(int line, const std::string& msg) {
    throw InputError("line " + std::to_string(line) + ": " + msg);
}

int to_vertex(long long v, int n, int line) {
    if (v < 1 || v > n)
        fail_at(line, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
    return static_cast<int>(v - 1);
}

} // namespace

// ---------------------------------------------------------------- dimacs

Graph read_dimacs(std::istream& in) {
    Graph g;
    bool header = false;
    long long declared_edges = 0;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind))
            continue;
        if (kind == "c") {
            std::string word;
            if (ls >> word && word == "role") {
                if (!header)
                    fail_at(lineno, "role line before header");
                long long v;
                std::string name;
                if (!(ls >> v >> name))
                    fail_at(lineno, "expected 'c role <v> <name>'");
                g.set_role(to_vertex(v, g.num_vertices(), lineno), name);
            }
            continue;
        }
        if (kind == "p") {
            std::string fmt;
            long long n = -1, m = -1;
            if (header)
                fail_at(lineno, "second header");
            if (!(ls >> fmt >> n >> m) || (fmt != "edge" && fmt != "edges") || n < 0 || m < 0)
                fail_at(lineno, "expected 'p edge <n> <m>'");
            g = Graph(static_cast<int>(n));
            declared_edges = m;
            header = true;
            continue;
        }
        if (kind == "e") {
            if (!header)
                fail_at(lineno, "edge before header");
            long long u, v;
            if (!(ls >> u >> v))
                fail_at(lineno, "expected 'e <u> <v>'");
            try {
                g.add_edge(to_vertex(u, g.num_vertices(), lineno), to_vertex(v, g.num_vertices(), lineno));
            } catch (const InputError& e) {
                fail_at(lineno, e.what());
            }
            continue;
        }
        fail_at(lineno, "unknown line type '" + kind + "'");
    }
    if (!header)
        throw InputError("missing 'p edge' header");
    if (static_cast<long long>(g.num_edges()) != declared_edges)
        throw InputError("header declares " + std::to_string(declared_edges) + " edges, found " +
                         std::to_string(g.num_edges()));
    return g;
}

Graph read_dimacs_file(const std::string& path) {
    auto in = open_in(path);
    return read_dimacs(in);
}

void write_dimacs(std::ostream& out, const Graph& graph) {
    out << "p edge " << graph.num_vertices() << ' ' << graph.num_edges() << '\n';
    for (int v = 0; v < graph.num_vertices(); ++v)
        if (!graph.role(v).empty())
            out << "c role " << v + 1 << ' ' << graph.role(v) << '\n';
    for (auto [u, v] : graph.edges())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

void write_dimacs_file(const std::string& path, const Graph& graph) {
    auto out = open_out(path);
    write_dimacs(out, graph);
}

// ---------------------------------------------------------------- coloring

ColoringFile read_coloring(std::istream& in, int num_vertices) {
    json j = parse_json(in, "coloring");
    ColoringFile f;
    try {
        f.num_colors = j.at("num_colors").get<int>();
        const json& colors = j.at("colors");
        if (!colors.is_object())
            throw InputError("'colors' must be an object");
        f.coloring.color.assign(num_vertices, 0);
        for (auto it = colors.begin(); it != colors.end(); ++it) {
            int v;
            try {
                v = std::stoi(it.key());
            } catch (const std::exception&) {
                throw InputError("bad vertex key '" + it.key() + "'");
            }
            if (v < 1 || v > num_vertices)
                throw InputError("coloring names vertex " + it.key() + " outside the graph");
            f.coloring.color[v - 1] = it.value().get<int>();
        }
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed coloring: ") + e.what());
    }
    for (int v = 0; v < num_vertices; ++v)
        if (f.coloring.color[v] == 0)
            throw InputError("coloring misses vertex " + std::to_string(v + 1));
    return f;
}

ColoringFile read_coloring_file(const std::string& path, int num_vertices) {
    auto in = open_in(path);
    return read_coloring(in, num_vertices);
}

std::string coloring_to_json(const Coloring& coloring, int num_colors) {
    json colors = json::object();
    for (int v = 0; v < coloring.size(); ++v)
        colors[std::to_string(v + 1)] = coloring[v];
    return json{{"num_colors", num_colors}, {"colors", colors}}.dump(1);
}

void write_coloring_file(const std::string& path, const Coloring& coloring, int num_colors) {
    auto out = open_out(path);
    out << coloring_to_json(coloring, num_colors) << '\n';
}

// ---------------------------------------------------------------- pace td

TreeDecomposition read_td(std::istream& in, const Graph& graph) {
    std::string line;
    int lineno = 0;
    long long bags = -1, n = -1, declared_size = -1;
    std::vector<std::vector<int>> bag_list;
    std::vector<bool> seen;
    std::vector<std::pair<int, int>> tree_edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first == "c")
            continue;
        if (first == "s") {
            std::string td;
            if (bags >= 0)
                fail_at(lineno, "second header");
            if (!(ls >> td >> bags >> declared_size >> n) || td != "td" || bags < 0 || n < 0)
                fail_at(lineno, "expected 's td <bags> <width+1> <n>'");
            if (n != graph.num_vertices())
                fail_at(lineno, "decomposition is for " + std::to_string(n) + " vertices, graph has " +
                                    std::to_string(graph.num_vertices()));
            bag_list.assign(bags, {});
            seen.assign(bags, false);
            continue;
        }
        if (bags < 0)
            fail_at(lineno, "content before 's td' header");
        if (first == "b") {
            long long id, v;
            if (!(ls >> id) || id < 1 || id > bags)
                fail_at(lineno, "bad bag id");
            if (seen[id - 1])
                fail_at(lineno, "bag " + std::to_string(id) + " listed twice");
            seen[id - 1] = true;
            while (ls >> v)
                bag_list[id - 1].push_back(to_vertex(v, graph.num_vertices(), lineno));
            if (!ls.eof())
                fail_at(lineno, "bad vertex in bag");
            auto& b = bag_list[id - 1];
            std::sort(b.begin(), b.end());
            if (std::adjacent_find(b.begin(), b.end()) != b.end())
                fail_at(lineno, "vertex repeated in bag");
            if (static_cast<long long>(b.size()) > declared_size)
                fail_at(lineno, "bag larger than the declared width+1");
            continue;
        }
        long long a = 0, b = 0;
        try {
            a = std::stoll(first);
        } catch (const std::exception&) {
            fail_at(lineno, "unknown line '" + line + "'");
        }
        if (!(ls >> b) || a < 1 || b < 1 || a > bags || b > bags || a == b)
            fail_at(lineno, "bad tree edge");
        tree_edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
    }
    if (bags < 0)
        throw InputError("missing 's td' header");
    if (bags > 0 && static_cast<long long>(tree_edges.size()) != bags - 1)
        throw InputError("a tree on " + std::to_string(bags) + " bags needs " +
                         std::to_string(bags - 1) + " edges");
    TreeDecomposition td;
    td.bags = std::move(bag_list);
    td.parent.assign(bags, -2);
    td.root = 0;
    if (bags > 0) {
        std::vector<std::vector<int>> adj(bags);
        for (auto [a, b] : tree_edges) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        td.parent[0] = -1;
        std::vector<int> stack{0};
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            for (int u : adj[t])
                if (td.parent[u] == -2) {
                    td.parent[u] = t;
                    stack.push_back(u);
                }
        }
        for (long long t = 0; t < bags; ++t)
            if (td.parent[t] == -2)
                throw InputError("decomposition tree is not connected (bag " + std::to_string(t + 1) + ")");
    }
    if (auto check = validate(graph, td); !check)
        throw InputError("invalid tree decomposition: " + check.violation);
    return td;
}

TreeDecomposition read_td_file(const std::string& path, const Graph& graph) {
    auto in = open_in(path);
    return read_td(in, graph);
}

void write_td(std::ostream& out, const TreeDecomposition& td, int num_vertices) {
    out << "s td " << td.num_nodes() << ' ' << td.width() + 1 << ' ' << num_vertices << '\n';
    for (int t = 0; t < td.num_nodes(); ++t) {
        out << "b " << t + 1;
        for (int v : td.bags[t])
            out << ' ' << v + 1;
        out << '\n';
    }
    for (int t = 0; t < td.num_nodes(); ++t)
        if (td.parent[t] >= 0)
            out << td.parent[t] + 1 << ' ' << t + 1 << '\n';
}

void write_td_file(const std::string& path, const TreeDecomposition& td, int num_vertices) {
    auto out = open_out(path);
    write_td(out, td, num_vertices);
}

// ---------------------------------------------------------------- mcc

namespace {

MccInstance mcc_from_json(const json& j) {
    MccInstance mcc;
    try {
        mcc.k = j.at("k").get<int>();
        mcc.n = j.at("n").get<int>();
        if (mcc.k < 1 || mcc.n < 1)
            throw InputError("mcc needs k >= 1 and n >= 1");
        const int total = mcc.k * mcc.n;
        mcc.graph = Graph(total);
        for (const auto& cls : j.at("classes")) {
            std::vector<int> members;
            for (const auto& v : cls) {
                const int x = v.get<int>();
                if (x < 1 || x > total)
                    throw InputError("mcc class vertex " + std::to_string(x) + " outside 1..k*n");
                members.push_back(x - 1);
            }
            mcc.classes.push_back(std::move(members));
        }
        for (const auto& e : j.at("edges")) {
            if (e.size() != 2)
                throw InputError("mcc edges must be pairs");
            const int u = e[0].get<int>(), v = e[1].get<int>();
            if (u < 1 || v < 1 || u > total || v > total)
                throw InputError("mcc edge endpoint outside 1..k*n");
            mcc.graph.add_edge(u - 1, v - 1);
        }
        if (j.contains("planted") && !j.at("planted").is_null())
            mcc.planted = j.at("planted").get<std::vector<int>>();
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed mcc: ") + e.what());
    }
    validate_mcc(mcc);
    return mcc;
}

json mcc_json(const MccInstance& mcc) {
    json classes = json::array();
    for (const auto& cls : mcc.classes) {
        json c = json::array();
        for (int v : cls)
            c.push_back(v + 1);
        classes.push_back(c);
    }
    json edges = json::array();
    for (auto [u, v] : mcc.graph.edges())
        edges.push_back({u + 1, v + 1});
    json j{{"k", mcc.k}, {"n", mcc.n}, {"classes", classes}, {"edges", edges}};
    if (mcc.planted)
        j["planted"] = *mcc.planted;
    return j;
}

} // namespace

MccInstance read_mcc(std::istream& in) { return mcc_from_json(parse_json(in, "mcc")); }

MccInstance read_mcc_file(const std::string& path) {
    auto in = open_in(path);
    return read_mcc(in);
}

std::string mcc_to_json(const MccInstance& mcc) { return mcc_json(mcc).dump(1); }

void write_mcc_file(const std::string& path, const MccInstance& mcc) {
    auto out = open_out(path);
    out << mcc_to_json(mcc) << '\n';
}

// ---------------------------------------------------------------- sidecar

Sidecar make_sidecar(const GeneratedInstance& gen, const std::string& graph_path) {
    Sidecar s;
    s.construction = gen.construction;
    s.num_colors = gen.instance.num_colors;
    s.deficiency = gen.instance.deficiency;
    s.k = gen.source.k;
    s.n = gen.source.n;
    s.certificate = gen.certificate;
    s.mcc = gen.source;
    s.graph_path = graph_path;
    return s;
}

std::string sidecar_to_json(const Sidecar& s) {
    json cert = json::array();
    for (int v : s.certificate)
        cert.push_back(v + 1);
    json j{{"construction", to_string(s.construction)},
           {"num_colors", s.num_colors},
           {"deficiency", s.deficiency},
           {"k", s.k},
           {"n", s.n},
           {"certificate", cert},
           {"mcc", mcc_json(s.mcc)},
           {"graph", s.graph_path}};
    return j.dump(1);
}

Sidecar read_sidecar_file(const std::string& path) {
    auto in = open_in(path);
    json j = parse_json(in, "sidecar");
    Sidecar s;
    try {
        s.construction = construction_from_string(j.at("construction").get<std::string>());
        s.num_colors = j.at("num_colors").get<int>();
        s.deficiency = j.at("deficiency").get<int>();
        s.k = j.at("k").get<int>();
        s.n = j.at("n").get<int>();
        for (const auto& v : j.at("certificate"))
            s.certificate.push_back(v.get<int>() - 1);
        s.mcc = mcc_from_json(j.at("mcc"));
        s.graph_path = j.value("graph", std::string{});
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed sidecar: ") + e.what());
    }
    return s;
}

} // namespace defco
