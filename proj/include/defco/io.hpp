#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "defco/decomposition.hpp"
#include "defco/gadgets.hpp"
#include "defco/graph.hpp"

namespace defco {

// All file formats number vertices from 1; everything in memory from 0.

/// `p edge <n> <m>`, `e <u> <v>`, `c ...` comments, `c role <v> <name>`.
/// Throws InputError (with line number) on malformed input, self-loops,
/// parallel edges or an edge count that disagrees with the header.
Graph read_dimacs(std::istream& in);
Graph read_dimacs_file(const std::string& path);
void write_dimacs(std::ostream& out, const Graph& graph);
void write_dimacs_file(const std::string& path, const Graph& graph);

struct ColoringFile {
    int num_colors = 0;
    Coloring coloring;
};

/// {"num_colors": c, "colors": {"<v>": color}}. Every vertex 1..n must appear.
ColoringFile read_coloring(std::istream& in, int num_vertices);
ColoringFile read_coloring_file(const std::string& path, int num_vertices);
std::string coloring_to_json(const Coloring& coloring, int num_colors);
void write_coloring_file(const std::string& path, const Coloring& coloring, int num_colors);

/// PACE `.td`: `s td <bags> <width+1> <n>`, `b <id> <v...>`, `<id> <id>`.
/// The first bag becomes the root. The result is validated against `graph`.
TreeDecomposition read_td(std::istream& in, const Graph& graph);
TreeDecomposition read_td_file(const std::string& path, const Graph& graph);
void write_td(std::ostream& out, const TreeDecomposition& td, int num_vertices);
void write_td_file(const std::string& path, const TreeDecomposition& td, int num_vertices);

/// {"k", "n", "classes": [[v...]], "edges": [[u,v]], "planted": [idx...]}.
MccInstance read_mcc(std::istream& in);
MccInstance read_mcc_file(const std::string& path);
std::string mcc_to_json(const MccInstance& mcc);
void write_mcc_file(const std::string& path, const MccInstance& mcc);

/// Sidecar of a generated instance: parameters, certificate and the source
/// mcc, enough to rebuild the instance and its witness.
struct Sidecar {
    Construction construction = Construction::td;
    int num_colors = 0;
    int deficiency = 0;
    int k = 0;
    int n = 0;
    std::vector<int> certificate;
    MccInstance mcc;
    std::string graph_path;
};

Sidecar make_sidecar(const GeneratedInstance& gen, const std::string& graph_path);
std::string sidecar_to_json(const Sidecar& sidecar);
Sidecar read_sidecar_file(const std::string& path);

} // namespace defco
