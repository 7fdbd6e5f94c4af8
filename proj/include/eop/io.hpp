#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "eop/gadgets.hpp"
#include "eop/graph.hpp"

namespace eop {

/// DIMACS-style edge format:
///
///   c <comment>
///   p edge <n> <m>      exactly one, before any edge line
///   e <u> <v>           1-based labels
///
/// Blank lines are skipped. Throws Error{Parse} with the 1-based line number
/// for malformed lines, labels out of range, self-loops, duplicate edges and
/// an edge count that disagrees with the problem line.
Graph parse_graph(std::istream& in);
Graph read_graph_file(const std::filesystem::path& path);

/// Writes the problem line and one edge line per edge in edge-id order,
/// LF-terminated.
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::filesystem::path& path, const Graph& g);

/// One "u v" pair of 1-based labels per line; each pair must be an edge of g.
EopSet parse_edge_pairs(std::istream& in, const Graph& g);
EopSet read_edge_pairs_file(const std::filesystem::path& path, const Graph& g);
void write_edge_pairs(std::ostream& out, const Graph& g, const EopSet& set);

/// One "name id" line per vertex with 1-based ids, in id order.
void write_name_map(std::ostream& out, const NameMap& names);
NameMap parse_name_map(std::istream& in);

}  // namespace eop
