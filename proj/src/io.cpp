#include "eop/io.hpp"

#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <vector>

#include "eop/error.hpp"

namespace eop {

namespace {

Error parse_error(std::size_t line, const std::string& what) {
  return Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + what);
}

// Splits a line into whitespace-separated tokens; a trailing CR is dropped.
std::vector<std::string> tokens_of(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(std::move(tok));
  return out;
}

std::int64_t parse_int(const std::string& tok, std::size_t line, const char* what) {
  std::size_t used = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size() || used == 0) {
    throw parse_error(line, std::string("expected an integer ") + what + ", got '" + tok + "'");
  }
  return value;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path.string());
  return in;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::int64_t n = -1;
  std::int64_t m = -1;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    const auto tok = tokens_of(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (n >= 0) throw parse_error(lineno, "second problem line");
      if (tok.size() != 4 || tok[1] != "edge") {
        throw parse_error(lineno, "problem line must read 'p edge <n> <m>'");
      }
      n = parse_int(tok[2], lineno, "vertex count");
      m = parse_int(tok[3], lineno, "edge count");
      if (n < 0 || m < 0 || n > std::numeric_limits<Vertex>::max()) {
        throw parse_error(lineno, "counts out of range");
      }
      continue;
    }
    if (tok[0] == "e") {
      if (n < 0) throw parse_error(lineno, "edge line before the problem line");
      if (tok.size() != 3) throw parse_error(lineno, "edge line must read 'e <u> <v>'");
      const std::int64_t u = parse_int(tok[1], lineno, "label");
      const std::int64_t v = parse_int(tok[2], lineno, "label");
      for (std::int64_t x : {u, v}) {
        if (x < 1 || x > n) {
          throw parse_error(lineno, "label " + std::to_string(x) + " outside 1.." +
                                        std::to_string(n));
        }
      }
      if (u == v) throw parse_error(lineno, "self-loop on " + std::to_string(u));
      edges.push_back(make_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)));
      edge_lines.push_back(lineno);
      continue;
    }
    throw parse_error(lineno, "unknown line type '" + tok[0] + "'");
  }
  if (n < 0) throw Error(ErrorKind::Parse, "missing problem line 'p edge <n> <m>'");
  if (static_cast<std::int64_t>(edges.size()) != m) {
    throw Error(ErrorKind::Parse, "problem line declares " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()));
  }
  std::vector<Edge> sorted = edges;
  std::vector<std::size_t> order(edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (edges[order[k]] == edges[order[k - 1]]) {
      const Edge e = edges[order[k]];
      throw parse_error(edge_lines[order[k]], "duplicate edge " + std::to_string(e.u + 1) + " " +
                                                  std::to_string(e.v + 1));
    }
  }
  return Graph(static_cast<Vertex>(n), std::move(edges));
}

Graph read_graph_file(const std::filesystem::path& path) {
  auto in = open_in(path);
  return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "p edge " << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

void write_graph_file(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path.string());
  write_graph(out, g);
}

EopSet parse_edge_pairs(std::istream& in, const Graph& g) {
  std::vector<EdgeId> ids;
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    const auto tok = tokens_of(line);
    if (tok.empty()) continue;
    if (tok.size() != 2) throw parse_error(lineno, "expected 'u v'");
    const std::int64_t u = parse_int(tok[0], lineno, "label");
    const std::int64_t v = parse_int(tok[1], lineno, "label");
    const auto id = (u >= 1 && v >= 1 && u <= g.order() && v <= g.order())
                        ? g.find_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1))
                        : std::nullopt;
    if (!id) {
      throw parse_error(lineno, std::to_string(u) + " " + std::to_string(v) + " is not an edge");
    }
    ids.push_back(*id);
  }
  return EopSet(std::move(ids));
}

EopSet read_edge_pairs_file(const std::filesystem::path& path, const Graph& g) {
  auto in = open_in(path);
  return parse_edge_pairs(in, g);
}

void write_edge_pairs(std::ostream& out, const Graph& g, const EopSet& set) {
  for (EdgeId id : set.ids()) out << g.edge(id).u + 1 << ' ' << g.edge(id).v + 1 << '\n';
}

void write_name_map(std::ostream& out, const NameMap& names) {
  for (Vertex v = 0; v < names.size(); ++v) out << names.name(v) << ' ' << v + 1 << '\n';
}

NameMap parse_name_map(std::istream& in) {
  NameMap names;
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    const auto tok = tokens_of(line);
    if (tok.empty()) continue;
    if (tok.size() != 2) throw parse_error(lineno, "expected 'name id'");
    if (parse_int(tok[1], lineno, "id") != names.size() + 1) {
      throw parse_error(lineno, "ids must be consecutive from 1");
    }
    names.add(tok[0]);
  }
  return names;
}

}  // namespace eop
