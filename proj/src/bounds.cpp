#include "eop/bounds.hpp"

#include <algorithm>
#include <exception>
#include <string>

#include "eop/error.hpp"
#include "eop/predicates.hpp"

namespace eop {

DeltaBound delta_bound_check(const Graph& g, const SolverOptions& options) {
  const Vertex delta = g.min_degree();
  if (g.order() == 0 || delta == 0) {
    throw Error(ErrorKind::UndefinedBound, "m/delta is undefined for minimum degree 0");
  }
  DeltaBound r;
  r.rho = eop_number_exact(g, options).value;
  r.min_degree = delta;
  r.edges = g.size();
  r.bound_holds = r.rho * delta <= r.edges;
  r.is_tight = r.rho * delta == r.edges;
  return r;
}

bool is_disjoint_union_of_stars(const Graph& g) { return is_star_forest(g); }

bool is_family_f_witness(const Graph& g, const FamilyFWitness& w) {
  if (w.k < 2 || g.order() == 0 || g.min_degree() != w.k) return false;
  std::vector<int> part(static_cast<std::size_t>(g.order()), -1);
  auto place = [&](const std::vector<Vertex>& set, int label) {
    for (Vertex v : set) {
      if (!g.contains(v) || part[v] != -1) return false;
      part[v] = label;
    }
    return true;
  };
  if (!place(w.a_set, 0) || !place(w.b_set, 1) || !place(w.c_set, 2)) return false;
  if (std::find(part.begin(), part.end(), -1) != part.end()) return false;
  for (const Edge& e : g.edges()) {
    if ((part[e.u] == 1) == (part[e.v] == 1)) return false;
  }
  for (Vertex b : w.b_set) {
    Vertex in_a = 0;
    Vertex in_c = 0;
    for (Vertex x : g.neighbors(b)) (part[x] == 0 ? in_a : in_c) += 1;
    if (in_a != 1 || in_c != w.k - 1) return false;
  }
  return true;
}

namespace {

// Exact cover of `targets` by neighborhoods of `pool` vertices: every target
// must see exactly one chosen vertex.
class ExactCover {
 public:
  ExactCover(const Graph& g, const std::vector<Vertex>& targets)
      : g_(g), covered_(static_cast<std::size_t>(g.order()), 0), targets_(targets) {}

  bool solve() {
    Vertex pick = kNoVertex;
    std::vector<Vertex> best;
    for (Vertex b : targets_) {
      if (covered_[b]) continue;
      std::vector<Vertex> options;
      for (Vertex a : g_.neighbors(b)) {
        if (usable(a)) options.push_back(a);
      }
      if (pick == kNoVertex || options.size() < best.size()) {
        pick = b;
        best = std::move(options);
        if (best.empty()) return false;
      }
    }
    if (pick == kNoVertex) return true;
    for (Vertex a : best) {
      set_cover(a, 1);
      chosen_.push_back(a);
      if (solve()) return true;
      chosen_.pop_back();
      set_cover(a, 0);
    }
    return false;
  }

  const std::vector<Vertex>& chosen() const noexcept { return chosen_; }

 private:
  bool usable(Vertex a) const {
    for (Vertex b : g_.neighbors(a)) {
      if (covered_[b]) return false;
    }
    return true;
  }
  void set_cover(Vertex a, char value) {
    for (Vertex b : g_.neighbors(a)) covered_[b] = value;
  }

  const Graph& g_;
  std::vector<char> covered_;
  const std::vector<Vertex>& targets_;
  std::vector<Vertex> chosen_;
};

}  // namespace

std::optional<FamilyFWitness> recognize_family_f(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  const Vertex k = g.min_degree();
  if (k < 2) return std::nullopt;
  const auto sides = bipartition(g);
  if (!sides) return std::nullopt;
  const Components comps = connected_components(g);

  std::vector<std::vector<Vertex>> members(comps.count);
  for (Vertex v = 0; v < g.order(); ++v) members[comps.label[v]].push_back(v);

  FamilyFWitness w;
  w.k = k;
  for (const auto& comp : members) {
    bool found = false;
    for (int b_side : {0, 1}) {
      std::vector<Vertex> b_set;
      std::vector<Vertex> other;
      for (Vertex v : comp) ((*sides)[v] == b_side ? b_set : other).push_back(v);
      const bool regular = std::all_of(b_set.begin(), b_set.end(),
                                       [&](Vertex b) { return g.degree(b) == k; });
      if (!regular) continue;
      ExactCover cover(g, b_set);
      if (!cover.solve()) continue;
      std::vector<char> in_a(static_cast<std::size_t>(g.order()), 0);
      for (Vertex a : cover.chosen()) in_a[a] = 1;
      for (Vertex v : other) (in_a[v] ? w.a_set : w.c_set).push_back(v);
      w.b_set.insert(w.b_set.end(), b_set.begin(), b_set.end());
      found = true;
      break;
    }
    if (!found) return std::nullopt;
  }
  std::sort(w.a_set.begin(), w.a_set.end());
  std::sort(w.b_set.begin(), w.b_set.end());
  std::sort(w.c_set.begin(), w.c_set.end());
  return w;
}

namespace {

struct ComponentShapes {
  bool some_star = false;
  bool some_other = false;
};

ComponentShapes component_shapes(const Graph& g) {
  const Components comps = connected_components(g);
  std::vector<std::int64_t> degree_sum(comps.count, 0);
  std::vector<Vertex> size(comps.count, 0);
  std::vector<Vertex> top(comps.count, 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto c = static_cast<std::size_t>(comps.label[v]);
    ++size[c];
    degree_sum[c] += g.degree(v);
    top[c] = std::max(top[c], g.degree(v));
  }
  ComponentShapes out;
  for (std::size_t c = 0; c < comps.count; ++c) {
    const bool star = degree_sum[c] / 2 == size[c] - 1 && (size[c] <= 2 || top[c] == size[c] - 1);
    (star ? out.some_star : out.some_other) = true;
  }
  return out;
}

}  // namespace

CharacterizationCheck check_char_theorem(const Graph& g, const SolverOptions& options) {
  const DeltaBound bound = delta_bound_check(g, options);
  CharacterizationCheck r;
  r.tight = bound.is_tight;
  r.star_forest = is_disjoint_union_of_stars(g);
  r.family_f = recognize_family_f(g);
  const ComponentShapes shapes = component_shapes(g);
  r.mixed_components = shapes.some_star && shapes.some_other;
  r.consistent = r.tight == (r.star_forest || r.family_f.has_value());
  return r;
}

FamilyFInstance build_family_f(const FamilyFPattern& p) {
  auto infeasible = [](const std::string& why) {
    return Error(ErrorKind::InfeasiblePattern, "infeasible pattern: " + why);
  };
  if (p.k < 2) throw infeasible("k must be at least 2");
  if (p.a < 1 || p.b < 1 || p.c < 1) throw infeasible("|A|, |B| and |C| must all be positive");
  if (p.c < p.k - 1) {
    throw infeasible("each B vertex needs k-1 = " + std::to_string(p.k - 1) +
                     " distinct C neighbors but |C| = " + std::to_string(p.c));
  }

  const Vertex a0 = 0;
  const Vertex b0 = p.a;
  const Vertex c0 = p.a + p.b;
  std::vector<Edge> edges;
  for (Vertex t = 0; t < p.b; ++t) {
    edges.push_back({a0 + t % p.a, b0 + t});
    const Vertex start = static_cast<Vertex>((static_cast<std::int64_t>(t) * (p.k - 1)) % p.c);
    for (Vertex s = 0; s < p.k - 1; ++s) edges.push_back(make_edge(b0 + t, c0 + (start + s) % p.c));
  }
  FamilyFInstance out{Graph(p.a + p.b + p.c, std::move(edges)), {}};

  for (Vertex v = 0; v < out.graph.order(); ++v) {
    if (out.graph.degree(v) < p.k) {
      const bool in_a = v < b0;
      const Vertex index = in_a ? v : v - c0;
      throw infeasible(std::string(in_a ? "a_" : "c_") + std::to_string(index) + " has degree " +
                       std::to_string(out.graph.degree(v)) + " < k = " + std::to_string(p.k));
    }
  }
  for (Vertex v = a0; v < b0; ++v) out.witness.a_set.push_back(v);
  for (Vertex v = b0; v < c0; ++v) out.witness.b_set.push_back(v);
  for (Vertex v = c0; v < out.graph.order(); ++v) out.witness.c_set.push_back(v);
  out.witness.k = p.k;
  return out;
}

bool removal_within_bounds(std::int64_t before, std::int64_t after, Vertex n,
                           Vertex complete_component_order) {
  if (n < 3) return true;
  if (before >= 3) return before - 1 <= after && after <= 2 * (before - 1);
  if (before == 2) return 1 <= after && after <= 3;
  if (before == 1) return after == (complete_component_order >= 3 ? 2 : 0);
  return true;
}

namespace {

RemovalProfile removal_profile(const Graph& g, const SolverOptions& options, bool parallel) {
  if (g.size() == 0) throw Error(ErrorKind::InvalidArgument, "graph has no edges to remove");
  RemovalProfile r;
  r.rho_before = eop_number_exact(g, options).value;
  r.bounds_apply = g.order() >= 3;
  Vertex touched = 0;
  for (Vertex v = 0; v < g.order(); ++v) touched += g.degree(v) > 0 ? 1 : 0;

  const EdgeId m = g.size();
  r.entries.resize(static_cast<std::size_t>(m));
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (EdgeId id = 0; id < m; ++id) {
    try {
      RemovalEntry& entry = r.entries[static_cast<std::size_t>(id)];
      entry.edge = id;
      entry.rho_after = eop_number_exact(remove_edge(g, id), options).value;
      entry.within_bounds = removal_within_bounds(r.rho_before, entry.rho_after, g.order(), touched);
    } catch (...) {
#pragma omp critical(eop_removal_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  r.bounds_ok = std::all_of(r.entries.begin(), r.entries.end(),
                            [](const RemovalEntry& e) { return e.within_bounds; });
  return r;
}

}  // namespace

RemovalProfile edge_removal_profile(const Graph& g, const SolverOptions& options) {
  return removal_profile(g, options, true);
}

RemovalProfile edge_removal_profile_serial(const Graph& g, const SolverOptions& options) {
  return removal_profile(g, options, false);
}

Realization build_removal_realization(std::int64_t a, std::int64_t b) {
  const bool general = b >= 3 && b - 1 <= a && a <= 2 * b - 2;
  const bool small = b == 2 && 1 <= a && a <= 3;
  if (!general && !small) {
    throw Error(ErrorKind::OutOfRange, "no realization for a = " + std::to_string(a) +
                                           ", b = " + std::to_string(b));
  }
  Realization r;
  r.a = a;
  r.b = b;
  std::vector<Edge> edges;

  if (small) {
    // K_4 on u = 0, 1, 2, 3 plus the pendant vertex 4 at u.
    for (Vertex i = 0; i < 4; ++i) {
      for (Vertex j = i + 1; j < 4; ++j) edges.push_back({i, j});
    }
    edges.push_back({0, 4});
    r.graph = Graph(5, std::move(edges));
    r.edge = a == 1 ? Edge{0, 4} : a == 3 ? Edge{1, 2} : Edge{0, 1};
    return r;
  }

  const auto leaves = static_cast<Vertex>(b);
  if (a == b - 1) {
    // K_{1,b} centered at v = 0 and e = v v_b. The clique-on-w_i graph keeps
    // rho(G - v v_b) = b, so it cannot serve here.
    for (Vertex i = 1; i <= leaves; ++i) edges.push_back({0, i});
    r.graph = Graph(leaves + 1, std::move(edges));
    r.edge = {0, leaves};
    return r;
  }

  // K_{1,b+1} centered at v = 0 with the edge v_1 v_2.
  for (Vertex i = 1; i <= leaves + 1; ++i) edges.push_back({0, i});
  edges.push_back({1, 2});
  Vertex next = leaves + 2;
  if (a == b) {
    r.graph = Graph(next, std::move(edges));
    r.edge = {0, 1};
    return r;
  }
  const auto half = static_cast<Vertex>(a / 2);
  const auto rest = static_cast<Vertex>(a - half);
  for (Vertex k = 0; k < half; ++k) edges.push_back({1, next++});
  for (Vertex k = 0; k < rest; ++k) edges.push_back({2, next++});
  r.graph = Graph(next, std::move(edges));
  r.edge = {1, 2};
  return r;
}

SmallRhoReport check_rho_small_characterizations(const Graph& g, const SolverOptions& options) {
  if (!is_connected(g)) throw Error(ErrorKind::InvalidArgument, "graph must be connected");
  SmallRhoReport r;
  r.rho = eop_number_exact(g, options).value;
  r.complete = g.order() >= 2 && is_complete(g);
  r.diameter = diameter(g);
  r.diameter_condition = r.diameter && *r.diameter >= 2 && *r.diameter <= 4;
  r.claw_free = is_claw_free(g);

  r.pair_condition = true;
  for (EdgeId i = 0; i < g.size() && r.pair_condition; ++i) {
    for (EdgeId j = i + 1; j < g.size() && r.pair_condition; ++j) {
      const Edge e1 = g.edge(i);
      const Edge e2 = g.edge(j);
      if (e1.u == e2.u || e1.u == e2.v || e1.v == e2.u || e1.v == e2.v) continue;
      if (common_edge(g, i, j)) continue;
      for (Vertex w = 0; w < g.order(); ++w) {
        if (w == e1.u || w == e1.v || w == e2.u || w == e2.v) continue;
        int hits = 0;
        for (Vertex x : {e1.u, e1.v, e2.u, e2.v}) hits += g.adjacent(w, x) ? 1 : 0;
        if (hits < 2) {
          r.pair_condition = false;
          break;
        }
      }
    }
  }
  r.rho_one_agrees = (r.rho == 1) == r.complete;
  r.rho_two_agrees = (r.rho == 2) == (r.diameter_condition && r.claw_free && r.pair_condition);
  return r;
}

}  // namespace eop
