#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "eop/exact.hpp"
#include "eop/graph.hpp"

namespace eop {

struct DeltaBound {
  std::int64_t rho = 0;
  Vertex min_degree = 0;
  EdgeId edges = 0;
  bool bound_holds = false;  // rho * delta <= m
  bool is_tight = false;     // rho * delta == m
};

/// Compares the EOP number against |E| / delta in integer arithmetic.
/// Throws Error{UndefinedBound} when delta is 0.
DeltaBound delta_bound_check(const Graph& g, const SolverOptions& options = {});

bool is_disjoint_union_of_stars(const Graph& g);

/// Parts A, B, C of a member of the family of bipartite graphs of minimum
/// degree k >= 2 with sides A+C and B, where each vertex of B has exactly one
/// neighbor in A and k - 1 in C.
struct FamilyFWitness {
  std::vector<Vertex> a_set;
  std::vector<Vertex> b_set;
  std::vector<Vertex> c_set;
  Vertex k = 0;
};

/// Checks a claimed partition against the defining conditions.
bool is_family_f_witness(const Graph& g, const FamilyFWitness& w);

/// Finds a partition if one exists. Components are independent: for each,
/// one side must consist of degree-k vertices (B) and the other needs an A
/// subset hitting every B vertex exactly once, found by exact-cover
/// backtracking. The side holding the component's smallest vertex is tried
/// as B first. Exponential in the worst case.
std::optional<FamilyFWitness> recognize_family_f(const Graph& g);

struct CharacterizationCheck {
  bool tight = false;
  bool star_forest = false;
  std::optional<FamilyFWitness> family_f;
  /// Star components next to non-star components; the dichotomy says nothing
  /// about such unions, so they are reported rather than judged.
  bool mixed_components = false;
  /// tight <=> (star forest or member of the family).
  bool consistent = false;
};

/// Throws Error{UndefinedBound} when delta is 0.
CharacterizationCheck check_char_theorem(const Graph& g, const SolverOptions& options = {});

/// |A|, |B|, |C| of a generated family member. Vertex layout: A, then B, then
/// C. b_t is joined to a_(t mod |A|) and to the k - 1 consecutive C vertices
/// starting at c_((t (k-1)) mod |C|).
struct FamilyFPattern {
  Vertex k = 2;
  Vertex a = 1;
  Vertex b = 2;
  Vertex c = 1;
};

struct FamilyFInstance {
  Graph graph;
  FamilyFWitness witness;
};

/// Throws Error{InfeasiblePattern} naming the violated constraint.
FamilyFInstance build_family_f(const FamilyFPattern& pattern);

struct RemovalEntry {
  EdgeId edge = 0;
  std::int64_t rho_after = 0;
  bool within_bounds = true;
};

struct RemovalProfile {
  std::int64_t rho_before = 0;
  /// The bounds are stated for graphs of order at least 3.
  bool bounds_apply = false;
  std::vector<RemovalEntry> entries;
  bool bounds_ok = true;
};

/// Whether rho(G - e) = after is allowed given rho(G) = before on a graph of
/// order n: before - 1 <= after <= 2(before - 1) for before >= 3,
/// 1 <= after <= 3 for before = 2, and for before = 1 (one complete non-trivial
/// component K_k) after = 2 when k >= 3, after = 0 when k = 2.
bool removal_within_bounds(std::int64_t before, std::int64_t after, Vertex n,
                           Vertex complete_component_order);

/// Exact rho(G - e) for every edge, the edges solved in parallel.
/// Throws Error{InvalidArgument} when g has no edges.
RemovalProfile edge_removal_profile(const Graph& g, const SolverOptions& options = {});
/// Same profile, one edge after another.
RemovalProfile edge_removal_profile_serial(const Graph& g, const SolverOptions& options = {});

struct Realization {
  Graph graph;
  Edge edge;
  std::int64_t a = 0;  // target rho(G - e)
  std::int64_t b = 0;  // target rho(G)
};

/// A connected graph G and an edge e with rho(G) = b and rho(G - e) = a, for
/// b >= 3 and b - 1 <= a <= 2b - 2, or b = 2 and a in {1, 2, 3} (built on
/// K_4 plus a pendant vertex). Throws Error{OutOfRange} otherwise.
Realization build_removal_realization(std::int64_t a, std::int64_t b);

struct SmallRhoReport {
  std::int64_t rho = 0;
  bool complete = false;
  std::optional<Vertex> diameter;
  bool diameter_condition = false;   // 2 <= diam <= 4
  bool claw_free = false;
  bool pair_condition = false;       // vertex-disjoint packed pairs dominate twice
  bool rho_one_agrees = false;       // (rho == 1) <=> complete with n >= 2
  bool rho_two_agrees = false;       // (rho == 2) <=> all three conditions
  bool mismatch() const noexcept { return !rho_one_agrees || !rho_two_agrees; }
};

/// Compares the exact EOP number with the known characterizations of
/// rho = 1 and rho = 2. Throws Error{InvalidArgument} unless g is connected.
SmallRhoReport check_rho_small_characterizations(const Graph& g,
                                                 const SolverOptions& options = {});

}  // namespace eop
