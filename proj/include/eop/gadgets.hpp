#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "eop/exact.hpp"
#include "eop/graph.hpp"

namespace eop {

enum class GadgetKind { Universal, EulerianBipartite, PlanarDeg4 };

std::string_view to_string(GadgetKind kind) noexcept;
/// Accepts "universal", "eulerian" and "planar".
std::optional<GadgetKind> parse_gadget_kind(std::string_view text) noexcept;

/// Two-way table between gadget vertex names and ids; ids are assigned in
/// insertion order.
class NameMap {
 public:
  Vertex add(std::string name);
  const std::string& name(Vertex id) const { return names_[static_cast<std::size_t>(id)]; }
  /// Throws Error{InvalidArgument} for an unknown name.
  Vertex id(std::string_view name) const;
  std::optional<Vertex> find(std::string_view name) const;
  Vertex size() const noexcept { return static_cast<Vertex>(names_.size()); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Vertex> ids_;
};

struct GadgetOutput {
  Graph graph;
  GadgetKind kind = GadgetKind::Universal;
  Vertex source_n = 0;
  EdgeId source_m = 0;
  NameMap names;
  /// The gadget's EOP number equals this plus the source's independence
  /// number: m + n, 12m and 2n respectively.
  std::int64_t predicted_offset = 0;
};

/// The source graph plus a vertex v adjacent to every source vertex and to
/// m + n new vertices u_1..u_{m+n}. Layout: v_1..v_n, v, u_1..u_{m+n}.
GadgetOutput build_universal_gadget(const Graph& g);

/// For every source vertex v_i a twin v'_i with edge v_i v'_i, and for every
/// source edge v_i v_j (i < j) six internally disjoint paths of length five:
/// three from v_i to v'_j and three from v'_i to v_j, one of each per letter
/// x, y, z. Layout: v_1..v_n, v'_1..v'_n, then 24 path vertices per edge.
GadgetOutput build_eulerian_gadget(const Graph& g);

/// The source graph plus, for every v_i, a path x_i z_i y_i and the edge
/// z_i v_i. Layout: v_1..v_n, then x_i, z_i, y_i for each i.
GadgetOutput build_planar_gadget(const Graph& g);

GadgetOutput build_gadget(const Graph& g, GadgetKind kind);

/// Edges from the universal vertex to the independent set and to every u_k.
/// Size m + n + |independent|.
EopSet build_universal_witness(const Graph& g, const GadgetOutput& gadget,
                               std::span<const Vertex> independent);

/// Union over source edges of the 13-edge set (an endpoint in the independent
/// set) or the 12-edge set (neither endpoint in it), plus v_i v'_i for
/// isolated members. Size 12m + |independent|.
EopSet build_eulerian_witness(const Graph& g, const GadgetOutput& gadget,
                              std::span<const Vertex> independent);

/// All of {x_i z_i, y_i z_i, z_i v_i} for members, {x_i z_i, y_i z_i}
/// otherwise. Size 2n + |independent|.
EopSet build_planar_witness(const Graph& g, const GadgetOutput& gadget,
                            std::span<const Vertex> independent);

/// Dispatches on gadget.kind. Throws Error{NotIndependent} unless the set is
/// an independent set of g.
EopSet build_witness(const Graph& g, const GadgetOutput& gadget,
                     std::span<const Vertex> independent);

struct ReductionReport {
  GadgetKind kind = GadgetKind::Universal;
  Vertex source_n = 0;
  EdgeId source_m = 0;
  Vertex gadget_n = 0;
  EdgeId gadget_m = 0;
  Vertex gadget_min_degree = 0;
  Vertex gadget_max_degree = 0;
  bool gadget_connected = false;
  bool gadget_bipartite = false;
  bool gadget_eulerian = false;
  std::int64_t alpha = 0;
  std::int64_t predicted = 0;  // offset + alpha
  /// nullopt in witness-only mode, when the exact solve ran out of budget.
  std::optional<std::int64_t> exact;
  std::size_t witness_size = 0;
  bool witness_valid = false;
  std::vector<std::string> structure_failures;
  std::uint64_t nodes_explored = 0;

  bool exact_mode() const noexcept { return exact.has_value(); }
  bool structure_ok() const noexcept { return structure_failures.empty(); }
  bool witness_ok() const noexcept {
    return witness_valid && static_cast<std::int64_t>(witness_size) == predicted;
  }
  /// nullopt in witness-only mode.
  std::optional<bool> identity_holds() const noexcept {
    if (!exact) return std::nullopt;
    return *exact == predicted;
  }
  bool passed() const noexcept {
    return structure_ok() && witness_ok() && identity_holds().value_or(true);
  }
};

/// Builds the gadget, computes alpha(g) exactly, checks the gadget's
/// structural invariants and a witness built from a maximum independent set,
/// then solves the gadget exactly. If that solve exceeds the budget the
/// report falls back to witness-only mode.
ReductionReport verify_reduction(const Graph& g, GadgetKind kind,
                                 const SolverOptions& options = {});

}  // namespace eop
