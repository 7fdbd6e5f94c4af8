#include "eop/report.hpp"

#include <string>

namespace eop {

Json graph_stats(const Graph& g) {
  return Json{{"n", g.order()},
              {"m", g.size()},
              {"min_degree", g.min_degree()},
              {"max_degree", g.max_degree()}};
}

Json edge_pairs(const Graph& g, const EopSet& set) {
  Json out = Json::array();
  for (EdgeId id : set.ids()) out.push_back({g.edge(id).u + 1, g.edge(id).v + 1});
  return out;
}

Json vertex_labels(std::span<const Vertex> vertices) {
  Json out = Json::array();
  for (Vertex v : vertices) out.push_back(v + 1);
  return out;
}

Json graph_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u + 1, e.v + 1});
  return Json{{"n", g.order()}, {"edges", std::move(edges)}};
}

namespace {

Json optional_int(const std::optional<std::int64_t>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json to_json(const StructuralReport& r) {
  return Json{{"connected", r.connected},
              {"bipartite", r.bipartite()},
              {"tree", r.tree},
              {"eulerian", r.eulerian},
              {"diameter", r.diameter ? Json(*r.diameter) : Json("infinite")},
              {"claw_free", r.claw_free},
              {"min_degree", r.min_degree},
              {"max_degree", r.max_degree}};
}

Json to_json(const ReductionReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.structure_failures) failures.push_back(f);
  const auto identity = r.identity_holds();
  return Json{{"kind", std::string(to_string(r.kind))},
              {"mode", r.exact_mode() ? "exact" : "witness-only"},
              {"source", {{"n", r.source_n}, {"m", r.source_m}, {"alpha", r.alpha}}},
              {"gadget",
               {{"n", r.gadget_n},
                {"m", r.gadget_m},
                {"min_degree", r.gadget_min_degree},
                {"max_degree", r.gadget_max_degree},
                {"connected", r.gadget_connected},
                {"bipartite", r.gadget_bipartite},
                {"eulerian", r.gadget_eulerian}}},
              {"predicted", r.predicted},
              {"exact", optional_int(r.exact)},
              {"witness", {{"size", r.witness_size}, {"valid", r.witness_valid}}},
              {"structure_failures", std::move(failures)},
              {"identity_holds", identity ? Json(*identity) : Json(nullptr)},
              {"nodes_explored", r.nodes_explored},
              {"passed", r.passed()}};
}

Json to_json(const DeltaBound& r) {
  return Json{{"rho_eo", r.rho},
              {"min_degree", r.min_degree},
              {"m", r.edges},
              {"bound_holds", r.bound_holds},
              {"is_tight", r.is_tight}};
}

Json to_json(const FamilyFWitness& w) {
  return Json{{"k", w.k},
              {"A", vertex_labels(w.a_set)},
              {"B", vertex_labels(w.b_set)},
              {"C", vertex_labels(w.c_set)}};
}

Json to_json(const CharacterizationCheck& r) {
  return Json{{"tight", r.tight},
              {"star_forest", r.star_forest},
              {"family_f", r.family_f ? to_json(*r.family_f) : Json(nullptr)},
              {"mixed_components", r.mixed_components},
              {"consistent", r.consistent}};
}

Json to_json(const Graph& g, const RemovalProfile& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    const Edge edge = g.edge(e.edge);
    entries.push_back(Json{{"edge", {edge.u + 1, edge.v + 1}},
                           {"rho_after", e.rho_after},
                           {"within_bounds", e.within_bounds}});
  }
  return Json{{"rho_before", r.rho_before},
              {"bounds_apply", r.bounds_apply},
              {"bounds_ok", r.bounds_ok},
              {"entries", std::move(entries)}};
}

Json to_json(const SmallRhoReport& r) {
  return Json{{"rho_eo", r.rho},
              {"complete", r.complete},
              {"diameter", r.diameter ? Json(*r.diameter) : Json("infinite")},
              {"diameter_in_2_4", r.diameter_condition},
              {"claw_free", r.claw_free},
              {"pair_condition", r.pair_condition},
              {"rho_one_agrees", r.rho_one_agrees},
              {"rho_two_agrees", r.rho_two_agrees},
              {"mismatch", r.mismatch()}};
}

Json error_report(std::string_view kind, std::string_view message) {
  return Json{{"schema_version", kReportSchemaVersion},
              {"ok", false},
              {"error", {{"kind", std::string(kind)}, {"message", std::string(message)}}}};
}

}  // namespace eop
