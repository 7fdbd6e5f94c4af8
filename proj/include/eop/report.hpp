#pragma once

#include <string_view>

#include "json.hpp"

#include "eop/bounds.hpp"
#include "eop/error.hpp"
#include "eop/gadgets.hpp"
#include "eop/graph.hpp"
#include "eop/predicates.hpp"

namespace eop {

using Json = nlohmann::ordered_json;

/// Bumped whenever a key is renamed or removed from any report.
inline constexpr int kReportSchemaVersion = 1;

/// {"n", "m", "min_degree", "max_degree"}.
Json graph_stats(const Graph& g);
/// [[u, v], ...] with 1-based labels.
Json edge_pairs(const Graph& g, const EopSet& set);
Json vertex_labels(std::span<const Vertex> vertices);
/// {"n", "edges": [[u, v], ...]} with 1-based labels.
Json graph_json(const Graph& g);

Json to_json(const StructuralReport& r);
Json to_json(const ReductionReport& r);
Json to_json(const DeltaBound& r);
Json to_json(const FamilyFWitness& w);
Json to_json(const CharacterizationCheck& r);
Json to_json(const Graph& g, const RemovalProfile& r);
Json to_json(const SmallRhoReport& r);

/// {"schema_version", "ok": false, "error": {"kind", "message"}}.
Json error_report(std::string_view kind, std::string_view message);

}  // namespace eop
