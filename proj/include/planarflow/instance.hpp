#pragma once

#include <vector>

#include "planarflow/common.hpp"
#include "planarflow/planar_graph.hpp"

namespace planarflow {

/// A serializable problem: embedded simple graph, per-dart capacities,
/// supplies, and the sink. Input capacities are finite; supplies may be
/// kInf. The sink carries no supply.
struct Instance {
  Embedding embedding;
  std::vector<Cap> cap_forward;  // per arc
  std::vector<Cap> cap_reverse;  // per arc
  std::vector<Cap> supplies;     // per node; the sink entry is ignored
  NodeId sink = kNoNode;

  NodeId node_count() const { return embedding.node_count(); }
  ArcId arc_count() const { return embedding.arc_space(); }

  /// Checks the instance contract (ranges, finiteness, simplicity is
  /// already enforced by the embedding). Throws Error on violation.
  void validate() const;

  bool operator==(const Instance& other) const;
};

/// Rotation of v as a plain list starting at first_dart (serialization
/// order).
std::vector<DartId> rotation_list(const Embedding& emb, NodeId v);

}  // namespace planarflow
