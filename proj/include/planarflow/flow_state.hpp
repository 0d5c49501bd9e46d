#pragma once

#include <span>
#include <vector>

#include "planarflow/common.hpp"
#include "planarflow/planar_graph.hpp"

namespace planarflow {

/// The single global antisymmetric flow assignment plus capacity and supply
/// functions. Flows are always finite; capacities and supplies may be kInf.
/// Per-node outflows are maintained incrementally by push and arc removal.
class FlowState {
 public:
  FlowState() = default;
  FlowState(const Embedding& emb, NodeId sink);

  NodeId sink() const { return sink_; }

  Cap capacity(DartId d) const { return capacity_[d]; }
  void set_capacity(DartId d, Cap c);

  /// Supply of a non-sink node (sinks carry no supply).
  Cap supply(NodeId v) const;
  void set_supply(NodeId v, Cap s);

  Cap flow(DartId d) const { return flow_[d]; }
  /// Residual capacity c_f(d) = c(d) - f(d); kInf stays kInf.
  Cap residual(DartId d) const { return cap_sub(capacity_[d], flow_[d]); }

  Cap outflow(NodeId v) const { return outflow_[v]; }
  Cap inflow(NodeId v) const { return -outflow_[v]; }
  /// Residual supply sigma_f(v) = sigma(v) - outflow(v); kInf stays kInf.
  /// Negative outflow (excess) raises it.
  Cap residual_supply(NodeId v) const;

  /// Value of the assignment: inflow at the sink.
  Cap value() const { return -outflow_[sink_]; }

  /// Adds `amount` to the flow on every dart of the path (and subtracts it
  /// on the reverses). The darts must form a contiguous path and amount must
  /// not exceed any residual capacity; otherwise throws and leaves the state
  /// unchanged.
  void push(const Embedding& emb, std::span<const DartId> path, Cap amount);

  /// Unchecked single-dart update used by the engines; keeps antisymmetry
  /// and the outflow cache.
  void add_flow_on_dart(const Embedding& emb, DartId d, Cap amount);

  bool is_feasible_preflow(const Embedding& emb) const;
  /// Feasible preflow that also obeys conservation: outflow(v) >= 0 for
  /// every non-sink node.
  bool is_feasible_flow(const Embedding& emb) const;

  /// Arc-slot bookkeeping, called by Workspace.
  void on_arc_added(ArcId a, Cap cap_fwd, Cap cap_rev);
  /// Discards the flow carried by arc `a` (to be removed); the endpoints'
  /// outflows change accordingly.
  void on_arc_discarded(const Embedding& emb, ArcId a);

  /// Recomputes outflows from the flow array (verification aid).
  std::vector<Cap> recompute_outflows(const Embedding& emb) const;

 private:
  NodeId sink_ = kNoNode;
  std::vector<Cap> capacity_;  // per dart
  std::vector<Cap> flow_;     // per dart, antisymmetric
  std::vector<Cap> supply_;   // per node; sink entry unused
  std::vector<Cap> outflow_;  // per node, cached
};

/// Read view over a FlowState exposing the residual functions.
struct ResidualView {
  const FlowState& state;

  Cap c_f(DartId d) const { return state.residual(d); }
  Cap sigma_f(NodeId v) const { return state.residual_supply(v); }
};

/// An embedding and its flow state, kept structurally in sync.
struct Workspace {
  Embedding emb;
  FlowState flow;

  ArcId add_arc(NodeId tail, NodeId head, DartId after_at_tail,
                DartId after_at_head, Cap cap_fwd, Cap cap_rev,
                bool artificial) {
    ArcId a = emb.add_arc(tail, head, after_at_tail, after_at_head, artificial);
    flow.on_arc_added(a, cap_fwd, cap_rev);
    return a;
  }

  /// Removes the arc; any flow it carried is discarded, which surfaces as
  /// excess / deficit at its endpoints.
  void remove_arc(ArcId a) {
    flow.on_arc_discarded(emb, a);
    emb.remove_arc(a);
  }
};

}  // namespace planarflow
