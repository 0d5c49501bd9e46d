#include "planarflow/flow_state.hpp"

namespace planarflow {

FlowState::FlowState(const Embedding& emb, NodeId sink) : sink_(sink) {
  PF_CHECK(sink >= 0 && sink < emb.node_count(), "sink out of range");
  capacity_.assign(emb.dart_space(), 0);
  flow_.assign(emb.dart_space(), 0);
  supply_.assign(emb.node_count(), 0);
  outflow_.assign(emb.node_count(), 0);
}

void FlowState::set_capacity(DartId d, Cap c) {
  if (c < 0) throw Error("capacities must be nonnegative");
  capacity_[d] = c;
}

Cap FlowState::supply(NodeId v) const {
  PF_CHECK(v != sink_, "the sink carries no supply");
  return supply_[v];
}

void FlowState::set_supply(NodeId v, Cap s) {
  PF_CHECK(v != sink_, "the sink carries no supply");
  if (s < 0) throw Error("supplies must be nonnegative");
  supply_[v] = s;
}

Cap FlowState::residual_supply(NodeId v) const {
  return cap_sub(supply_[v], outflow_[v]);
}

void FlowState::add_flow_on_dart(const Embedding& emb, DartId d, Cap amount) {
  flow_[d] += amount;
  flow_[rev(d)] -= amount;
  outflow_[emb.dart_tail(d)] += amount;
  outflow_[emb.dart_head(d)] -= amount;
}

void FlowState::push(const Embedding& emb, std::span<const DartId> path,
                     Cap amount) {
  if (amount < 0) throw Error("push amount must be nonnegative");
  for (size_t i = 0; i < path.size(); ++i) {
    DartId d = path[i];
    if (!emb.arc_alive(dart_arc(d))) throw Error("push along a dead arc");
    if (i + 1 < path.size() && emb.dart_head(d) != emb.dart_tail(path[i + 1]))
      throw Error("push darts do not form a path");
    if (!is_inf(residual(d)) && amount > residual(d))
      throw Error("push amount exceeds residual capacity");
  }
  if (amount == 0) return;
  for (DartId d : path) add_flow_on_dart(emb, d, amount);
}

bool FlowState::is_feasible_preflow(const Embedding& emb) const {
  for (ArcId a = 0; a < emb.arc_space(); ++a) {
    if (!emb.arc_alive(a)) continue;
    for (DartId d : {forward_dart(a), reverse_dart(a)}) {
      if (is_inf(capacity_[d])) continue;
      if (flow_[d] > capacity_[d]) return false;
    }
  }
  for (NodeId v = 0; v < emb.node_count(); ++v) {
    if (v == sink_) continue;
    if (is_inf(supply_[v])) continue;
    if (outflow_[v] > supply_[v]) return false;
  }
  return true;
}

bool FlowState::is_feasible_flow(const Embedding& emb) const {
  if (!is_feasible_preflow(emb)) return false;
  for (NodeId v = 0; v < emb.node_count(); ++v)
    if (v != sink_ && outflow_[v] < 0) return false;
  return true;
}

void FlowState::on_arc_added(ArcId a, Cap cap_fwd, Cap cap_rev) {
  size_t need = (static_cast<size_t>(a) + 1) * 2;
  if (capacity_.size() < need) {
    capacity_.resize(need, 0);
    flow_.resize(need, 0);
  }
  if (cap_fwd < 0 || cap_rev < 0) throw Error("capacities must be nonnegative");
  capacity_[forward_dart(a)] = cap_fwd;
  capacity_[reverse_dart(a)] = cap_rev;
  flow_[forward_dart(a)] = 0;
  flow_[reverse_dart(a)] = 0;
}

void FlowState::on_arc_discarded(const Embedding& emb, ArcId a) {
  const Arc& arc = emb.arc(a);
  outflow_[arc.tail] -= flow_[forward_dart(a)];
  outflow_[arc.head] -= flow_[reverse_dart(a)];
  flow_[forward_dart(a)] = 0;
  flow_[reverse_dart(a)] = 0;
  capacity_[forward_dart(a)] = 0;
  capacity_[reverse_dart(a)] = 0;
}

std::vector<Cap> FlowState::recompute_outflows(const Embedding& emb) const {
  std::vector<Cap> out(emb.node_count(), 0);
  for (ArcId a = 0; a < emb.arc_space(); ++a) {
    if (!emb.arc_alive(a)) continue;
    out[emb.arc(a).tail] += flow_[forward_dart(a)];
    out[emb.arc(a).head] += flow_[reverse_dart(a)];
  }
  return out;
}

}  // namespace planarflow
