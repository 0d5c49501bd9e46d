#include "planarflow/preflow_converter.hpp"

#include <algorithm>
#include <queue>

#include "planarflow/flow_cycles.hpp"

namespace planarflow {

void acyclify(const Embedding& emb, FlowState& state) {
  std::vector<NodeId> roots(emb.node_count());
  for (NodeId v = 0; v < emb.node_count(); ++v) roots[v] = v;
  detail::cancel_positive_cycles(
      emb, roots, [&](DartId d) { return state.flow(d); },
      [&](DartId d, Cap x) { state.add_flow_on_dart(emb, d, -x); });
}

void preflow_to_flow(const Embedding& emb, FlowState& state) {
  NodeId n = emb.node_count();

  // Kahn order of the positive-flow DAG; detects cycles.
  std::vector<int32_t> indeg(n, 0);
  for (ArcId a = 0; a < emb.arc_space(); ++a) {
    if (!emb.arc_alive(a)) continue;
    for (DartId d : {forward_dart(a), reverse_dart(a)})
      if (state.flow(d) > 0) ++indeg[emb.dart_head(d)];
  }
  std::vector<NodeId> topo;
  topo.reserve(n);
  std::queue<NodeId> queue;
  for (NodeId v = 0; v < n; ++v)
    if (indeg[v] == 0) queue.push(v);
  while (!queue.empty()) {
    NodeId v = queue.front();
    queue.pop();
    topo.push_back(v);
    emb.for_darts_at(v, [&](DartId d) {
      if (state.flow(d) > 0 && --indeg[emb.dart_head(d)] == 0)
        queue.push(emb.dart_head(d));
    });
  }
  if (static_cast<NodeId>(topo.size()) != n)
    throw Error("preflow_to_flow requires an acyclic preflow");

  // Reverse topological order: downstream nodes first, so returned excess
  // surfaces at nodes that are still to be processed.
  Cap value_before = state.value();
  for (size_t i = topo.size(); i-- > 0;) {
    NodeId v = topo[i];
    if (v == state.sink()) continue;
    Cap excess = state.inflow(v);
    if (excess <= 0) continue;

    std::vector<DartId> in_darts;
    emb.for_darts_at(v, [&](DartId d) {
      DartId in = rev(d);
      if (state.flow(in) > 0 && emb.dart_tail(in) != state.sink())
        in_darts.push_back(in);
    });
    std::sort(in_darts.begin(), in_darts.end());
    for (DartId d : in_darts) {
      if (excess <= 0) break;
      Cap x = std::min(state.flow(d), excess);
      state.add_flow_on_dart(emb, d, -x);
      excess -= x;
    }
    PF_CHECK(excess <= 0,
             "excess not backed by positive in-darts; input was not a "
             "feasible preflow or excess is fed from the sink");
  }
  PF_CHECK(state.value() == value_before, "conversion changed the value");
}

}  // namespace planarflow
