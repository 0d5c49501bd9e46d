#pragma once

#include "planarflow/flow_state.hpp"
#include "planarflow/planar_graph.hpp"

namespace planarflow {

/// Cancels every directed cycle among positive-flow darts by subtracting the
/// cycle bottleneck. Conservation-neutral: the value and every node outflow
/// are unchanged; feasibility is preserved (flows only shrink toward zero).
void acyclify(const Embedding& emb, FlowState& state);

/// Converts an acyclic feasible preflow into a feasible flow of the same
/// value by returning each node's excess along positive-flow in-darts, in
/// reverse topological order of the positive-flow DAG. Throws if the
/// positive-flow subgraph contains a cycle.
///
/// Darts leaving the sink are never reduced (that would change the value);
/// in a maximum preflow no excess is ever fed from the sink, which is
/// asserted at runtime.
void preflow_to_flow(const Embedding& emb, FlowState& state);

}  // namespace planarflow
