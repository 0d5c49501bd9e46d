#pragma once

#include <memory>
#include <string>
#include <vector>

#include "planarflow/common.hpp"
#include "planarflow/flow_state.hpp"
#include "planarflow/planar_graph.hpp"

namespace planarflow {

/// Restriction of a workspace graph to a node/arc subset. Arcs must be
/// closed under endpoints. Views are cheap index sets; the flow lives in the
/// shared global state.
struct GraphView {
  std::vector<uint8_t> node_in;  // indexed by node id
  std::vector<uint8_t> arc_in;   // indexed by arc id
  std::vector<NodeId> nodes;
  std::vector<ArcId> arcs;

  bool has_node(NodeId v) const {
    return v >= 0 && v < static_cast<NodeId>(node_in.size()) && node_in[v];
  }
  bool has_arc(ArcId a) const {
    return a >= 0 && a < static_cast<ArcId>(arc_in.size()) && arc_in[a];
  }
  void add_node(NodeId v);
  void add_arc(const Embedding& emb, ArcId a);

  static GraphView full(const Embedding& emb);
  static GraphView of(const Embedding& emb, const std::vector<NodeId>& nodes,
                      const std::vector<ArcId>& arcs);
};

struct StFlowRequest {
  const GraphView* subgraph = nullptr;
  NodeId source = kNoNode;
  NodeId sink = kNoNode;
  /// Push budget of the source; callers pass the residual supply
  /// sigma_f(source), which may be kInf.
  Cap limit = 0;
};

/// Limited max st-flow subroutine over the current residual graph. The
/// recursion only relies on this contract, so an O(n log n) planar engine
/// can be slotted in behind it later.
class StFlowEngine {
 public:
  virtual ~StFlowEngine() = default;
  virtual const char* name() const = 0;

  /// Augments the global flow by a maximum st-flow of the residual
  /// subgraph, capped at request.limit. Returns the pushed value.
  /// Afterwards the pushed budget is exhausted or no residual
  /// source-to-sink path remains (an unbounded push is cut short once an
  /// all-infinite path turns up; such a push would be invisible after the
  /// artificial arcs carrying it are removed). The net increment is
  /// cycle-free.
  virtual Cap limited_max_st_flow(Workspace& ws, const StFlowRequest& req) = 0;
};

/// Blocking-flow (Dinic) engine with deterministic rotation-order traversal.
class DinicEngine : public StFlowEngine {
 public:
  const char* name() const override { return "dinic"; }
  Cap limited_max_st_flow(Workspace& ws, const StFlowRequest& req) override;

 private:
  std::vector<int32_t> level_;
  std::vector<DartId> cursor_;
  std::vector<int32_t> cursor_left_;
  std::vector<Cap> delta_;
  std::vector<DartId> touched_;
};

/// Engine registry ("dinic" is the only built-in). Throws on unknown names.
std::unique_ptr<StFlowEngine> make_st_flow_engine(const std::string& name);

}  // namespace planarflow
