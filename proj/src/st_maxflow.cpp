#include "planarflow/st_maxflow.hpp"

#include <algorithm>
#include <queue>

#include "planarflow/flow_cycles.hpp"

namespace planarflow {

void GraphView::add_node(NodeId v) {
  if (static_cast<NodeId>(node_in.size()) <= v) node_in.resize(v + 1, 0);
  if (!node_in[v]) {
    node_in[v] = 1;
    nodes.push_back(v);
  }
}

void GraphView::add_arc(const Embedding& emb, ArcId a) {
  if (static_cast<ArcId>(arc_in.size()) <= a) arc_in.resize(a + 1, 0);
  if (!arc_in[a]) {
    PF_CHECK(has_node(emb.arc(a).tail) && has_node(emb.arc(a).head),
             "view arcs must keep their endpoints");
    arc_in[a] = 1;
    arcs.push_back(a);
  }
}

GraphView GraphView::full(const Embedding& emb) {
  GraphView view;
  view.node_in.assign(emb.node_count(), 1);
  view.nodes.resize(emb.node_count());
  for (NodeId v = 0; v < emb.node_count(); ++v) view.nodes[v] = v;
  view.arc_in.assign(emb.arc_space(), 0);
  for (ArcId a = 0; a < emb.arc_space(); ++a)
    if (emb.arc_alive(a)) {
      view.arc_in[a] = 1;
      view.arcs.push_back(a);
    }
  return view;
}

GraphView GraphView::of(const Embedding& emb, const std::vector<NodeId>& nodes,
                        const std::vector<ArcId>& arcs) {
  GraphView view;
  view.node_in.assign(emb.node_count(), 0);
  view.arc_in.assign(emb.arc_space(), 0);
  for (NodeId v : nodes) view.add_node(v);
  for (ArcId a : arcs) view.add_arc(emb, a);
  return view;
}

Cap DinicEngine::limited_max_st_flow(Workspace& ws, const StFlowRequest& req) {
  const Embedding& emb = ws.emb;
  FlowState& state = ws.flow;
  const GraphView& view = *req.subgraph;
  PF_CHECK(req.source != req.sink, "source and sink must differ");
  PF_CHECK(view.has_node(req.source) && view.has_node(req.sink),
           "source and sink must belong to the subgraph");
  if (req.limit < 0) throw Error("negative flow limit");

  if (level_.size() < static_cast<size_t>(emb.node_count())) {
    level_.resize(emb.node_count());
    cursor_.resize(emb.node_count());
    cursor_left_.resize(emb.node_count());
  }
  if (delta_.size() < static_cast<size_t>(emb.dart_space()))
    delta_.assign(emb.dart_space(), 0);
  touched_.clear();

  auto usable = [&](DartId d) {
    return view.has_arc(dart_arc(d)) && state.residual(d) > 0;
  };
  auto record = [&](DartId d, Cap amount) {
    state.add_flow_on_dart(emb, d, amount);
    if (delta_[d] == 0 && delta_[rev(d)] == 0) touched_.push_back(d);
    delta_[d] += amount;
    delta_[rev(d)] -= amount;
  };

  Cap pushed = 0;
  bool flushed = false;
  std::vector<NodeId> node_stack;
  std::vector<DartId> path;

  while (!flushed) {
    if (!is_inf(req.limit) && pushed >= req.limit) break;

    // Phase: BFS level graph over residual darts of the view.
    for (NodeId v : view.nodes) level_[v] = -1;
    level_[req.source] = 0;
    std::queue<NodeId> queue;
    queue.push(req.source);
    while (!queue.empty()) {
      NodeId v = queue.front();
      queue.pop();
      if (v == req.sink) continue;
      emb.for_darts_at(v, [&](DartId d) {
        if (!usable(d)) return;
        NodeId w = emb.dart_head(d);
        if (level_[w] == -1) {
          level_[w] = level_[v] + 1;
          queue.push(w);
        }
      });
    }
    if (level_[req.sink] == -1) break;

    for (NodeId v : view.nodes) {
      cursor_[v] = emb.first_dart(v);
      cursor_left_[v] = emb.degree(v);
    }

    node_stack.assign(1, req.source);
    path.clear();
    while (!flushed) {
      NodeId v = node_stack.back();
      if (v == req.sink) {
        Cap amount = is_inf(req.limit) ? kInf : req.limit - pushed;
        for (DartId d : path) amount = cap_min(amount, state.residual(d));
        if (is_inf(amount)) {
          // Entirely artificial-capacity path: an unbounded push with no
          // effect on any finite residual. Treat the budget as spent.
          flushed = true;
          break;
        }
        for (DartId d : path) record(d, amount);
        pushed += amount;
        if (!is_inf(req.limit) && pushed >= req.limit) break;
        size_t cut = 0;
        while (cut < path.size() && state.residual(path[cut]) > 0) ++cut;
        PF_CHECK(cut < path.size(), "augmentation saturated nothing");
        path.resize(cut);
        node_stack.resize(cut + 1);
        NodeId u = node_stack.back();
        cursor_[u] = emb.rot_next(cursor_[u]);
        --cursor_left_[u];
        continue;
      }
      DartId chosen = kNoDart;
      while (cursor_left_[v] > 0) {
        DartId d = cursor_[v];
        if (usable(d) && level_[emb.dart_head(d)] == level_[v] + 1) {
          chosen = d;
          break;
        }
        cursor_[v] = emb.rot_next(cursor_[v]);
        --cursor_left_[v];
      }
      if (chosen == kNoDart) {
        if (v == req.source) break;  // blocking flow complete
        level_[v] = -2;              // prune for the rest of the phase
        node_stack.pop_back();
        path.pop_back();
        NodeId u = node_stack.back();
        cursor_[u] = emb.rot_next(cursor_[u]);
        --cursor_left_[u];
        continue;
      }
      path.push_back(chosen);
      node_stack.push_back(emb.dart_head(chosen));
    }
  }

  // The net increment of this call must decompose into source-to-sink
  // paths; drop any cycle components.
  std::vector<NodeId> roots;
  for (DartId d : touched_) {
    if (delta_[d] > 0) roots.push_back(emb.dart_tail(d));
    if (delta_[rev(d)] > 0) roots.push_back(emb.dart_tail(rev(d)));
  }
  detail::cancel_positive_cycles(
      emb, roots, [&](DartId d) { return delta_[d]; },
      [&](DartId d, Cap x) {
        delta_[d] -= x;
        delta_[rev(d)] += x;
        state.add_flow_on_dart(emb, d, -x);
      });
  for (DartId d : touched_) {
    delta_[d] = 0;
    delta_[rev(d)] = 0;
  }
  return pushed;
}

std::unique_ptr<StFlowEngine> make_st_flow_engine(const std::string& name) {
  if (name == "dinic") return std::make_unique<DinicEngine>();
  throw Error("unknown st-flow engine '" + name + "' (available: dinic)");
}

}  // namespace planarflow
