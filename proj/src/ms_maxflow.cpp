#include "planarflow/ms_maxflow.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <unordered_map>

namespace planarflow {

void SolverConfig::validate() const {
  if (n0 < 4) throw Error("n0 must be at least 4");
  if (c_sep <= 0) throw Error("c_sep must be positive");
}

int DecompositionRecord::max_processed_count() const {
  int best = 0;
  for (int c : processed_counts) best = std::max(best, c);
  return best;
}

bool DecompositionRecord::lemma2_all_ok() const {
  for (const auto& it : iterations)
    if (!it.lemma2_no_admissible) return false;
  return true;
}

bool DecompositionRecord::lemma8_holds() const {
  std::set<NodeId> sep_nodes;
  for (const auto& it : iterations)
    sep_nodes.insert(it.separator.begin(), it.separator.end());
  for (const auto& it : iterations)
    for (NodeId v : it.c_cycle)
      if (!sep_nodes.count(v)) return false;
  return true;
}

namespace {

bool certificate_impl(const Embedding& emb, const FlowState& state,
                      std::span<const NodeId> targets, const GraphView* within) {
  std::vector<char> reached(emb.node_count(), 0);
  std::vector<char> is_target(emb.node_count(), 0);
  std::queue<NodeId> queue;
  for (NodeId t : targets) {
    if (!reached[t]) {
      reached[t] = 1;
      is_target[t] = 1;
      queue.push(t);
    }
  }
  // Reverse reachability over residual darts.
  while (!queue.empty()) {
    NodeId x = queue.front();
    queue.pop();
    emb.for_darts_at(x, [&](DartId e) {
      ArcId a = dart_arc(e);
      if (!emb.arc_alive(a)) return;
      if (within && !within->has_arc(a)) return;
      // rev(e) runs head(e) -> x; usable if it has residual capacity.
      if (state.residual(rev(e)) <= 0) return;
      NodeId u = emb.dart_head(e);
      if (!reached[u]) {
        reached[u] = 1;
        queue.push(u);
      }
    });
  }
  for (NodeId u = 0; u < emb.node_count(); ++u) {
    if (!reached[u] || is_target[u] || u == state.sink()) continue;
    if (state.residual_supply(u) > 0) return false;
  }
  return true;
}

}  // namespace

bool certificate_no_admissible_path(const Embedding& emb, const FlowState& state,
                                    std::span<const NodeId> targets) {
  return certificate_impl(emb, state, targets, nullptr);
}

bool certificate_no_admissible_path(const Embedding& emb, const FlowState& state,
                                    std::span<const NodeId> targets,
                                    const GraphView& within) {
  return certificate_impl(emb, state, targets, &within);
}

AttachResult attach_artificial_sink(Workspace& ws, const GraphView& h_view,
                                    const std::vector<DartId>& cycle_walk) {
  const Embedding& emb = ws.emb;
  size_t m = cycle_walk.size();
  if (m < 2) throw Error("cycle walk must have at least two darts");

  auto next_in_view = [&](DartId d) {
    DartId e = emb.rot_next(d);
    while (!h_view.has_arc(dart_arc(e))) e = emb.rot_next(e);
    return e;
  };
  for (size_t j = 0; j < m; ++j) {
    DartId prev = cycle_walk[(j + m - 1) % m];
    DartId cur = cycle_walk[j];
    if (!emb.arc_alive(dart_arc(cur)) || !h_view.has_arc(dart_arc(cur)))
      throw Error("cycle walk leaves the subgraph");
    if (emb.dart_head(prev) != emb.dart_tail(cur) ||
        next_in_view(rev(prev)) != cur)
      throw Error("cycle walk is not a face boundary of the subgraph");
  }

  NodeId t_prime = emb.dart_tail(cycle_walk[0]);
  size_t hub_pos = 0;
  for (size_t j = 1; j < m; ++j)
    if (emb.dart_tail(cycle_walk[j]) < t_prime) {
      t_prime = emb.dart_tail(cycle_walk[j]);
      hub_pos = j;
    }

  AttachResult res;
  res.sink = t_prime;
  // Every absorption arc lands in the hub corner; inserting each new one
  // directly after the anchor leaves them in reverse walk order, which keeps
  // the face structure of the subgraph planar.
  DartId hub_anchor = rev(cycle_walk[(hub_pos + m - 1) % m]);
  std::vector<char> seen(emb.node_count(), 0);
  seen[t_prime] = 1;
  for (size_t j = 0; j < m; ++j) {
    NodeId w = emb.dart_tail(cycle_walk[j]);
    if (seen[w]) continue;
    seen[w] = 1;
    ArcId a = ws.add_arc(w, t_prime, emb.rot_prev(cycle_walk[j]), hub_anchor,
                         kInf, 0, /*artificial=*/true);
    res.arcs.push_back(a);
  }
  return res;
}

void detach_artificial_sink(Workspace& ws, const AttachResult& attached) {
  for (ArcId a : attached.arcs) ws.remove_arc(a);
}

namespace {

uint64_t pair_key(NodeId u, NodeId w) {
  if (u > w) std::swap(u, w);
  return (static_cast<uint64_t>(static_cast<uint32_t>(u)) << 32) |
         static_cast<uint32_t>(w);
}

struct SideMap {
  std::vector<NodeId> boundary;  // S_i in original ids
  std::vector<Side> node_side;   // valid for view nodes
  std::vector<Side> arc_side;    // valid for view arcs
  size_t strictly_in = 0;
  size_t strictly_out = 0;
};

/// Simple deduplicated copy of the view (one arc per node pair), ready for
/// triangulation and the separator.
struct TempGraph {
  Embedding emb;
  std::vector<NodeId> temp2orig;
  std::vector<NodeId> orig2temp;
  std::vector<ArcId> temp_arc_of;  // original arc -> temp arc of its pair
};

TempGraph build_temp(const Embedding& emb, const GraphView& view) {
  TempGraph tg;
  tg.temp2orig = view.nodes;
  std::sort(tg.temp2orig.begin(), tg.temp2orig.end());
  tg.orig2temp.assign(emb.node_count(), kNoNode);
  for (size_t i = 0; i < tg.temp2orig.size(); ++i)
    tg.orig2temp[tg.temp2orig[i]] = static_cast<NodeId>(i);

  std::vector<ArcId> sorted_arcs = view.arcs;
  std::sort(sorted_arcs.begin(), sorted_arcs.end());
  std::unordered_map<uint64_t, ArcId> pair_to_temp;
  pair_to_temp.reserve(sorted_arcs.size() * 2);
  tg.temp_arc_of.assign(emb.arc_space(), kNoArc);
  std::vector<ArcId> rep_arcs;  // temp arc -> representative original arc
  for (ArcId a : sorted_arcs) {
    uint64_t key = pair_key(emb.arc(a).tail, emb.arc(a).head);
    auto [it, fresh] =
        pair_to_temp.emplace(key, static_cast<ArcId>(rep_arcs.size()));
    if (fresh) rep_arcs.push_back(a);
    tg.temp_arc_of[a] = it->second;
  }
  std::vector<ArcId> orig2temp_arc(emb.arc_space(), kNoArc);
  for (size_t t = 0; t < rep_arcs.size(); ++t) orig2temp_arc[rep_arcs[t]] = t;

  std::vector<std::vector<DartId>> rotations(tg.temp2orig.size());
  for (size_t i = 0; i < tg.temp2orig.size(); ++i) {
    emb.for_darts_at(tg.temp2orig[i], [&](DartId d) {
      ArcId t = orig2temp_arc[dart_arc(d)];
      if (t != kNoArc) rotations[i].push_back(t * 2 + (d & 1));
    });
  }
  tg.emb = Embedding::build(static_cast<NodeId>(tg.temp2orig.size()),
                            static_cast<ArcId>(rep_arcs.size()), rotations);
  return tg;
}

SideMap separate_view(const Embedding& emb, const GraphView& view, NodeId sink,
                      const SolverConfig& cfg) {
  TempGraph tg = build_temp(emb, view);
  triangulate(tg.emb);

  // The sink must never end up strictly enclosed, so the infinite face is
  // re-anchored at a face incident to it before each cut.
  NodeId temp_sink = tg.orig2temp[sink];
  PF_CHECK(temp_sink != kNoNode, "sink left the working view");
  tg.emb.set_infinite_face_dart(tg.emb.first_dart(temp_sink));

  SeparatorConfig sep_cfg;
  sep_cfg.c_sep = cfg.c_sep;
  Separator sep = find_cycle_separator(tg.emb, sep_cfg);
  CycleSides sides = classify_cycle_sides(tg.emb, sep.boundary);

  {
    // The dual-subtree interior set and the flood-fill interior set must
    // agree; they are computed along different routes.
    std::vector<NodeId> flooded;
    for (NodeId v = 0; v < tg.emb.node_count(); ++v)
      if (sides.node_side[v] == Side::kInside) flooded.push_back(v);
    PF_CHECK(flooded == sep.enclosed,
             "separator interior disagrees with face flood");
  }

  SideMap out;
  out.boundary.reserve(sep.boundary.size());
  for (NodeId v : sep.boundary) out.boundary.push_back(tg.temp2orig[v]);
  out.node_side.assign(emb.node_count(), Side::kOn);
  for (NodeId v : view.nodes) {
    Side s = sides.node_side[tg.orig2temp[v]];
    out.node_side[v] = s;
    if (s == Side::kInside) ++out.strictly_in;
    if (s == Side::kOutside) ++out.strictly_out;
  }
  out.arc_side.assign(emb.arc_space(), Side::kOn);
  for (ArcId a : view.arcs) out.arc_side[a] = sides.arc_side[tg.temp_arc_of[a]];
  return out;
}

GraphView side_view(const Embedding& emb, const GraphView& cur,
                    const SideMap& sides, Side keep) {
  GraphView out;
  out.node_in.assign(emb.node_count(), 0);
  out.arc_in.assign(emb.arc_space(), 0);
  for (NodeId v : cur.nodes)
    if (sides.node_side[v] == Side::kOn || sides.node_side[v] == keep)
      out.add_node(v);
  for (ArcId a : cur.arcs)
    if (sides.arc_side[a] == Side::kOn || sides.arc_side[a] == keep)
      out.add_arc(emb, a);
  return out;
}

void check_view_connected(const Embedding& emb, const GraphView& view,
                          const char* what) {
  PF_CHECK(!view.nodes.empty(), "empty view");
  std::vector<char> seen(emb.node_count(), 0);
  std::queue<NodeId> queue;
  queue.push(view.nodes[0]);
  seen[view.nodes[0]] = 1;
  size_t reached = 1;
  while (!queue.empty()) {
    NodeId v = queue.front();
    queue.pop();
    emb.for_darts_at(v, [&](DartId d) {
      if (!view.has_arc(dart_arc(d))) return;
      NodeId w = emb.dart_head(d);
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push(w);
      }
    });
  }
  PF_CHECK(reached == view.nodes.size(), what);
}

DartId next_view_dart(const Embedding& emb, const GraphView& view, DartId d) {
  DartId e = emb.rot_next(d);
  while (!view.has_arc(dart_arc(e))) e = emb.rot_next(e);
  return e;
}

/// Boundary walk of the external face of H: the H-face whose region holds
/// the strictly-outside part. Found from any outside arc hanging off an H
/// node; the walk is traced with the view-restricted face permutation.
std::vector<DartId> trace_external_face(const Embedding& emb,
                                        const GraphView& h_view,
                                        const GraphView& cur,
                                        const SideMap& sides) {
  DartId seed = kNoDart;
  for (NodeId w : h_view.nodes) {
    emb.for_darts_at(w, [&](DartId e) {
      if (seed != kNoDart) return;
      if (cur.has_arc(dart_arc(e)) &&
          sides.arc_side[dart_arc(e)] == Side::kOutside)
        seed = e;
    });
    if (seed != kNoDart) break;
  }
  PF_CHECK(seed != kNoDart, "no outside arc borders the enclosed part");

  // Walk backwards in the rotation to the H-dart opening the corner that
  // contains the outside arc; the face of its reverse is the external face.
  DartId x = emb.rot_prev(seed);
  while (!h_view.has_arc(dart_arc(x))) x = emb.rot_prev(x);
  DartId d0 = rev(x);

  std::vector<DartId> walk;
  DartId d = d0;
  do {
    walk.push_back(d);
    d = next_view_dart(emb, h_view, rev(d));
    PF_CHECK(walk.size() <= static_cast<size_t>(emb.dart_space()),
             "external face walk does not close");
  } while (d != d0);
  return walk;
}

std::vector<NodeId> walk_nodes_first_occurrence(const Embedding& emb,
                                                const std::vector<DartId>& walk) {
  std::vector<NodeId> nodes;
  for (DartId d : walk) {
    NodeId v = emb.dart_tail(d);
    if (std::find(nodes.begin(), nodes.end(), v) == nodes.end())
      nodes.push_back(v);
  }
  return nodes;
}

struct CycleRec {
  std::vector<DartId> walk;
  std::vector<NodeId> nodes;  // first-occurrence order
  bool alive = true;
  int processed = 0;
};

struct Ctx {
  Workspace& ws;
  StFlowEngine& engine;
  const SolverConfig& cfg;
};

void absorb_view(Ctx& ctx, const GraphView& view, NodeId sink) {
  std::vector<NodeId> order = view.nodes;
  std::sort(order.begin(), order.end());
  for (NodeId v : order) {
    if (v == sink) continue;
    Cap budget = ctx.ws.flow.residual_supply(v);
    if (budget <= 0) continue;
    StFlowRequest req{&view, v, sink, budget};
    ctx.engine.limited_max_st_flow(ctx.ws, req);
  }
}

void solve_call(Ctx& ctx, const GraphView& entry_view, NodeId sink,
                DecompositionRecord* rec) {
  if (rec) rec->entry_nodes = entry_view.nodes.size();
  if (entry_view.nodes.size() <= static_cast<size_t>(ctx.cfg.n0)) {
    absorb_view(ctx, entry_view, sink);
    return;
  }

  std::vector<CycleRec> cycles;
  GraphView cur = entry_view;

  while (cur.nodes.size() > static_cast<size_t>(ctx.cfg.n0)) {
    SideMap sides = separate_view(ctx.ws.emb, cur, sink, ctx.cfg);
    // A cut that peels off nothing (or everything) cannot shrink the
    // working graph; the remainder is finished off by the direct absorb
    // and the sweep below.
    if (sides.strictly_in == 0 || sides.strictly_out == 0) break;

    GraphView h = side_view(ctx.ws.emb, cur, sides, Side::kInside);
    GraphView g = side_view(ctx.ws.emb, cur, sides, Side::kOutside);
    check_view_connected(ctx.ws.emb, h, "enclosed part disconnected");
    check_view_connected(ctx.ws.emb, g, "remainder disconnected");

    std::vector<DartId> walk = trace_external_face(ctx.ws.emb, h, cur, sides);
    int new_id = static_cast<int>(cycles.size());
    cycles.push_back(CycleRec{
        walk, walk_nodes_first_occurrence(ctx.ws.emb, walk), true, 0});

    std::vector<int> b_ids;
    for (int j = 0; j < new_id; ++j) {
      if (!cycles[j].alive) continue;
      bool contained = true;
      for (DartId d : cycles[j].walk)
        if (!h.has_arc(dart_arc(d))) {
          contained = false;
          break;
        }
      if (contained) b_ids.push_back(j);
    }
    b_ids.push_back(new_id);

    for (int id : b_ids) {
      AttachResult att = attach_artificial_sink(ctx.ws, h, cycles[id].walk);
      GraphView child = h;
      for (ArcId a : att.arcs) child.add_arc(ctx.ws.emb, a);
      solve_call(ctx, child, att.sink, nullptr);
      detach_artificial_sink(ctx.ws, att);
      ++cycles[id].processed;
      PF_CHECK(cycles[id].processed <= 2,
               "cycle processed more than twice");
    }

    for (CycleRec& c : cycles) {
      if (!c.alive) continue;
      for (DartId d : c.walk)
        if (!g.has_arc(dart_arc(d))) {
          c.alive = false;  // strictly enclosed parts never come back
          break;
        }
    }

    if (rec) {
      IterationRecord it;
      it.separator = sides.boundary;
      it.enclosed_count = sides.strictly_in;
      it.h_nodes = h.nodes;
      it.h_arcs = h.arcs;
      it.c_cycle = cycles[new_id].nodes;
      it.b_cycles = b_ids;
      it.g_size_after = g.nodes.size();
      rec->iterations.push_back(std::move(it));
    }
    cur = std::move(g);
  }

  if (rec) {
    for (IterationRecord& it : rec->iterations) {
      std::vector<NodeId> targets;
      for (int id : it.b_cycles)
        targets.insert(targets.end(), cycles[id].nodes.begin(),
                       cycles[id].nodes.end());
      GraphView hv = GraphView::of(ctx.ws.emb, it.h_nodes, it.h_arcs);
      it.lemma2_no_admissible =
          certificate_no_admissible_path(ctx.ws.emb, ctx.ws.flow, targets, hv);
    }
  }

  absorb_view(ctx, cur, sink);

  for (const CycleRec& c : cycles) {
    for (NodeId v : c.nodes) {
      if (v == sink) continue;
      Cap budget = ctx.ws.flow.residual_supply(v);
      if (budget <= 0) continue;
      StFlowRequest req{&entry_view, v, sink, budget};
      ctx.engine.limited_max_st_flow(ctx.ws, req);
    }
  }

  if (rec) {
    for (const CycleRec& c : cycles) {
      rec->cycle_nodes.push_back(c.nodes);
      rec->processed_counts.push_back(c.processed);
    }
  }
}

}  // namespace

SolveResult multiple_source_max_preflow(const Instance& inst,
                                        const SolverConfig& config) {
  config.validate();
  inst.validate();

  SolveResult result;
  Workspace& ws = result.workspace;
  ws.emb = inst.embedding;
  ws.flow = FlowState(ws.emb, inst.sink);
  for (ArcId a = 0; a < inst.arc_count(); ++a) {
    if (!ws.emb.arc_alive(a)) continue;
    ws.flow.set_capacity(forward_dart(a), inst.cap_forward[a]);
    ws.flow.set_capacity(reverse_dart(a), inst.cap_reverse[a]);
  }
  for (NodeId v = 0; v < inst.node_count(); ++v)
    if (v != inst.sink) ws.flow.set_supply(v, inst.supplies[v]);

  auto engine = make_st_flow_engine(config.engine);

  if (ws.emb.node_count() > config.n0) {
    std::vector<ArcId> added = triangulate(ws.emb);
    for (ArcId a : added) ws.flow.on_arc_added(a, 0, 0);
    ws.emb.set_infinite_face_dart(ws.emb.first_dart(inst.sink));
  }

  GraphView entry = GraphView::full(ws.emb);
  Ctx ctx{ws, *engine, config};
  solve_call(ctx, entry, inst.sink,
             config.record_decomposition ? &result.record : nullptr);
  result.value = ws.flow.value();
  return result;
}

}  // namespace planarflow
