#include "planarflow/planar_graph.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

#include "planarflow/separator.hpp"

namespace planarflow {

namespace {

uint64_t pair_key(NodeId u, NodeId w) {
  if (u > w) std::swap(u, w);
  return (static_cast<uint64_t>(static_cast<uint32_t>(u)) << 32) |
         static_cast<uint32_t>(w);
}

}  // namespace

Embedding Embedding::build(NodeId node_count, ArcId arc_count,
                           const std::vector<std::vector<DartId>>& rotations) {
  if (node_count <= 0) throw EmbeddingError("embedding needs at least one node");
  if (static_cast<NodeId>(rotations.size()) != node_count)
    throw EmbeddingError("one rotation list per node required");

  Embedding emb;
  emb.node_count_ = node_count;
  emb.arcs_.assign(arc_count, Arc{});
  emb.first_dart_.assign(node_count, kNoDart);
  emb.rot_next_.assign(static_cast<size_t>(arc_count) * 2, kNoDart);
  emb.rot_prev_.assign(static_cast<size_t>(arc_count) * 2, kNoDart);
  emb.live_arcs_ = arc_count;

  std::vector<NodeId> owner(static_cast<size_t>(arc_count) * 2, kNoNode);
  for (NodeId v = 0; v < node_count; ++v) {
    for (DartId d : rotations[v]) {
      if (d < 0 || d >= arc_count * 2)
        throw EmbeddingError("rotation references dart " + std::to_string(d) +
                             " outside the arc range");
      if (owner[d] != kNoNode)
        throw EmbeddingError("dart " + std::to_string(d) +
                             " appears in more than one rotation");
      owner[d] = v;
    }
  }
  for (DartId d = 0; d < arc_count * 2; ++d)
    if (owner[d] == kNoNode)
      throw EmbeddingError("dart " + std::to_string(d) + " missing from rotations");

  std::unordered_set<uint64_t> seen_pairs;
  seen_pairs.reserve(arc_count * 2);
  for (ArcId a = 0; a < arc_count; ++a) {
    NodeId tail = owner[forward_dart(a)];
    NodeId head = owner[reverse_dart(a)];
    if (tail == head)
      throw EmbeddingError("arc " + std::to_string(a) + " is a self-loop");
    if (!seen_pairs.insert(pair_key(tail, head)).second)
      throw EmbeddingError("parallel arcs between nodes " + std::to_string(tail) +
                           " and " + std::to_string(head));
    emb.arcs_[a] = Arc{tail, head, true, false};
  }

  for (NodeId v = 0; v < node_count; ++v) {
    const auto& rot = rotations[v];
    if (rot.empty()) continue;
    emb.first_dart_[v] = rot.front();
    for (size_t i = 0; i < rot.size(); ++i) {
      DartId d = rot[i];
      DartId nxt = rot[(i + 1) % rot.size()];
      emb.rot_next_[d] = nxt;
      emb.rot_prev_[nxt] = d;
    }
  }

  emb.validate();
  return emb;
}

void Embedding::validate() const {
  // Connectivity over alive arcs.
  std::vector<char> seen(node_count_, 0);
  std::queue<NodeId> queue;
  queue.push(0);
  seen[0] = 1;
  NodeId reached = 1;
  while (!queue.empty()) {
    NodeId v = queue.front();
    queue.pop();
    for_darts_at(v, [&](DartId d) {
      NodeId w = dart_head(d);
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push(w);
      }
    });
  }
  if (reached != node_count_)
    throw EmbeddingError("graph is disconnected (" + std::to_string(reached) +
                         " of " + std::to_string(node_count_) + " nodes reachable)");

  // Euler check V - E + F = 2: rejects rotation systems of positive genus.
  FaceScan scan = scan_faces(*this);
  long euler = static_cast<long>(node_count_) - live_arcs_ +
               static_cast<long>(scan.face_count());
  if (euler != 2)
    throw EmbeddingError("rotation system is not a sphere embedding (V-E+F=" +
                         std::to_string(euler) + ")");
}

int Embedding::degree(NodeId v) const {
  int deg = 0;
  for_darts_at(v, [&](DartId) { ++deg; });
  return deg;
}

ArcId Embedding::find_arc_between(NodeId u, NodeId w) const {
  ArcId found = kNoArc;
  for_darts_at(u, [&](DartId d) {
    if (found == kNoArc && dart_head(d) == w) found = dart_arc(d);
  });
  return found;
}

void Embedding::link_dart_after(NodeId v, DartId d, DartId after) {
  if (first_dart_[v] == kNoDart) {
    first_dart_[v] = d;
    rot_next_[d] = d;
    rot_prev_[d] = d;
    return;
  }
  PF_CHECK(after != kNoDart && dart_tail(after) == v,
           "rotation anchor does not belong to the node");
  DartId nxt = rot_next_[after];
  rot_next_[after] = d;
  rot_prev_[d] = after;
  rot_next_[d] = nxt;
  rot_prev_[nxt] = d;
}

void Embedding::unlink_dart(NodeId v, DartId d) {
  if (rot_next_[d] == d) {
    first_dart_[v] = kNoDart;
  } else {
    rot_next_[rot_prev_[d]] = rot_next_[d];
    rot_prev_[rot_next_[d]] = rot_prev_[d];
    if (first_dart_[v] == d) first_dart_[v] = rot_next_[d];
  }
  rot_next_[d] = kNoDart;
  rot_prev_[d] = kNoDart;
}

ArcId Embedding::add_arc(NodeId tail, NodeId head, DartId after_at_tail,
                         DartId after_at_head, bool artificial) {
  PF_CHECK(tail != head, "self-loops are not representable");
  ArcId a;
  if (!free_arcs_.empty()) {
    a = free_arcs_.back();
    free_arcs_.pop_back();
  } else {
    a = arc_space();
    arcs_.emplace_back();
    rot_next_.insert(rot_next_.end(), 2, kNoDart);
    rot_prev_.insert(rot_prev_.end(), 2, kNoDart);
  }
  arcs_[a] = Arc{tail, head, true, artificial};
  ++live_arcs_;
  link_dart_after(tail, forward_dart(a), after_at_tail);
  link_dart_after(head, reverse_dart(a), after_at_head);
  return a;
}

void Embedding::remove_arc(ArcId a) {
  PF_CHECK(arc_alive(a), "removing a dead arc");
  unlink_dart(arcs_[a].tail, forward_dart(a));
  unlink_dart(arcs_[a].head, reverse_dart(a));
  arcs_[a].alive = false;
  --live_arcs_;
  free_arcs_.push_back(a);
}

FaceScan scan_faces(const Embedding& emb) {
  return scan_faces_if(emb, [](ArcId) { return true; });
}

std::vector<ArcId> triangulate(Embedding& emb) {
  if (emb.node_count() < 3)
    throw EmbeddingError("triangulation requires at least 3 nodes");

  std::unordered_set<uint64_t> pairs;
  for (ArcId a = 0; a < emb.arc_space(); ++a)
    if (emb.arc_alive(a)) pairs.insert(pair_key(emb.arc(a).tail, emb.arc(a).head));

  std::vector<ArcId> added;
  FaceScan scan = scan_faces(emb);
  for (const Face& face : scan.faces) {
    std::vector<DartId> walk = face.darts;
    size_t stuck_guard = 0;
    size_t i = 0;
    while (walk.size() > 3) {
      size_t j = (i + 1) % walk.size();
      NodeId u = emb.dart_tail(walk[i]);
      NodeId w = emb.dart_head(walk[j]);
      if (u != w && !pairs.count(pair_key(u, w))) {
        // Clip the ear (u, mid, w): chord u->w whose reverse dart closes the
        // triangle; the remaining walk keeps the forward dart.
        ArcId chord = emb.add_arc(u, w, emb.rot_prev(walk[i]), rev(walk[j]),
                                  /*artificial=*/true);
        pairs.insert(pair_key(u, w));
        added.push_back(chord);
        walk[i] = forward_dart(chord);
        walk.erase(walk.begin() + j);
        if (j < i) --i;  // erased before position i (wrapped ear)
        stuck_guard = 0;
      } else {
        i = j;
        if (++stuck_guard > walk.size())
          throw SolverError("triangulation made no progress on a face");
      }
      if (i >= walk.size()) i = 0;
    }
  }
  return added;
}

CycleSides classify_cycle_sides(const Embedding& emb,
                                const std::vector<NodeId>& cycle) {
  if (cycle.size() < 3)
    throw EmbeddingError("separator cycle must have at least 3 nodes");

  CycleSides out;
  out.node_side.assign(emb.node_count(), Side::kOutside);
  out.arc_side.assign(emb.arc_space(), Side::kOutside);

  std::vector<char> arc_on(emb.arc_space(), 0);
  for (size_t i = 0; i < cycle.size(); ++i) {
    NodeId u = cycle[i];
    NodeId w = cycle[(i + 1) % cycle.size()];
    ArcId a = emb.find_arc_between(u, w);
    if (a == kNoArc)
      throw EmbeddingError("separator is not a cycle: nodes " + std::to_string(u) +
                           " and " + std::to_string(w) + " are not adjacent");
    arc_on[a] = 1;
    out.cycle_arcs.push_back(a);
    out.node_side[u] = Side::kOn;
  }

  FaceScan scan = scan_faces(emb);
  PF_CHECK(emb.infinite_face_dart() != kNoDart, "infinite face is unset");
  int32_t inf_face = scan.face_of[emb.infinite_face_dart()];

  // Flood the face adjacency without crossing cycle arcs; reached faces are
  // outside the curve.
  std::vector<char> face_outside(scan.face_count(), 0);
  std::queue<int32_t> queue;
  queue.push(inf_face);
  face_outside[inf_face] = 1;
  while (!queue.empty()) {
    int32_t f = queue.front();
    queue.pop();
    for (DartId d : scan.faces[f].darts) {
      if (arc_on[dart_arc(d)]) continue;
      int32_t g = scan.face_of[rev(d)];
      if (!face_outside[g]) {
        face_outside[g] = 1;
        queue.push(g);
      }
    }
  }

  for (ArcId a = 0; a < emb.arc_space(); ++a) {
    if (!emb.arc_alive(a)) {
      out.arc_side[a] = Side::kOn;
      continue;
    }
    if (arc_on[a]) {
      out.arc_side[a] = Side::kOn;
      continue;
    }
    out.arc_side[a] = face_outside[scan.face_of[forward_dart(a)]] ? Side::kOutside
                                                                  : Side::kInside;
  }
  for (NodeId v = 0; v < emb.node_count(); ++v) {
    if (out.node_side[v] == Side::kOn) continue;
    DartId d = emb.first_dart(v);
    PF_CHECK(d != kNoDart, "isolated node during side classification");
    Side side = face_outside[scan.face_of[d]] ? Side::kOutside : Side::kInside;
    out.node_side[v] = side;
    if (side == Side::kInside)
      ++out.inside_nodes;
    else
      ++out.outside_nodes;
  }
  return out;
}

SubgraphResult enclosed_subgraph(const Embedding& emb, const Separator& sep,
                                 Side side) {
  PF_CHECK(side != Side::kOn, "side must be kInside or kOutside");
  CycleSides sides = classify_cycle_sides(emb, sep.boundary);

  SubgraphResult res;
  res.node_index.assign(emb.node_count(), kNoNode);
  for (NodeId v = 0; v < emb.node_count(); ++v) {
    if (sides.node_side[v] == Side::kOn || sides.node_side[v] == side) {
      res.node_index[v] = static_cast<NodeId>(res.node_map.size());
      res.node_map.push_back(v);
    }
  }
  std::vector<ArcId> arc_index(emb.arc_space(), kNoArc);
  for (ArcId a = 0; a < emb.arc_space(); ++a) {
    if (!emb.arc_alive(a)) continue;
    if (sides.arc_side[a] == Side::kOn || sides.arc_side[a] == side) {
      arc_index[a] = static_cast<ArcId>(res.arc_map.size());
      res.arc_map.push_back(a);
    }
  }

  std::vector<std::vector<DartId>> rotations(res.node_map.size());
  for (size_t i = 0; i < res.node_map.size(); ++i) {
    emb.for_darts_at(res.node_map[i], [&](DartId d) {
      ArcId sub = arc_index[dart_arc(d)];
      if (sub != kNoArc) rotations[i].push_back(sub * 2 + (d & 1));
    });
  }
  res.embedding = Embedding::build(static_cast<NodeId>(res.node_map.size()),
                                   static_cast<ArcId>(res.arc_map.size()),
                                   rotations);

  // External face of the extracted part: the sub-face seen from the cycle
  // dart whose original face lies on the discarded side.
  ArcId seam = sides.cycle_arcs.front();
  FaceScan orig = scan_faces(emb);
  std::vector<char> face_outside(orig.face_count(), 0);
  {
    // Recompute which original faces are outside (cheap second flood).
    std::vector<char> arc_on(emb.arc_space(), 0);
    for (ArcId a : sides.cycle_arcs) arc_on[a] = 1;
    std::queue<int32_t> queue;
    int32_t inf_face = orig.face_of[emb.infinite_face_dart()];
    queue.push(inf_face);
    face_outside[inf_face] = 1;
    while (!queue.empty()) {
      int32_t f = queue.front();
      queue.pop();
      for (DartId d : orig.faces[f].darts) {
        if (arc_on[dart_arc(d)]) continue;
        int32_t g = orig.face_of[rev(d)];
        if (!face_outside[g]) {
          face_outside[g] = 1;
          queue.push(g);
        }
      }
    }
  }
  if (side == Side::kInside) {
    // External face of the enclosed part: the sub-face seen from the cycle
    // dart whose original face lies outside the curve.
    DartId fwd = forward_dart(seam);
    DartId ext_dart = face_outside[orig.face_of[fwd]] ? fwd : rev(fwd);
    res.embedding.set_infinite_face_dart(arc_index[seam] * 2 + (ext_dart & 1));
  } else {
    // The original infinite face survives on the outside part.
    DartId d = emb.infinite_face_dart();
    ArcId sub = arc_index[dart_arc(d)];
    PF_CHECK(sub != kNoArc, "infinite face dart lost in outside subgraph");
    res.embedding.set_infinite_face_dart(sub * 2 + (d & 1));
  }
  return res;
}

}  // namespace planarflow
