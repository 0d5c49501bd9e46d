#include "planarflow/separator.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace planarflow {

namespace {

struct BfsTree {
  std::vector<NodeId> parent;
  std::vector<DartId> parent_dart;  // dart parent -> child
  std::vector<int32_t> depth;
  std::vector<NodeId> order;
};

BfsTree bfs_tree(const Embedding& emb, NodeId root) {
  BfsTree t;
  t.parent.assign(emb.node_count(), kNoNode);
  t.parent_dart.assign(emb.node_count(), kNoDart);
  t.depth.assign(emb.node_count(), -1);
  t.order.reserve(emb.node_count());
  std::queue<NodeId> queue;
  queue.push(root);
  t.depth[root] = 0;
  while (!queue.empty()) {
    NodeId v = queue.front();
    queue.pop();
    t.order.push_back(v);
    emb.for_darts_at(v, [&](DartId d) {
      NodeId w = emb.dart_head(d);
      if (t.depth[w] == -1) {
        t.depth[w] = t.depth[v] + 1;
        t.parent[w] = v;
        t.parent_dart[w] = d;
        queue.push(w);
      }
    });
  }
  return t;
}

NodeId farthest_node(const BfsTree& t) {
  NodeId best = 0;
  for (NodeId v = 0; v < static_cast<NodeId>(t.depth.size()); ++v)
    if (t.depth[v] > t.depth[best]) best = v;
  return best;
}

/// Middle node of a longest-ish shortest path (double sweep); a low BFS tree
/// keeps fundamental cycles short.
NodeId pick_center_root(const Embedding& emb) {
  BfsTree t0 = bfs_tree(emb, 0);
  NodeId u = farthest_node(t0);
  BfsTree t1 = bfs_tree(emb, u);
  NodeId w = farthest_node(t1);
  std::vector<NodeId> path;
  for (NodeId v = w; v != kNoNode; v = t1.parent[v]) path.push_back(v);
  return path[path.size() / 2];
}

struct Lca {
  std::vector<std::vector<NodeId>> up;
  const std::vector<int32_t>* depth;

  Lca(const BfsTree& tree, NodeId n) : depth(&tree.depth) {
    int logn = 1;
    while ((1 << logn) < n) ++logn;
    up.assign(logn + 1, std::vector<NodeId>(n));
    for (NodeId v = 0; v < n; ++v)
      up[0][v] = tree.parent[v] == kNoNode ? v : tree.parent[v];
    for (int k = 1; k <= logn; ++k)
      for (NodeId v = 0; v < n; ++v) up[k][v] = up[k - 1][up[k - 1][v]];
  }

  NodeId query(NodeId a, NodeId b) const {
    const auto& dep = *depth;
    if (dep[a] < dep[b]) std::swap(a, b);
    int32_t diff = dep[a] - dep[b];
    for (size_t k = 0; k < up.size(); ++k)
      if (diff & (1 << k)) a = up[k][a];
    if (a == b) return a;
    for (size_t k = up.size(); k-- > 0;)
      if (up[k][a] != up[k][b]) {
        a = up[k][a];
        b = up[k][b];
      }
    return up[0][a];
  }
};

struct DualTree {
  int32_t root = -1;
  std::vector<int32_t> parent;      // face -> face
  std::vector<ArcId> parent_arc;    // arc crossed toward the parent
  std::vector<int64_t> subtree_faces;
};

DualTree build_dual_tree(const Embedding& emb, const FaceScan& scan,
                         const std::vector<char>& is_tree_arc,
                         int32_t root_face) {
  DualTree dt;
  dt.root = root_face;
  size_t nf = scan.face_count();
  dt.parent.assign(nf, -1);
  dt.parent_arc.assign(nf, kNoArc);
  dt.subtree_faces.assign(nf, 1);
  std::vector<int32_t> order;
  order.reserve(nf);
  std::vector<char> seen(nf, 0);
  std::queue<int32_t> queue;
  queue.push(root_face);
  seen[root_face] = 1;
  while (!queue.empty()) {
    int32_t f = queue.front();
    queue.pop();
    order.push_back(f);
    for (DartId d : scan.faces[f].darts) {
      ArcId a = dart_arc(d);
      if (is_tree_arc[a]) continue;
      int32_t g = scan.face_of[rev(d)];
      if (!seen[g]) {
        seen[g] = 1;
        dt.parent[g] = f;
        dt.parent_arc[g] = a;
        queue.push(g);
      }
    }
  }
  PF_CHECK(order.size() == nf, "dual tree did not reach every face");
  for (size_t i = nf; i-- > 1;) {
    int32_t f = order[i];
    dt.subtree_faces[dt.parent[f]] += dt.subtree_faces[f];
  }
  return dt;
}

struct CandidateCycle {
  std::vector<NodeId> nodes;
  std::vector<ArcId> arcs;
};

CandidateCycle reconstruct_cycle(const Embedding& emb, const BfsTree& tree,
                                 ArcId a, NodeId lca) {
  CandidateCycle c;
  NodeId u = emb.arc(a).tail;
  NodeId w = emb.arc(a).head;
  for (NodeId v = u; v != lca; v = tree.parent[v]) {
    c.nodes.push_back(v);
    c.arcs.push_back(dart_arc(tree.parent_dart[v]));
  }
  c.nodes.push_back(lca);
  std::vector<NodeId> wside;
  std::vector<ArcId> wside_arcs;
  for (NodeId v = w; v != lca; v = tree.parent[v]) {
    wside.push_back(v);
    wside_arcs.push_back(dart_arc(tree.parent_dart[v]));
  }
  for (size_t i = wside.size(); i-- > 0;) {
    c.nodes.push_back(wside[i]);
    c.arcs.push_back(wside_arcs[i]);
  }
  c.arcs.push_back(a);  // closes w -> u
  return c;
}

/// Nodes strictly enclosed by the cycle: flood faces from the inside seed
/// without crossing cycle arcs.
std::vector<NodeId> flood_enclosed(const Embedding& emb, const FaceScan& scan,
                                   const CandidateCycle& cycle,
                                   int32_t seed_face) {
  std::vector<char> arc_on(emb.arc_space(), 0);
  for (ArcId a : cycle.arcs) arc_on[a] = 1;
  std::vector<char> node_on(emb.node_count(), 0);
  for (NodeId v : cycle.nodes) node_on[v] = 1;

  std::vector<char> face_in(scan.face_count(), 0);
  std::vector<char> node_in(emb.node_count(), 0);
  std::vector<NodeId> inside;
  std::queue<int32_t> queue;
  queue.push(seed_face);
  face_in[seed_face] = 1;
  while (!queue.empty()) {
    int32_t f = queue.front();
    queue.pop();
    for (DartId d : scan.faces[f].darts) {
      NodeId v = emb.dart_tail(d);
      if (!node_on[v] && !node_in[v]) {
        node_in[v] = 1;
        inside.push_back(v);
      }
      if (arc_on[dart_arc(d)]) continue;
      int32_t g = scan.face_of[rev(d)];
      if (!face_in[g]) {
        face_in[g] = 1;
        queue.push(g);
      }
    }
  }
  std::sort(inside.begin(), inside.end());
  return inside;
}

}  // namespace

Separator find_cycle_separator(const Embedding& emb,
                               const SeparatorConfig& config) {
  NodeId n = emb.node_count();
  if (n < 4) throw EmbeddingError("cycle separator requires at least 4 nodes");

  FaceScan scan = scan_faces(emb);
  for (const Face& f : scan.faces)
    if (f.darts.size() != 3)
      throw EmbeddingError("cycle separator requires a triangulated graph");

  const bool weighted = !config.node_weights.empty();
  if (weighted &&
      static_cast<NodeId>(config.node_weights.size()) != n)
    throw Error("node_weights must cover every node");
  Cap total_weight = 0;
  if (weighted)
    for (Cap w : config.node_weights) {
      if (w < 0) throw Error("node weights must be nonnegative");
      total_weight += w;
    }

  NodeId root = pick_center_root(emb);
  BfsTree tree = bfs_tree(emb, root);
  PF_CHECK(static_cast<NodeId>(tree.order.size()) == n,
           "separator input must be connected");

  std::vector<char> is_tree_arc(emb.arc_space(), 0);
  for (NodeId v = 0; v < n; ++v)
    if (tree.parent_dart[v] != kNoDart) is_tree_arc[dart_arc(tree.parent_dart[v])] = 1;

  DartId inf_dart = emb.infinite_face_dart();
  if (inf_dart == kNoDart) inf_dart = scan.faces[0].darts[0];
  int32_t inf_face = scan.face_of[inf_dart];
  DualTree dual = build_dual_tree(emb, scan, is_tree_arc, inf_face);
  Lca lca(tree, n);

  const double max_len = config.c_sep * std::sqrt(static_cast<double>(n));
  const double balance_cap =
      weighted ? 2.0 * static_cast<double>(total_weight) / 3.0
               : 2.0 * static_cast<double>(n) / 3.0;

  struct Pick {
    ArcId arc = kNoArc;
    NodeId lca = kNoNode;
    int64_t len = 0;
    int64_t in_count = 0;   // uniform: node count, weighted: weight
    int64_t out_count = 0;
    int tier = 99;  // lower is better
  } best;

  for (ArcId a = 0; a < emb.arc_space(); ++a) {
    if (!emb.arc_alive(a) || is_tree_arc[a]) continue;
    NodeId u = emb.arc(a).tail;
    NodeId w = emb.arc(a).head;
    NodeId l = lca.query(u, w);
    int64_t len = tree.depth[u] + tree.depth[w] - 2 * tree.depth[l] + 1;

    // Faces strictly enclosed: dual subtree hanging below this arc.
    int32_t f1 = scan.face_of[forward_dart(a)];
    int32_t f2 = scan.face_of[reverse_dart(a)];
    int32_t child;
    if (dual.parent_arc[f1] == a)
      child = f1;
    else {
      PF_CHECK(dual.parent_arc[f2] == a, "non-tree arc missing from dual tree");
      child = f2;
    }
    int64_t faces_in = dual.subtree_faces[child];
    PF_CHECK((faces_in - len) % 2 == 0, "face/cycle parity violated");
    // In a triangulation, interior nodes follow from interior faces and the
    // cycle length (Euler on the closed disk).
    int64_t nodes_in = (faces_in - len) / 2 + 1;
    int64_t nodes_out = n - nodes_in - len;

    int64_t in_count = nodes_in;
    int64_t out_count = nodes_out;
    if (weighted) {
      CandidateCycle cyc = reconstruct_cycle(emb, tree, a, l);
      std::vector<NodeId> inside = flood_enclosed(emb, scan, cyc, child);
      in_count = 0;
      for (NodeId v : inside) in_count += config.node_weights[v];
      Cap on_count = 0;
      for (NodeId v : cyc.nodes) on_count += config.node_weights[v];
      out_count = total_weight - in_count - on_count;
    }

    bool balanced = in_count <= balance_cap && out_count <= balance_cap;
    bool short_enough = static_cast<double>(len) <= max_len;
    bool two_sided = nodes_in >= 1 && nodes_out >= 1;

    int tier;
    if (balanced && short_enough && two_sided)
      tier = 0;
    else if (balanced && short_enough)
      tier = 1;
    else if (balanced)
      tier = 2;
    else
      tier = 3;

    bool better;
    if (tier != best.tier)
      better = tier < best.tier;
    else if (tier == 2)
      better = len < best.len;  // balanced but long: minimize length
    else if (tier == 3)
      better = std::max(in_count, out_count) <
               std::max(best.in_count, best.out_count);
    else
      better = false;  // first hit wins within tiers 0 and 1
    if (better) best = Pick{a, l, len, in_count, out_count, tier};
    if (best.tier == 0) break;
  }

  PF_CHECK(best.arc != kNoArc, "no separator candidate found");
  CandidateCycle cyc = reconstruct_cycle(emb, tree, best.arc, best.lca);

  int32_t f1 = scan.face_of[forward_dart(best.arc)];
  int32_t child = dual.parent_arc[f1] == best.arc
                      ? f1
                      : scan.face_of[reverse_dart(best.arc)];
  Separator sep;
  sep.boundary = cyc.nodes;
  sep.enclosed = flood_enclosed(emb, scan, cyc, child);
  sep.balance = static_cast<double>(sep.enclosed.size()) / static_cast<double>(n);
  if (!weighted)
    PF_CHECK(static_cast<int64_t>(sep.enclosed.size()) == best.in_count,
             "dual-tree interior count disagrees with the face flood");
  return sep;
}

}  // namespace planarflow
