#include "planarflow/generators.hpp"

#include <array>
#include <queue>

namespace planarflow {

using detail::rand01;
using detail::rand_range;

Cap ValueRule::sample(std::mt19937_64& rng) const {
  switch (kind) {
    case Kind::kConstant:
      return constant;
    case Kind::kUniform:
      return rand_range(rng, lo, hi);
    case Kind::kInfinite:
      return kInf;
  }
  return 0;
}

Instance gen_grid(int k, const ValueRule& cap_rule, const ValueRule& supply_rule,
                  uint64_t seed) {
  if (k < 2) throw Error("gen_grid requires k >= 2");
  std::mt19937_64 rng(seed);
  NodeId n = static_cast<NodeId>(k) * k;

  // Row-major arc ids: at each cell first the right arc, then the down arc.
  std::vector<ArcId> right(n, kNoArc), down(n, kNoArc);
  ArcId next_arc = 0;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      NodeId v = i * k + j;
      if (j + 1 < k) right[v] = next_arc++;
      if (i + 1 < k) down[v] = next_arc++;
    }

  std::vector<std::vector<DartId>> rotations(n);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      NodeId v = i * k + j;
      auto& rot = rotations[v];
      if (right[v] != kNoArc) rot.push_back(forward_dart(right[v]));          // E
      if (down[v] != kNoArc) rot.push_back(forward_dart(down[v]));            // S
      if (j > 0) rot.push_back(reverse_dart(right[v - 1]));                   // W
      if (i > 0) rot.push_back(reverse_dart(down[v - k]));                    // N
    }

  Instance inst;
  inst.embedding = Embedding::build(n, next_arc, rotations);
  inst.cap_forward.assign(next_arc, 0);
  inst.cap_reverse.assign(next_arc, 0);
  for (ArcId a = 0; a < next_arc; ++a) inst.cap_forward[a] = cap_rule.sample(rng);
  inst.sink = n - 1;
  inst.supplies.assign(n, 0);
  for (NodeId v = 0; v < n; ++v)
    if (v != inst.sink) inst.supplies[v] = supply_rule.sample(rng);
  inst.validate();
  return inst;
}

Instance gen_random_planar(NodeId n, uint64_t seed,
                           const RandomPlanarOptions& opts) {
  if (n < 4) throw Error("gen_random_planar requires n >= 4");
  std::mt19937_64 rng(seed);

  Embedding emb = Embedding::build(
      3, 3,
      {{forward_dart(0), reverse_dart(2)},
       {forward_dart(1), reverse_dart(0)},
       {forward_dart(2), reverse_dart(1)}});

  std::vector<std::array<DartId, 3>> tris;
  for (const Face& f : scan_faces(emb).faces)
    tris.push_back({f.darts[0], f.darts[1], f.darts[2]});

  while (emb.node_count() < n) {
    size_t pick = static_cast<size_t>(rng() % tris.size());
    auto [d1, d2, d3] = tris[pick];
    NodeId a = emb.dart_tail(d1);
    NodeId b = emb.dart_tail(d2);
    NodeId c = emb.dart_tail(d3);
    NodeId v = emb.add_node();
    ArcId va = emb.add_arc(v, a, kNoDart, rev(d3), false);
    ArcId vb = emb.add_arc(v, b, forward_dart(va), rev(d1), false);
    ArcId vc = emb.add_arc(v, c, forward_dart(va), rev(d2), false);
    tris[pick] = {d1, reverse_dart(vb), forward_dart(va)};
    tris.push_back({d2, reverse_dart(vc), forward_dart(vb)});
    tris.push_back({d3, reverse_dart(va), forward_dart(vc)});
  }

  // Thin out non-tree arcs; the BFS tree keeps the graph connected.
  std::vector<char> tree_arc(emb.arc_space(), 0);
  {
    std::vector<char> seen(n, 0);
    std::queue<NodeId> queue;
    queue.push(0);
    seen[0] = 1;
    while (!queue.empty()) {
      NodeId v = queue.front();
      queue.pop();
      emb.for_darts_at(v, [&](DartId d) {
        NodeId w = emb.dart_head(d);
        if (!seen[w]) {
          seen[w] = 1;
          tree_arc[dart_arc(d)] = 1;
          queue.push(w);
        }
      });
    }
  }
  for (ArcId a = 0; a < emb.arc_space(); ++a) {
    if (!emb.arc_alive(a) || tree_arc[a]) continue;
    if (rand01(rng) < opts.delete_fraction) emb.remove_arc(a);
  }

  // Compact arc ids.
  std::vector<ArcId> arc_index(emb.arc_space(), kNoArc);
  ArcId live = 0;
  for (ArcId a = 0; a < emb.arc_space(); ++a)
    if (emb.arc_alive(a)) arc_index[a] = live++;
  std::vector<std::vector<DartId>> rotations(n);
  for (NodeId v = 0; v < n; ++v)
    emb.for_darts_at(v, [&](DartId d) {
      rotations[v].push_back(arc_index[dart_arc(d)] * 2 + (d & 1));
    });

  Instance inst;
  inst.embedding = Embedding::build(n, live, rotations);
  inst.cap_forward.assign(live, 0);
  inst.cap_reverse.assign(live, 0);
  for (ArcId a = 0; a < live; ++a) {
    inst.cap_forward[a] = rand_range(rng, opts.cap_lo, opts.cap_hi);
    if (rand01(rng) < opts.two_sided_prob)
      inst.cap_reverse[a] = rand_range(rng, opts.cap_lo, opts.cap_hi);
  }
  inst.sink = static_cast<NodeId>(rng() % static_cast<uint64_t>(n));
  inst.supplies.assign(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    if (v == inst.sink) continue;
    inst.supplies[v] = rand01(rng) < opts.inf_supply_prob
                           ? kInf
                           : rand_range(rng, opts.supply_lo, opts.supply_hi);
  }
  inst.validate();
  return inst;
}

}  // namespace planarflow
