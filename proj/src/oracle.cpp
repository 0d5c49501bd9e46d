#include "planarflow/oracle.hpp"

#include <algorithm>
#include <queue>

namespace planarflow {

namespace {

struct EkGraph {
  struct Edge {
    int to;
    Cap cap;
  };
  std::vector<Edge> edges;  // mutual reverses at 2i / 2i+1
  std::vector<std::vector<int>> adj;

  explicit EkGraph(int n) : adj(n) {}

  void add(int u, int v, Cap cap_uv, Cap cap_vu) {
    adj[u].push_back(static_cast<int>(edges.size()));
    edges.push_back({v, cap_uv});
    adj[v].push_back(static_cast<int>(edges.size()));
    edges.push_back({u, cap_vu});
  }

  Cap max_flow(int s, int t) {
    Cap total = 0;
    std::vector<int> pred_edge(adj.size());
    while (true) {
      std::fill(pred_edge.begin(), pred_edge.end(), -1);
      pred_edge[s] = -2;
      std::queue<int> queue;
      queue.push(s);
      while (!queue.empty() && pred_edge[t] == -1) {
        int v = queue.front();
        queue.pop();
        for (int e : adj[v]) {
          if (edges[e].cap <= 0) continue;
          int w = edges[e].to;
          if (pred_edge[w] == -1) {
            pred_edge[w] = e;
            queue.push(w);
          }
        }
      }
      if (pred_edge[t] == -1) break;
      Cap bottleneck = kInf;
      for (int v = t; v != s;) {
        int e = pred_edge[v];
        bottleneck = std::min(bottleneck, edges[e].cap);
        v = edges[e ^ 1].to;
      }
      for (int v = t; v != s;) {
        int e = pred_edge[v];
        edges[e].cap -= bottleneck;
        edges[e ^ 1].cap += bottleneck;
        v = edges[e ^ 1].to;
      }
      total += bottleneck;
    }
    return total;
  }
};

}  // namespace

Cap oracle_max_flow_value(const Instance& inst) {
  NodeId n = inst.node_count();
  EkGraph g(n + 1);
  Cap cap_sum = 1;
  for (ArcId a = 0; a < inst.arc_count(); ++a) {
    if (!inst.embedding.arc_alive(a)) continue;
    const Arc& arc = inst.embedding.arc(a);
    g.add(arc.tail, arc.head, inst.cap_forward[a], inst.cap_reverse[a]);
    cap_sum += inst.cap_forward[a] + inst.cap_reverse[a];
  }
  // Any flow that can reach the sink is bounded by the total arc capacity,
  // so infinite supplies collapse to this finite bound.
  int super = n;
  for (NodeId v = 0; v < n; ++v) {
    if (v == inst.sink || inst.supplies[v] == 0) continue;
    Cap s = is_inf(inst.supplies[v]) ? cap_sum : inst.supplies[v];
    g.add(super, v, s, 0);
  }
  return g.max_flow(super, inst.sink);
}

}  // namespace planarflow
