#pragma once

#include <vector>

#include "planarflow/flow_state.hpp"
#include "planarflow/st_maxflow.hpp"

namespace pftest {

using namespace planarflow;

/// Brute-force Ford-Fulkerson on a dense residual matrix; the independent
/// oracle for engine tests on small graphs.
struct DenseFlowNet {
  int n;
  std::vector<std::vector<Cap>> res;

  explicit DenseFlowNet(int n) : n(n), res(n, std::vector<Cap>(n, 0)) {}

  void add(int u, int v, Cap c) { res[u][v] += c; }

  Cap augment(int v, int t, Cap limit, std::vector<char>& seen) {
    if (v == t) return limit;
    seen[v] = 1;
    for (int w = 0; w < n; ++w) {
      if (seen[w] || res[v][w] <= 0) continue;
      Cap got = augment(w, t, std::min(limit, res[v][w]), seen);
      if (got > 0) {
        res[v][w] -= got;
        res[w][v] += got;
        return got;
      }
    }
    return 0;
  }

  Cap max_flow(int s, int t) {
    Cap total = 0;
    while (true) {
      std::vector<char> seen(n, 0);
      Cap got = augment(s, t, kInf / 2, seen);
      if (got == 0) break;
      total += got;
    }
    return total;
  }
};

/// Residual matrix of the current flow state over a view, with an
/// effectively-infinite finite stand-in for unbounded darts.
inline DenseFlowNet residual_net(const Embedding& emb, const FlowState& state,
                                 const GraphView& view, Cap big) {
  DenseFlowNet net(emb.node_count());
  for (ArcId a : view.arcs) {
    if (!emb.arc_alive(a)) continue;
    for (DartId d : {forward_dart(a), reverse_dart(a)}) {
      Cap r = state.residual(d);
      if (r > 0) net.add(emb.dart_tail(d), emb.dart_head(d),
                         is_inf(r) ? big : r);
    }
  }
  return net;
}

}  // namespace pftest
