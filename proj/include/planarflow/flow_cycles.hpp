#pragma once

#include <span>
#include <vector>

#include "planarflow/common.hpp"
#include "planarflow/planar_graph.hpp"

namespace planarflow::detail {

/// Cancels every directed cycle of the graph formed by darts with positive
/// weight. DFS from the given roots; each back edge closes a cycle that is
/// reduced by its bottleneck via subtract(dart, amount), which must be
/// reflected by later weight(dart) calls. Weights only decrease, so at least
/// one dart hits zero per cancellation and the procedure terminates after at
/// most |positive darts| cancellations (worst case O(n*m) work).
template <class WeightFn, class SubtractFn>
void cancel_positive_cycles(const Embedding& emb, std::span<const NodeId> roots,
                            WeightFn weight, SubtractFn subtract) {
  struct Frame {
    NodeId v;
    DartId cur;      // next dart to examine
    int remaining;   // darts left to examine at v
    DartId chosen;   // dart to the next frame, kNoDart at the top
  };

  std::vector<char> color(emb.node_count(), 0);  // 0 new, 1 on stack, 2 done
  std::vector<int32_t> stack_pos(emb.node_count(), -1);
  std::vector<Frame> stack;

  auto push_frame = [&](NodeId v) {
    color[v] = 1;
    stack_pos[v] = static_cast<int32_t>(stack.size());
    stack.push_back(Frame{v, emb.first_dart(v), emb.degree(v), kNoDart});
  };

  for (NodeId root : roots) {
    if (color[root] != 0) continue;
    push_frame(root);
    while (!stack.empty()) {
      Frame& f = stack.back();
      DartId d = kNoDart;
      while (f.remaining > 0) {
        DartId cand = f.cur;
        f.cur = emb.rot_next(f.cur);
        --f.remaining;
        if (!emb.arc_alive(dart_arc(cand))) continue;
        if (weight(cand) <= 0) continue;
        if (color[emb.dart_head(cand)] == 2) continue;
        d = cand;
        break;
      }
      if (d == kNoDart) {
        color[f.v] = 2;
        stack_pos[f.v] = -1;
        stack.pop_back();
        continue;
      }
      NodeId w = emb.dart_head(d);
      if (color[w] == 0) {
        f.chosen = d;
        push_frame(w);
        continue;
      }
      // Back edge: cancel the cycle stack[pos(w)..top] + d.
      int32_t base = stack_pos[w];
      Cap bottleneck = weight(d);
      for (size_t i = base; i + 1 < stack.size(); ++i)
        bottleneck = std::min(bottleneck, weight(stack[i].chosen));
      for (size_t i = base; i + 1 < stack.size(); ++i)
        subtract(stack[i].chosen, bottleneck);
      subtract(d, bottleneck);
      // Resume at the lowest frame whose outgoing path dart was zeroed;
      // everything above it hangs on a broken path.
      size_t break_at = stack.size() - 1;
      for (size_t i = base; i + 1 < stack.size(); ++i)
        if (weight(stack[i].chosen) <= 0) {
          break_at = i;
          break;
        }
      while (stack.size() > break_at + 1) {
        color[stack.back().v] = 0;
        stack_pos[stack.back().v] = -1;
        stack.pop_back();
      }
      stack.back().chosen = kNoDart;
    }
  }
}

}  // namespace planarflow::detail
