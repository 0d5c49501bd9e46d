#pragma once

#include <vector>

#include "planarflow/common.hpp"
#include "planarflow/planar_graph.hpp"

namespace planarflow {

/// A balanced simple-cycle (Jordan) separator. `boundary` is a simple cycle
/// of the graph it was computed on; `enclosed` are the nodes strictly inside
/// the cycle relative to the infinite face.
struct Separator {
  std::vector<NodeId> boundary;
  std::vector<NodeId> enclosed;
  double balance = 0.0;  // |enclosed| / n
};

struct SeparatorConfig {
  /// Boundary size target: |boundary| <= c_sep * sqrt(n).
  double c_sep = 4.0;
  /// Optional nonnegative node weights for the balance criterion. Empty
  /// means uniform. Only the uniform case is exercised by the test corpus.
  std::vector<Cap> node_weights;
};

/// Fundamental-cycle separator of a triangulated two-connected embedded
/// planar graph: builds a low BFS tree from a center-ish root, roots the
/// dual tree of non-tree arcs at the infinite face, and scans non-tree arcs
/// for the first fundamental cycle with both sides at most 2n/3 and length
/// within the configured bound. Interior node counts per candidate come
/// from dual subtree sizes, constant time each.
///
/// Requires n >= 4 and every face of length 3 (throws EmbeddingError
/// otherwise). The enclosed side is the one not containing the face marked
/// infinite.
Separator find_cycle_separator(const Embedding& emb,
                               const SeparatorConfig& config = {});

}  // namespace planarflow
