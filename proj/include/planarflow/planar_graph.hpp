#pragma once

#include <cstdint>
#include <vector>

#include "planarflow/common.hpp"

namespace planarflow {

struct Arc {
  NodeId tail = kNoNode;
  NodeId head = kNoNode;
  bool alive = false;
  bool artificial = false;  // triangulation chord or solver-added sink arc
};

/// Combinatorial sphere embedding over darts. Each node owns a cyclic
/// rotation (doubly linked list of outgoing darts); faces are the orbits of
/// d -> rot_next(rev(d)). Construction validates Euler's formula, so only
/// genus-zero rotation systems are accepted.
///
/// Mutation is limited to arc insertion at explicit rotation positions and
/// arc removal; both keep the structure a valid embedding of the surface.
class Embedding {
 public:
  Embedding() = default;

  /// Builds and validates an embedding from per-node rotation lists.
  /// `rotations[v]` lists the darts leaving v in cyclic order; dart ids
  /// encode arcs as 2a / 2a+1. Rejects self-loops, parallel arcs (including
  /// anti-parallel pairs: a directed pair shares one arc via its two darts),
  /// disconnected inputs, and non-spherical rotation systems.
  static Embedding build(NodeId node_count, ArcId arc_count,
                         const std::vector<std::vector<DartId>>& rotations);

  NodeId node_count() const { return node_count_; }
  /// Arc id space size, including dead slots.
  ArcId arc_space() const { return static_cast<ArcId>(arcs_.size()); }
  ArcId live_arc_count() const { return live_arcs_; }
  DartId dart_space() const { return static_cast<DartId>(arcs_.size()) * 2; }

  const Arc& arc(ArcId a) const { return arcs_[a]; }
  bool arc_alive(ArcId a) const { return a >= 0 && a < arc_space() && arcs_[a].alive; }
  NodeId dart_tail(DartId d) const {
    const Arc& a = arcs_[dart_arc(d)];
    return dart_is_forward(d) ? a.tail : a.head;
  }
  NodeId dart_head(DartId d) const { return dart_tail(rev(d)); }

  DartId first_dart(NodeId v) const { return first_dart_[v]; }
  DartId rot_next(DartId d) const { return rot_next_[d]; }
  DartId rot_prev(DartId d) const { return rot_prev_[d]; }
  int degree(NodeId v) const;

  /// Next dart along the face walk containing d.
  DartId face_next(DartId d) const { return rot_next_[rev(d)]; }

  /// Any dart on the face designated infinite, or kNoDart if unset.
  DartId infinite_face_dart() const { return infinite_face_dart_; }
  void set_infinite_face_dart(DartId d) { infinite_face_dart_ = d; }

  /// Appends an isolated node (connect it before validating).
  NodeId add_node() {
    first_dart_.push_back(kNoDart);
    return node_count_++;
  }

  /// Inserts an arc tail->head. The forward dart enters tail's rotation
  /// immediately after `after_at_tail`, the reverse dart enters head's
  /// rotation immediately after `after_at_head` (kNoDart only for a node
  /// with empty rotation). Reuses dead arc slots. Returns the arc id.
  ArcId add_arc(NodeId tail, NodeId head, DartId after_at_tail,
                DartId after_at_head, bool artificial);

  /// Unlinks both darts and marks the slot dead; the id may be reused.
  void remove_arc(ArcId a);

  /// Calls fn(dart) for every dart leaving v.
  template <class Fn>
  void for_darts_at(NodeId v, Fn&& fn) const {
    DartId d0 = first_dart_[v];
    if (d0 == kNoDart) return;
    DartId d = d0;
    do {
      fn(d);
      d = rot_next_[d];
    } while (d != d0);
  }

  /// Some alive arc between u and w, or kNoArc.
  ArcId find_arc_between(NodeId u, NodeId w) const;

  /// Re-runs the construction checks on the current state.
  void validate() const;

 private:
  NodeId node_count_ = 0;
  ArcId live_arcs_ = 0;
  std::vector<Arc> arcs_;
  std::vector<DartId> first_dart_;
  std::vector<DartId> rot_next_;
  std::vector<DartId> rot_prev_;
  std::vector<ArcId> free_arcs_;
  DartId infinite_face_dart_ = kNoDart;

  void link_dart_after(NodeId v, DartId d, DartId after);
  void unlink_dart(NodeId v, DartId d);
};

/// One face of the embedding: its boundary walk in face-permutation order.
struct Face {
  std::vector<DartId> darts;
};

struct FaceScan {
  std::vector<Face> faces;
  std::vector<int32_t> face_of;  // dart id -> face index, -1 for dead darts

  size_t face_count() const { return faces.size(); }
};

/// Enumerates the orbits of the face permutation restricted to darts whose
/// arc satisfies `keep_arc`. The restriction must be arc-closed (both darts
/// of an arc in or out together).
template <class ArcPred>
FaceScan scan_faces_if(const Embedding& emb, ArcPred keep_arc) {
  FaceScan scan;
  scan.face_of.assign(emb.dart_space(), -1);
  for (DartId d0 = 0; d0 < emb.dart_space(); ++d0) {
    if (!emb.arc_alive(dart_arc(d0)) || !keep_arc(dart_arc(d0))) continue;
    if (scan.face_of[d0] != -1) continue;
    Face face;
    DartId d = d0;
    do {
      scan.face_of[d] = static_cast<int32_t>(scan.faces.size());
      face.darts.push_back(d);
      // Face permutation with skipping: advance from rev(d) in the rotation
      // at head(d) until a kept dart shows up. rev(d) itself is kept, so the
      // walk always terminates.
      DartId e = emb.rot_next(rev(d));
      while (!keep_arc(dart_arc(e))) e = emb.rot_next(e);
      d = e;
    } while (d != d0);
    scan.faces.push_back(std::move(face));
  }
  return scan;
}

FaceScan scan_faces(const Embedding& emb);

/// Fan/ear triangulation: adds artificial chords until every face has
/// boundary length 3, keeping the graph simple. The result of fully
/// triangulating a connected simple graph is two-connected. Requires at
/// least 3 nodes. Returns the added arc ids.
std::vector<ArcId> triangulate(Embedding& emb);

enum class Side : uint8_t { kOn = 0, kInside = 1, kOutside = 2 };

/// Placement of every node and arc relative to a simple cycle, computed by
/// flooding faces from the infinite face. Arcs and nodes of the cycle are
/// kOn; everything whose region is separated from the infinite face is
/// kInside.
struct CycleSides {
  std::vector<Side> node_side;
  std::vector<Side> arc_side;   // indexed by arc id; dead arcs keep kOn
  std::vector<ArcId> cycle_arcs;
  size_t inside_nodes = 0;
  size_t outside_nodes = 0;
};

/// `cycle` lists boundary nodes in order; consecutive nodes (cyclically)
/// must be joined by an alive arc. Throws EmbeddingError otherwise.
CycleSides classify_cycle_sides(const Embedding& emb,
                                const std::vector<NodeId>& cycle);

struct Separator;  // separator.hpp

struct SubgraphResult {
  Embedding embedding;
  std::vector<NodeId> node_map;  // sub node -> original node
  std::vector<ArcId> arc_map;    // sub arc -> original arc
  std::vector<NodeId> node_index;  // original node -> sub node or kNoNode
};

/// Restriction of the embedding to one side of a separator plus its
/// boundary, with induced rotations. The infinite-face dart of the result
/// marks the external face of the extracted side.
SubgraphResult enclosed_subgraph(const Embedding& emb, const Separator& sep,
                                 Side side);

}  // namespace planarflow
