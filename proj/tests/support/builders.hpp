#pragma once

#include <vector>

#include "planarflow/flow_state.hpp"
#include "planarflow/instance.hpp"
#include "planarflow/planar_graph.hpp"

namespace pftest {

using namespace planarflow;

// Arcs 0:(0,1) 1:(1,2) 2:(2,0).
inline Embedding triangle() {
  return Embedding::build(3, 3,
                          {{0, 5}, {2, 1}, {4, 3}});
}

inline Embedding single_arc() { return Embedding::build(2, 1, {{0}, {1}}); }

// Path 0-1-2, arcs 0:(0,1) 1:(1,2).
inline Embedding path2() { return Embedding::build(3, 2, {{0}, {1, 2}, {3}}); }

// 4-cycle, arcs 0:(0,1) 1:(1,2) 2:(2,3) 3:(3,0).
inline Embedding square() {
  return Embedding::build(4, 4, {{0, 7}, {2, 1}, {4, 3}, {6, 5}});
}

// Planar K4: outer triangle 0,1,2 with node 3 inside.
// Arcs 0:(0,1) 1:(1,2) 2:(2,0) 3:(3,0) 4:(3,1) 5:(3,2).
inline Embedding k4() {
  return Embedding::build(4, 6,
                          {{0, 5, 7}, {2, 1, 9}, {4, 3, 11}, {6, 10, 8}});
}

// Octahedron: poles 0 and 5, equator 1-2-3-4.
inline Embedding octahedron() {
  return Embedding::build(6, 12,
                          {{0, 2, 4, 6},
                           {1, 8, 16, 15},
                           {3, 10, 18, 9},
                           {5, 12, 20, 11},
                           {7, 14, 22, 13},
                           {17, 23, 21, 19}});
}

inline Instance make_instance(Embedding emb, std::vector<Cap> cap_fwd,
                              std::vector<Cap> cap_rev, std::vector<Cap> supplies,
                              NodeId sink) {
  Instance inst;
  inst.embedding = std::move(emb);
  inst.cap_forward = std::move(cap_fwd);
  inst.cap_reverse = std::move(cap_rev);
  inst.supplies = std::move(supplies);
  inst.sink = sink;
  inst.validate();
  return inst;
}

}  // namespace pftest
