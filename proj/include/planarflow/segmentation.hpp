#pragma once

#include <vector>

#include "planarflow/instance.hpp"

namespace planarflow {

/// Rectangular pixel grid with per-pixel weights and per-adjacency costs.
/// h_cost[r][c] prices the edge between (r,c) and (r,c+1); v_cost[r][c]
/// prices (r,c)-(r+1,c).
struct PixelGrid {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<Cap>> weights;  // rows x cols
  std::vector<std::vector<Cap>> h_cost;   // rows x (cols-1)
  std::vector<std::vector<Cap>> v_cost;   // (rows-1) x cols
};

/// Foreground/background segmentation as multiple-source max flow: every
/// pixel v gets a private source v' (infinite supply) with arc v'->v of
/// capacity weight(v); pixel adjacencies carry the cost on both darts; the
/// sink sits in the outer face, wired from every boundary pixel with
/// effectively unbounded (finite) capacity. The result stays planar.
Instance segmentation_reduce(const PixelGrid& grid);

/// Text form: `<rows> <cols>`, then the weight matrix, then the horizontal
/// cost matrix (rows x cols-1), then the vertical one (rows-1 x cols).
PixelGrid parse_pixel_grid(const std::string& text);

}  // namespace planarflow
