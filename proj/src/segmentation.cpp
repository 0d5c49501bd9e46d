#include "planarflow/segmentation.hpp"

#include <algorithm>
#include <sstream>

namespace planarflow {

namespace {

void check_matrix(const std::vector<std::vector<Cap>>& m, int rows, int cols,
                  const char* what) {
  if (static_cast<int>(m.size()) != rows)
    throw Error(std::string(what) + ": expected " + std::to_string(rows) + " rows");
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != cols)
      throw Error(std::string(what) + ": ragged row");
    for (Cap x : row)
      if (x < 0 || is_inf(x))
        throw Error(std::string(what) + ": entries must be finite and nonnegative");
  }
}

}  // namespace

Instance segmentation_reduce(const PixelGrid& grid) {
  int rows = grid.rows, cols = grid.cols;
  if (rows < 1 || cols < 1) throw Error("segmentation grid must be non-empty");
  check_matrix(grid.weights, rows, cols, "weights");
  if (cols > 1) check_matrix(grid.h_cost, rows, cols - 1, "h_cost");
  if (rows > 1) check_matrix(grid.v_cost, rows - 1, cols, "v_cost");

  NodeId pixels = rows * cols;
  NodeId source_of = pixels;        // v' of pixel i is pixels + i
  NodeId t = pixels * 2;
  Cap weight_sum = 1;
  for (const auto& row : grid.weights)
    for (Cap w : row) weight_sum += w;

  // Grid arcs in row-major E-then-S order.
  std::vector<ArcId> east(pixels, kNoArc), south(pixels, kNoArc);
  ArcId next_arc = 0;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      NodeId v = r * cols + c;
      if (c + 1 < cols) east[v] = next_arc++;
      if (r + 1 < rows) south[v] = next_arc++;
    }
  ArcId grid_arcs = next_arc;

  std::vector<std::vector<DartId>> compass(pixels);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      NodeId v = r * cols + c;
      auto& rot = compass[v];
      if (east[v] != kNoArc) rot.push_back(forward_dart(east[v]));
      if (south[v] != kNoArc) rot.push_back(forward_dart(south[v]));
      if (c > 0) rot.push_back(reverse_dart(east[v - 1]));
      if (r > 0) rot.push_back(reverse_dart(south[v - cols]));
    }

  // Outer face walk of the bare grid, anchor for the sink spokes.
  std::vector<NodeId> walk_nodes;       // first-occurrence order
  std::vector<DartId> spoke_anchor(pixels, kNoDart);  // insert spoke before this
  if (pixels > 1) {
    Embedding bare = Embedding::build(pixels, grid_arcs, compass);
    FaceScan scan = scan_faces(bare);
    size_t outer = 0;
    for (size_t f = 1; f < scan.face_count(); ++f)
      if (scan.faces[f].darts.size() > scan.faces[outer].darts.size()) outer = f;
    for (DartId d : scan.faces[outer].darts) {
      NodeId v = bare.dart_tail(d);
      if (spoke_anchor[v] == kNoDart) {
        spoke_anchor[v] = d;
        walk_nodes.push_back(v);
      }
    }
  } else {
    walk_nodes.push_back(0);
  }

  ArcId source_arc0 = grid_arcs;                       // arc (v'_i, i) = grid_arcs + i
  ArcId spoke_arc0 = grid_arcs + pixels;               // walk order
  ArcId total_arcs = spoke_arc0 + static_cast<ArcId>(walk_nodes.size());

  std::vector<ArcId> spoke_of(pixels, kNoArc);
  for (size_t j = 0; j < walk_nodes.size(); ++j)
    spoke_of[walk_nodes[j]] = spoke_arc0 + static_cast<ArcId>(j);

  std::vector<std::vector<DartId>> rotations(pixels * 2 + 1);
  for (NodeId v = 0; v < pixels; ++v) {
    DartId own_source = reverse_dart(source_arc0 + v);  // pixel-side dart to v'
    auto& rot = rotations[v];
    if (spoke_of[v] == kNoArc || pixels == 1) {
      rot = compass[v];
      rot.push_back(own_source);
      if (spoke_of[v] != kNoArc) rot.push_back(forward_dart(spoke_of[v]));
      continue;
    }
    for (DartId d : compass[v]) {
      if (d == spoke_anchor[v]) {
        rot.push_back(own_source);
        rot.push_back(forward_dart(spoke_of[v]));
      }
      rot.push_back(d);
    }
  }
  for (NodeId v = 0; v < pixels; ++v)
    rotations[source_of + v] = {forward_dart(source_arc0 + v)};
  for (size_t j = walk_nodes.size(); j-- > 0;)
    rotations[t].push_back(reverse_dart(spoke_arc0 + static_cast<ArcId>(j)));

  Instance inst;
  inst.embedding = Embedding::build(pixels * 2 + 1, total_arcs, rotations);
  inst.cap_forward.assign(total_arcs, 0);
  inst.cap_reverse.assign(total_arcs, 0);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      NodeId v = r * cols + c;
      if (east[v] != kNoArc) {
        inst.cap_forward[east[v]] = grid.h_cost[r][c];
        inst.cap_reverse[east[v]] = grid.h_cost[r][c];
      }
      if (south[v] != kNoArc) {
        inst.cap_forward[south[v]] = grid.v_cost[r][c];
        inst.cap_reverse[south[v]] = grid.v_cost[r][c];
      }
      inst.cap_forward[source_arc0 + v] = grid.weights[r][c];
    }
  for (size_t j = 0; j < walk_nodes.size(); ++j)
    inst.cap_forward[spoke_arc0 + static_cast<ArcId>(j)] = weight_sum;

  inst.sink = t;
  inst.supplies.assign(pixels * 2 + 1, 0);
  for (NodeId v = 0; v < pixels; ++v) inst.supplies[source_of + v] = kInf;
  inst.validate();
  return inst;
}

PixelGrid parse_pixel_grid(const std::string& text) {
  std::istringstream raw(text);
  std::string line, cleaned;
  while (std::getline(raw, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    cleaned += line + '\n';
  }
  std::istringstream in(cleaned);
  PixelGrid grid;
  if (!(in >> grid.rows >> grid.cols) || grid.rows < 1 || grid.cols < 1)
    throw ParseError("pixel grid: expected '<rows> <cols>' header");
  auto read_matrix = [&](int r, int c, const char* what) {
    std::vector<std::vector<Cap>> m(r, std::vector<Cap>(c));
    for (auto& row : m)
      for (Cap& x : row)
        if (!(in >> x) || x < 0)
          throw ParseError(std::string("pixel grid: bad ") + what + " entry");
    return m;
  };
  grid.weights = read_matrix(grid.rows, grid.cols, "weight");
  if (grid.cols > 1) grid.h_cost = read_matrix(grid.rows, grid.cols - 1, "h_cost");
  if (grid.rows > 1) grid.v_cost = read_matrix(grid.rows - 1, grid.cols, "v_cost");
  return grid;
}

}  // namespace planarflow
