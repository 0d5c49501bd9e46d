#pragma once

#include <span>
#include <string>
#include <vector>

#include "planarflow/flow_state.hpp"
#include "planarflow/instance.hpp"
#include "planarflow/separator.hpp"
#include "planarflow/st_maxflow.hpp"

namespace planarflow {

struct SolverConfig {
  /// Base-case size: views at most this large are absorbed directly via
  /// per-source limited pushes (the super-source reduction, one source at a
  /// time). Must be >= 4.
  int n0 = 64;
  double c_sep = 4.0;
  std::string engine = "dinic";
  bool record_decomposition = true;

  void validate() const;
};

/// Per-iteration history of the top-level decomposition, for the structural
/// assertions and diagnostics.
struct IterationRecord {
  std::vector<NodeId> separator;      // S_i boundary nodes
  size_t enclosed_count = 0;          // strictly enclosed by S_i
  std::vector<NodeId> h_nodes;        // H_i
  std::vector<ArcId> h_arcs;
  std::vector<NodeId> c_cycle;        // C_i, external face walk of H_i
  std::vector<int> b_cycles;          // ids processed in this iteration
  size_t g_size_after = 0;
  /// No admissible path to the B_i node set inside H_i, evaluated right
  /// after the while loop ends.
  bool lemma2_no_admissible = true;
};

struct DecompositionRecord {
  size_t entry_nodes = 0;
  std::vector<IterationRecord> iterations;
  std::vector<std::vector<NodeId>> cycle_nodes;  // per cycle id
  std::vector<int> processed_counts;             // per cycle id

  int max_processed_count() const;
  bool lemma2_all_ok() const;
  /// Every node of every C_i lies on some separator S_j.
  bool lemma8_holds() const;
};

struct SolveResult {
  Workspace workspace;
  DecompositionRecord record;
  Cap value = 0;
};

/// Recursive multiple-source single-sink maximum preflow. Returns the global
/// flow state (a maximum feasible preflow: no admissible paths to the sink
/// remain) together with the decomposition record of the top-level call.
SolveResult multiple_source_max_preflow(const Instance& inst,
                                        const SolverConfig& config = {});

struct AttachResult {
  NodeId sink = kNoNode;       // designated t', the smallest node id on C
  std::vector<ArcId> arcs;     // artificial absorption arcs
};

/// Designates the smallest node of the face cycle C as an artificial sink
/// and adds, for every other node of C, an artificial arc into t' embedded
/// inside the face (unbounded capacity toward t', zero back). Any node of C
/// can then absorb into t' with infinite residual, and removing the arcs can
/// only lower outflows, so the preflow stays feasible. `cycle_walk` must be
/// the boundary walk of a face of `h_view` (throws otherwise).
AttachResult attach_artificial_sink(Workspace& ws, const GraphView& h_view,
                                    const std::vector<DartId>& cycle_walk);

/// Removes the artificial arcs; the flow they carried is discarded, which
/// surfaces as excess on the nodes of C that fed them and leaves the state
/// a feasible preflow.
void detach_artificial_sink(Workspace& ws, const AttachResult& attached);

/// True iff no node outside `targets` with positive residual supply reaches
/// a target over darts of positive residual capacity. Computed by reverse
/// reachability from the targets.
bool certificate_no_admissible_path(const Embedding& emb, const FlowState& state,
                                    std::span<const NodeId> targets);
bool certificate_no_admissible_path(const Embedding& emb, const FlowState& state,
                                    std::span<const NodeId> targets,
                                    const GraphView& within);

}  // namespace planarflow
