#pragma once

#include <string>
#include <vector>

#include "planarflow/flow_state.hpp"
#include "planarflow/instance.hpp"

namespace planarflow {

/// Line-oriented instance format:
///   pmf <V> <A>
///   n <id> <supply|inf|->      one per node; `-` marks the sink once
///   r <id> <darts in cyclic order>
///   a <id> <tail> <head> <cap_forward> <cap_reverse>
/// Lines starting with '#' and blank lines are ignored. Parse errors carry
/// the offending line number.
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);

Instance load_instance_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// Flow file: `v <value>` then one `f <arc id> <flow on forward dart>` line
/// per instance arc.
std::string serialize_flow(const Instance& inst, const FlowState& state);

struct FlowCheckResult {
  bool ok = false;
  std::string message;  // names the violated dart / node / value on failure
};

/// Validates a flow file against an instance: capacities on both darts,
/// supplies, conservation at non-sink nodes, and the declared value.
FlowCheckResult check_flow(const Instance& inst, const std::string& flow_text);

}  // namespace planarflow
