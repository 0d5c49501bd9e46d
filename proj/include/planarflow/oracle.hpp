#pragma once

#include "planarflow/instance.hpp"

namespace planarflow {

/// Verification oracle: builds the (non-planar) super-source graph — an
/// artificial source wired to every supplied node with supply-valued
/// capacity — and returns its max st-flow value by Edmonds-Karp. Kept
/// deliberately independent of the solver's engine so the two implementations
/// cross-check each other.
Cap oracle_max_flow_value(const Instance& inst);

}  // namespace planarflow
