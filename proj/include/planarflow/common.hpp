#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace planarflow {

using NodeId = int32_t;
using ArcId = int32_t;
using DartId = int32_t;
using Cap = int64_t;

inline constexpr NodeId kNoNode = -1;
inline constexpr ArcId kNoArc = -1;
inline constexpr DartId kNoDart = -1;

/// Sentinel for unbounded capacities and supplies. Finite quantities in any
/// valid state stay far below it, so `inf - finite == inf` is safe to model
/// by saturating comparisons instead of actual arithmetic.
inline constexpr Cap kInf = std::numeric_limits<Cap>::max() / 4;

inline bool is_inf(Cap x) { return x >= kInf; }

/// inf-aware subtraction: inf - finite = inf.
inline Cap cap_sub(Cap a, Cap b) { return is_inf(a) ? kInf : a - b; }

/// inf-aware addition of a finite delta.
inline Cap cap_add(Cap a, Cap b) { return (is_inf(a) || is_inf(b)) ? kInf : a + b; }

inline Cap cap_min(Cap a, Cap b) { return a < b ? a : b; }

// Each arc owns two darts: dart 2a runs tail->head, dart 2a+1 runs head->tail.
inline DartId forward_dart(ArcId a) { return a * 2; }
inline DartId reverse_dart(ArcId a) { return a * 2 + 1; }
inline DartId rev(DartId d) { return d ^ 1; }
inline ArcId dart_arc(DartId d) { return d >> 1; }
inline bool dart_is_forward(DartId d) { return (d & 1) == 0; }

/// Base for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid rotation system, Euler check failure, disconnected input, ...
struct EmbeddingError : Error {
  using Error::Error;
};

/// Malformed instance or flow file.
struct ParseError : Error {
  using Error::Error;
};

/// An internal invariant of the solver failed; indicates a bug, not bad input.
struct SolverError : Error {
  using Error::Error;
};

#define PF_CHECK(cond, msg)                                            \
  do {                                                                 \
    if (!(cond)) throw ::planarflow::SolverError(std::string("internal check failed: ") + (msg)); \
  } while (0)

}  // namespace planarflow
