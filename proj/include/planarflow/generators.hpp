#pragma once

#include <cstdint>
#include <random>

#include "planarflow/instance.hpp"

namespace planarflow {

/// Rule for drawing capacities or supplies in the generators.
struct ValueRule {
  enum class Kind { kConstant, kUniform, kInfinite };
  Kind kind = Kind::kConstant;
  Cap constant = 1;
  Cap lo = 0;
  Cap hi = 1;

  static ValueRule constant_of(Cap c) { return {Kind::kConstant, c, 0, 0}; }
  static ValueRule uniform(Cap lo, Cap hi) { return {Kind::kUniform, 0, lo, hi}; }
  static ValueRule infinite() { return {Kind::kInfinite, 0, 0, 0}; }

  Cap sample(std::mt19937_64& rng) const;
};

/// k x k grid with the natural planar rotation, directed right/down arcs
/// (reverse capacities zero), sink at the bottom-right corner.
Instance gen_grid(int k, const ValueRule& cap_rule, const ValueRule& supply_rule,
                  uint64_t seed);

struct RandomPlanarOptions {
  /// Fraction of non-tree arcs deleted after the random triangulation is
  /// grown; 0 keeps the graph maximal planar.
  double delete_fraction = 0.35;
  Cap cap_lo = 0;
  Cap cap_hi = 50;
  /// Probability that an arc also gets a random reverse capacity.
  double two_sided_prob = 0.5;
  double inf_supply_prob = 0.25;
  Cap supply_lo = 0;
  Cap supply_hi = 50;
};

/// Connected simple embedded planar graph on n >= 4 nodes: grows a random
/// triangulation by repeated in-face node insertion, then deletes a random
/// subset of non-tree arcs (connectivity preserved). Random capacities,
/// mixed finite/infinite supplies, random sink. Deterministic in the seed.
Instance gen_random_planar(NodeId n, uint64_t seed,
                           const RandomPlanarOptions& opts = {});

namespace detail {
/// Uniform integer in [lo, hi], stable across platforms.
inline Cap rand_range(std::mt19937_64& rng, Cap lo, Cap hi) {
  return lo + static_cast<Cap>(rng() % static_cast<uint64_t>(hi - lo + 1));
}
inline double rand01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}
}  // namespace detail

}  // namespace planarflow
