#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxdatum/action.hpp"

namespace coxdatum {

/// root = word . (simple root `simple`).
struct Witness {
  GroupWord word;
  std::size_t simple = 0;

  friend bool operator==(const Witness&, const Witness&) = default;
  friend auto operator<=>(const Witness&, const Witness&) = default;
};

struct Root {
  Side side = Side::One;
  Vec coeffs;
  long depth = 1;
  /// BFS level: length of the shortest witness word plus one.
  long level = 1;
  Witness witness;
  /// Other shortest witnesses met during enumeration (a few at most).
  std::vector<Witness> alternates;
  RayId ray;
  VectorSign sign = VectorSign::Positive;
  /// Float mode only: some pairing sign on the way here sat inside the epsilon band.
  bool ambiguous = false;
};

struct RootTable {
  Side side = Side::One;
  long max_depth = 0;
  std::vector<Root> roots;
  std::map<std::string, std::size_t> by_key;
  std::map<std::string, std::vector<std::size_t>> by_ray;

  const Root* find(const Vec& coeffs, const Field& field) const;
};

struct EnumerateOptions {
  bool parallel = false;
  unsigned threads = 0;  // 0 picks hardware concurrency
  std::size_t max_alternates = 3;
};

/// Breadth-first enumeration of the positive roots reachable by words of
/// length < max_depth. Depths follow the +1 / 0 / -1 pairing-sign rule.
RootTable enumerate_roots(const CoxeterDatum& d, Side side, long max_depth, const EnumerateOptions& opts = {});

struct DepthResult {
  long depth = 0;
  GroupWord descent;  // letters applied in order, first letter first
};

/// Greedy descent to a multiple of a simple root. depth_hint sizes the step
/// cap (4 * hint + 16).
DepthResult depth(const CoxeterDatum& d, const Vec& v, Side side, long depth_hint = 16);

/// The side-swapping equivariant bijection: w alpha_s <-> w beta_s. A root
/// with negative coefficients maps to the negative of its witness image.
Root phi(const CoxeterDatum& d, const Root& root);
Root phi_inverse(const CoxeterDatum& d, const Root& root);

/// Push a free coefficient vector into the concrete realization.
Vec realize(const CoxeterDatum& d, const Vec& coeffs, Side side);

struct ChainMember {
  std::size_t root_index = 0;
  Scalar scale;  // member = scale * base
  Witness witness;
  /// A word u with u . base = member, when one was found and checked.
  std::optional<GroupWord> self_map;
};

struct ScalarChain {
  RayId ray;
  std::size_t base_index = 0;
  std::vector<ChainMember> members;  // sorted by increasing scale
};

/// Rays holding two or more roots of the table.
std::vector<ScalarChain> scalar_chains(const CoxeterDatum& d, const RootTable& table);

struct FinitenessResult {
  bool finite = false;
  std::size_t ray_count = 0;
  long budget = 0;
  /// Cumulative ray count after each level.
  std::vector<std::size_t> frontier;
};

FinitenessResult is_finite_group(const CoxeterDatum& d, long budget_depth);

}  // namespace coxdatum
