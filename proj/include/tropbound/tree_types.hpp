#pragma once

// Combinatorial types of genus-zero plane tropical curves: trivalent trees
// on labeled legs, with bounded-edge directions forced by balancing, and
// an assignment of contracted point markings to edges.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "tropbound/numerical_data.hpp"

namespace tropbound {

struct Vec2 {
  std::int64_t x = 0;
  std::int64_t y = 0;

  Vec2 &operator+=(const Vec2 &o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  friend Vec2 operator+(Vec2 a, const Vec2 &b) { return a += b; }
  friend Vec2 operator-(const Vec2 &a) { return {-a.x, -a.y}; }
  bool is_zero() const noexcept { return x == 0 && y == 0; }
  bool operator==(const Vec2 &) const = default;
};

inline std::int64_t cross(const Vec2 &a, const Vec2 &b) {
  return a.x * b.y - a.y * b.x;
}

/// Lattice length: gcd of the coordinates.
std::int64_t weight(const Vec2 &v);

struct LegSpec {
  Vec2 direction;             // weighted, outward
  std::size_t source_marking; // row of the tangency matrix
};

/// One leg per tangent row of plane data. Requires k = 2 and exactly
/// (#legs - 1) free rows, which carry the point constraints.
std::vector<LegSpec> legs_from_numerical_data(const NumericalData &data);

/// Trivalent tree on m labeled legs. Nodes [0, m) are the leg ends (at
/// infinity), nodes [m, 2m-2) are vertices; node m is the root. Edges are
/// stored as (parent, child) oriented away from the root, so an edge is a
/// leg exactly when its child is below m.
struct TreeTopology {
  std::size_t num_legs = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::size_t num_nodes() const noexcept { return 2 * num_legs - 2; }
  bool is_leg(std::size_t e) const { return edges[e].second < num_legs; }
  std::size_t bounded_edges() const noexcept { return num_legs - 3; }
};

/// All (2m-5)!! topologies, in a fixed order.
std::vector<TreeTopology> enumerate_topologies(std::size_t num_legs);

/// Weighted parent->child direction of every edge, i.e. the sum of the leg
/// directions below the child. Empty when some bounded edge would have
/// direction zero.
std::optional<std::vector<Vec2>>
edge_directions(const TreeTopology &topology, const std::vector<LegSpec> &legs);

/// Product over trivalent vertices of |det| of two incident directions.
mpz_class vertex_multiplicity(const TreeTopology &topology,
                              const std::vector<Vec2> &directions);

struct TreeType {
  TreeTopology topology;
  std::vector<Vec2> directions;       // per edge, parent -> child
  std::vector<std::size_t> point_edge; // point j lies on edge point_edge[j]
};

/// Every topology with nonzero bounded directions, crossed with every
/// assignment of `num_points` labeled points to edges.
std::vector<TreeType> enumerate_tree_types(const std::vector<LegSpec> &legs,
                                           std::size_t num_points);

/// (2m-5)!! * (2m-3)^(m-1): the size of the unpruned type space.
mpz_class estimated_work(std::size_t num_legs);

} // namespace tropbound
