#pragma once

// Genus-zero log invariants of (P^2, boundary) with point constraints at
// the free markings, counted as tropical curves through generic points
// with Mikhalkin multiplicities.
//
// Two counting kernels share the same solve semantics:
//   - count_reference: serial, walks every type from enumerate_tree_types
//     and solves each square system from scratch;
//   - count_parallel: OpenMP over topologies, keeps only point placements
//     that leave exactly one leg end in every component of the cut tree
//     (the others are singular) and reuses one inverse per placement
//     across all orderings of the labeled points.

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "tropbound/numerical_data.hpp"
#include "tropbound/tree_types.hpp"

namespace tropbound {

struct Point2 {
  mpq_class x;
  mpq_class y;
  bool operator==(const Point2 &) const = default;
};

struct PointConfig {
  std::vector<Point2> points;
  std::uint64_t seed = 0;
};

/// `count` points with coordinates p/q, |p| <= 10^9 and q a prime above
/// 10^4 shared by the configuration. Deterministic in `seed`.
PointConfig sample_points(std::size_t count, std::uint64_t seed);

struct TropicalSolution {
  TreeType type;
  std::vector<Point2> vertices;        // index = node - num_legs
  std::vector<mpq_class> edge_length;  // per edge; 0 for legs
  std::vector<mpq_class> point_offset; // per point, from the parent end
  std::vector<Point2> points;
  mpz_class multiplicity;
};

enum class SolveStatus { realized, not_realized, degenerate };

struct SolveResult {
  SolveStatus status = SolveStatus::not_realized;
  std::optional<TropicalSolution> solution;
  // Unique solution of the square system when it exists, realizable or
  // not: root x, root y, bounded lengths in edge order, point offsets.
  std::vector<mpq_class> raw;
};

/// Solves the type through the points, distinguishing configurations that
/// sit on a wall (zero length, point at a vertex, consistent singular
/// system) from plain non-realizability.
SolveResult solve_positions_checked(const TreeType &type,
                                    const PointConfig &points);

/// The unique realization with positive lengths and interior points, if any.
std::optional<TropicalSolution> solve_positions(const TreeType &type,
                                                const PointConfig &points);

struct CountResult {
  mpz_class total = 0;
  std::vector<TropicalSolution> solutions; // filled when collecting
  bool degenerate = false;
  std::size_t systems_solved = 0;
};

CountResult count_reference(const std::vector<LegSpec> &legs,
                            const PointConfig &points,
                            bool collect_solutions = false);

CountResult count_parallel(const std::vector<LegSpec> &legs,
                           const PointConfig &points,
                           bool collect_solutions = false);

struct CountOptions {
  std::size_t max_legs = 7;
  bool recheck = true;           // repeat with an independent configuration
  bool collect_solutions = false;
  std::size_t max_resamples = 16;
};

struct InvariantResult {
  mpz_class total;
  std::vector<TropicalSolution> solutions;
  PointConfig points;      // the configuration the total was read from
  std::size_t resamples = 0;
  std::optional<std::uint64_t> recheck_seed;
};

/// Throws CapExceeded before enumerating when #legs > max_legs, and
/// GenericityFailure when resampling is exhausted or the recheck disagrees.
InvariantResult solve_invariant(const NumericalData &data, std::uint64_t seed,
                                const CountOptions &options = {});

mpz_class count_invariant(const NumericalData &data, std::uint64_t seed,
                          const CountOptions &options = {});

/// The three determinant forms for exactly three tangent rows
/// (a, b, c): det(a', b'), det(b', c'), det(c', a') with
/// x' = (x_1 - x_3, x_2 - x_3), their mean, and (a_max+b_max+c_max)^2.
struct ThreeLegDeterminants {
  mpz_class det_ab;
  mpz_class det_bc;
  mpz_class det_ca;
  mpq_class mean;     // (det_ab + det_bc + det_ca) / 3
  mpz_class max_sum;  // a_max + b_max + c_max
  mpz_class bound;    // max_sum^2
  mpq_class weak_bound; // (4/3)(a_max b_max + b_max c_max + c_max a_max)
};

ThreeLegDeterminants three_leg_determinants(const NumericalData &data);

/// |det| of two leg directions; throws std::logic_error if the three
/// determinant forms disagree.
mpz_class three_leg_invariant(const NumericalData &data);

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

} // namespace tropbound
