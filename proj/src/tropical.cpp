#include "tropbound/tropical.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tropbound/errors.hpp"
#include "tropbound/rational_matrix.hpp"

namespace tropbound {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finaliser
  std::uint64_t z = seed + (stream + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

PointConfig sample_points(std::size_t count, std::uint64_t seed) {
  static constexpr std::array<long, 16> primes{
      10007, 10009, 10037, 10039, 10061, 10067, 10069, 10079,
      10091, 10093, 10099, 10103, 10111, 10133, 10139, 10141};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
  std::uniform_int_distribution<long> numer(-1000000000L, 1000000000L);
  const long q = primes[pick(rng)];

  PointConfig config;
  config.seed = seed;
  while (config.points.size() < count) {
    Point2 p{mpq_class(numer(rng), q), mpq_class(numer(rng), q)};
    p.x.canonicalize();
    p.y.canonicalize();
    if (std::find(config.points.begin(), config.points.end(), p) ==
        config.points.end())
      config.points.push_back(std::move(p));
  }
  return config;
}

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

// Column bookkeeping for the square system of one topology: unknowns are
// the root position, one length per bounded edge, and one offset per slot.
struct Layout {
  std::size_t m = 0;
  std::vector<std::size_t> length_col;            // per edge, npos for legs
  std::vector<std::vector<std::size_t>> path;     // per node, bounded edges from root
  std::size_t offset_base = 0;
  std::size_t unknowns = 0;

  explicit Layout(const TreeTopology &t) : m(t.num_legs) {
    length_col.assign(t.edges.size(), npos);
    path.assign(t.num_nodes(), {});
    std::size_t col = 2;
    for (std::size_t e = 0; e < t.edges.size(); ++e) {
      const auto [parent, child] = t.edges[e];
      if (!t.is_leg(e)) {
        length_col[e] = col++;
        path[child] = path[parent];
        path[child].push_back(e);
      }
    }
    offset_base = col;
    unknowns = col + (m - 1);
  }
};

RationalMatrix build_matrix(const TreeTopology &t, const std::vector<Vec2> &dirs,
                            const Layout &layout,
                            const std::vector<std::size_t> &slot_edges) {
  const std::size_t rows = 2 * slot_edges.size();
  RationalMatrix a(rows, layout.unknowns);
  for (std::size_t s = 0; s < slot_edges.size(); ++s) {
    const std::size_t e = slot_edges[s];
    const std::size_t parent = t.edges[e].first;
    a(2 * s, 0) = 1;
    a(2 * s + 1, 1) = 1;
    for (std::size_t f : layout.path[parent]) {
      a(2 * s, layout.length_col[f]) = dirs[f].x;
      a(2 * s + 1, layout.length_col[f]) = dirs[f].y;
    }
    a(2 * s, layout.offset_base + s) = dirs[e].x;
    a(2 * s + 1, layout.offset_base + s) = dirs[e].y;
  }
  return a;
}

// Sign pattern of a candidate solution: lengths positive, offsets positive,
// and offsets on bounded edges short of the far endpoint. `sign_of(i)` and
// `sign_of_difference(i, j)` give sgn(x_i) and sgn(x_i - x_j).
template <class SignOf, class SignDiff>
SolveStatus classify(const TreeTopology &t, const Layout &layout,
                     const std::vector<std::size_t> &slot_edges,
                     SignOf &&sign_of, SignDiff &&sign_of_difference) {
  bool ok = true;
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    if (layout.length_col[e] == npos)
      continue;
    const int s = sign_of(layout.length_col[e]);
    if (s == 0)
      return SolveStatus::degenerate;
    ok = ok && s > 0;
  }
  for (std::size_t s = 0; s < slot_edges.size(); ++s) {
    const std::size_t col = layout.offset_base + s;
    const int lo = sign_of(col);
    if (lo == 0)
      return SolveStatus::degenerate;
    ok = ok && lo > 0;
    const std::size_t e = slot_edges[s];
    if (layout.length_col[e] != npos) {
      const int hi = sign_of_difference(layout.length_col[e], col);
      if (hi == 0)
        return SolveStatus::degenerate;
      ok = ok && hi > 0;
    }
  }
  return ok ? SolveStatus::realized : SolveStatus::not_realized;
}

TropicalSolution make_solution(const TreeTopology &t,
                               const std::vector<Vec2> &dirs,
                               const Layout &layout,
                               const std::vector<std::size_t> &slot_edges,
                               const std::vector<std::size_t> &slot_point,
                               const std::vector<mpq_class> &x,
                               const PointConfig &points,
                               const mpz_class &multiplicity) {
  TropicalSolution sol;
  const std::size_t p = slot_edges.size();
  sol.type.topology = t;
  sol.type.directions = dirs;
  sol.type.point_edge.assign(p, 0);
  sol.point_offset.assign(p, 0);
  for (std::size_t s = 0; s < p; ++s) {
    sol.type.point_edge[slot_point[s]] = slot_edges[s];
    sol.point_offset[slot_point[s]] = x[layout.offset_base + s];
  }
  sol.edge_length.assign(t.edges.size(), 0);
  std::vector<Point2> pos(t.num_nodes());
  pos[t.num_legs] = {x[0], x[1]};
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    if (t.is_leg(e))
      continue;
    const auto [parent, child] = t.edges[e];
    const mpq_class &len = x[layout.length_col[e]];
    sol.edge_length[e] = len;
    pos[child] = {pos[parent].x + len * dirs[e].x,
                  pos[parent].y + len * dirs[e].y};
  }
  sol.vertices.assign(pos.begin() + t.num_legs, pos.end());
  sol.points = points.points;
  sol.multiplicity = multiplicity;
  return sol;
}

std::vector<mpq_class> rhs(const PointConfig &points,
                           const std::vector<std::size_t> &slot_point) {
  std::vector<mpq_class> b(2 * slot_point.size());
  for (std::size_t s = 0; s < slot_point.size(); ++s) {
    b[2 * s] = points.points[slot_point[s]].x;
    b[2 * s + 1] = points.points[slot_point[s]].y;
  }
  return b;
}

void check_points(const std::vector<LegSpec> &legs, const PointConfig &points) {
  if (legs.size() < 3)
    throw InvalidInput("legs", "at least 3 legs are required");
  if (points.points.size() + 1 != legs.size())
    throw InvalidInput("points", "expected #legs - 1 points");
}

} // namespace

SolveResult solve_positions_checked(const TreeType &type,
                                    const PointConfig &points) {
  const TreeTopology &t = type.topology;
  if (type.point_edge.size() != points.points.size() ||
      points.points.size() + 1 != t.num_legs)
    throw InvalidInput("points", "point count does not match the tree type");
  const Layout layout(t);
  const auto a = build_matrix(t, type.directions, layout, type.point_edge);
  std::vector<std::size_t> identity(points.points.size());
  std::iota(identity.begin(), identity.end(), 0);
  const auto solved = solve(a, rhs(points, identity));

  SolveResult out;
  if (solved.kind == SolveKind::inconsistent)
    return out;
  if (solved.kind == SolveKind::underdetermined) {
    out.status = SolveStatus::degenerate;
    return out;
  }
  const auto &x = solved.x;
  out.raw = x;
  out.status = classify(
      t, layout, type.point_edge, [&](std::size_t i) { return sgn(x[i]); },
      [&](std::size_t i, std::size_t j) { return sgn(mpq_class(x[i] - x[j])); });
  if (out.status == SolveStatus::realized)
    out.solution =
        make_solution(t, type.directions, layout, type.point_edge, identity, x,
                      points, vertex_multiplicity(t, type.directions));
  return out;
}

std::optional<TropicalSolution> solve_positions(const TreeType &type,
                                                const PointConfig &points) {
  auto r = solve_positions_checked(type, points);
  if (r.status != SolveStatus::realized)
    return std::nullopt;
  return std::move(r.solution);
}

CountResult count_reference(const std::vector<LegSpec> &legs,
                            const PointConfig &points, bool collect_solutions) {
  check_points(legs, points);
  CountResult out;
  for (const auto &type : enumerate_tree_types(legs, points.points.size())) {
    auto r = solve_positions_checked(type, points);
    ++out.systems_solved;
    if (r.status == SolveStatus::degenerate) {
      out.degenerate = true;
    } else if (r.status == SolveStatus::realized) {
      out.total += r.solution->multiplicity;
      if (collect_solutions)
        out.solutions.push_back(std::move(*r.solution));
    }
  }
  return out;
}

namespace {

// Point placements (one point per edge) whose cut leaves exactly one leg
// end in every component. Any other placement has a component that can
// slide, so its system is singular.
std::vector<std::vector<std::size_t>> rigid_placements(const TreeTopology &t) {
  const std::size_t p = t.num_legs - 1;
  const std::size_t edges = t.edges.size();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> chosen;
  std::vector<std::size_t> parent(t.num_nodes());

  auto find = [&](std::size_t v) {
    while (parent[v] != v)
      v = parent[v] = parent[parent[v]];
    return v;
  };
  auto accept = [&]() {
    std::iota(parent.begin(), parent.end(), 0);
    std::size_t next = 0;
    for (std::size_t e = 0; e < edges; ++e) {
      if (next < chosen.size() && chosen[next] == e) {
        ++next;
        continue;
      }
      parent[find(t.edges[e].first)] = find(t.edges[e].second);
    }
    std::vector<int> ends(t.num_nodes(), 0);
    for (std::size_t leaf = 0; leaf < t.num_legs; ++leaf)
      if (++ends[find(leaf)] > 1)
        return false;
    return true; // m components, m leaves, none shared
  };
  auto rec = [&](auto &&self, std::size_t start) -> void {
    if (chosen.size() == p) {
      if (accept())
        out.push_back(chosen);
      return;
    }
    for (std::size_t e = start; e + (p - chosen.size()) <= edges; ++e) {
      chosen.push_back(e);
      self(self, e + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

struct ScaledPoints {
  bool fits = false;
  std::vector<std::int64_t> coords; // x0, y0, x1, y1, ... times `scale`
  mpz_class scale = 1;
  std::int64_t max_abs = 0;
};

ScaledPoints scale_points(const PointConfig &points) {
  ScaledPoints out;
  for (const auto &p : points.points) {
    mpz_lcm(out.scale.get_mpz_t(), out.scale.get_mpz_t(),
            p.x.get_den_mpz_t());
    mpz_lcm(out.scale.get_mpz_t(), out.scale.get_mpz_t(),
            p.y.get_den_mpz_t());
  }
  out.fits = true;
  for (const auto &p : points.points)
    for (const mpq_class *c : {&p.x, &p.y}) {
      mpz_class v = c->get_num() * (out.scale / c->get_den());
      if (!mpz_fits_slong_p(v.get_mpz_t())) {
        out.fits = false;
        return out;
      }
      const std::int64_t iv = v.get_si();
      out.coords.push_back(iv);
      out.max_abs = std::max(out.max_abs, iv < 0 ? -iv : iv);
    }
  return out;
}

struct TopologyTally {
  mpz_class total = 0;
  std::vector<TropicalSolution> solutions;
  bool degenerate = false;
  std::size_t systems = 0;
};

int sign128(__int128 v) { return (v > 0) - (v < 0); }

void tally_topology(const TreeTopology &t, const std::vector<LegSpec> &legs,
                    const PointConfig &points, const ScaledPoints &scaled,
                    bool collect, TopologyTally &tally) {
  const auto dirs = edge_directions(t, legs);
  if (!dirs)
    return;
  const mpz_class mult = vertex_multiplicity(t, *dirs);
  const Layout layout(t);
  const std::size_t p = points.points.size();
  const std::size_t n = layout.unknowns;

  for (const auto &slots : rigid_placements(t)) {
    const auto a = build_matrix(t, *dirs, layout, slots);
    const auto inv = invert(a);
    std::vector<std::size_t> perm(p);
    std::iota(perm.begin(), perm.end(), 0);

    if (!inv) {
      // Singular: only a consistent right-hand side is a problem.
      const auto null = left_null_space(a);
      do {
        ++tally.systems;
        const auto b = rhs(points, perm);
        bool consistent = true;
        for (const auto &y : null) {
          mpq_class dot = 0;
          for (std::size_t i = 0; i < b.size(); ++i)
            if (sgn(y[i]) != 0)
              dot += y[i] * b[i];
          if (sgn(dot) != 0) {
            consistent = false;
            break;
          }
        }
        if (consistent)
          tally.degenerate = true;
      } while (std::next_permutation(perm.begin(), perm.end()));
      continue;
    }

    // x = adj(A) b / (det A * scale) with integer adj(A) and b.
    const mpz_class det = inv->determinant.get_num();
    const int det_sign = sgn(det);
    std::vector<std::int64_t> adj(n * n);
    bool fast = scaled.fits && inv->determinant.get_den() == 1;
    mpz_class adj_max = 0;
    for (std::size_t r = 0; fast && r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        mpq_class v = inv->inverse(r, c) * inv->determinant;
        if (v.get_den() != 1 || !mpz_fits_slong_p(v.get_num_mpz_t())) {
          fast = false;
          break;
        }
        adj[r * n + c] = v.get_num().get_si();
        mpz_class mag = abs(v.get_num());
        if (mag > adj_max)
          adj_max = mag;
      }
    if (fast) {
      mpz_class worst = adj_max * scaled.max_abs * static_cast<long>(2 * n);
      fast = mpz_sizeinbase(worst.get_mpz_t(), 2) < 120;
    }

    std::vector<__int128> num(n);
    do {
      ++tally.systems;
      SolveStatus status;
      std::vector<mpq_class> x;
      if (fast) {
        for (std::size_t r = 0; r < n; ++r) {
          __int128 acc = 0;
          for (std::size_t s = 0; s < p; ++s) {
            const std::size_t pt = perm[s];
            acc += static_cast<__int128>(adj[r * n + 2 * s]) *
                       scaled.coords[2 * pt] +
                   static_cast<__int128>(adj[r * n + 2 * s + 1]) *
                       scaled.coords[2 * pt + 1];
          }
          num[r] = acc;
        }
        status = classify(
            t, layout, slots,
            [&](std::size_t i) { return sign128(num[i]) * det_sign; },
            [&](std::size_t i, std::size_t j) {
              return sign128(num[i] - num[j]) * det_sign;
            });
        if (status == SolveStatus::realized) {
          const mpz_class denom = det * scaled.scale;
          x.resize(n);
          for (std::size_t i = 0; i < n; ++i) {
            // |num| < 2^120: split into two 64-bit halves.
            const bool neg = num[i] < 0;
            unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(num[i])
                                        : static_cast<unsigned __int128>(num[i]);
            mpz_class hi(static_cast<unsigned long>(mag >> 64));
            mpz_class lo(static_cast<unsigned long>(mag));
            mpz_class z = (hi << 64) + lo;
            if (neg)
              z = -z;
            x[i] = mpq_class(z, denom);
            x[i].canonicalize();
          }
        }
      } else {
        x = inv->inverse.apply(rhs(points, perm));
        status = classify(
            t, layout, slots, [&](std::size_t i) { return sgn(x[i]); },
            [&](std::size_t i, std::size_t j) {
              return sgn(mpq_class(x[i] - x[j]));
            });
      }

      if (status == SolveStatus::degenerate) {
        tally.degenerate = true;
      } else if (status == SolveStatus::realized) {
        if (sgn(mult) == 0)
          throw std::logic_error("realized tropical curve with multiplicity 0");
        tally.total += mult;
        if (collect)
          tally.solutions.push_back(
              make_solution(t, *dirs, layout, slots, perm, x, points, mult));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

} // namespace

CountResult count_parallel(const std::vector<LegSpec> &legs,
                           const PointConfig &points, bool collect_solutions) {
  check_points(legs, points);
  const auto topologies = enumerate_topologies(legs.size());
  const ScaledPoints scaled = scale_points(points);
  std::vector<TopologyTally> tallies(topologies.size());
  const long count = static_cast<long>(topologies.size());

  // Tallies are merged in topology order below, so the result does not
  // depend on scheduling.
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i)
    tally_topology(topologies[i], legs, points, scaled, collect_solutions,
                   tallies[i]);

  CountResult out;
  for (auto &tally : tallies) {
    out.total += tally.total;
    out.degenerate = out.degenerate || tally.degenerate;
    out.systems_solved += tally.systems;
    for (auto &s : tally.solutions)
      out.solutions.push_back(std::move(s));
  }
  return out;
}

namespace {

struct Attempt {
  CountResult result;
  PointConfig points;
  std::size_t resamples = 0;
};

Attempt count_generic(const std::vector<LegSpec> &legs, std::uint64_t seed,
                      std::uint64_t stream_base, const CountOptions &options,
                      bool collect) {
  for (std::size_t attempt = 0; attempt <= options.max_resamples; ++attempt) {
    const std::uint64_t s =
        attempt == 0 && stream_base == 0 ? seed
                                         : derive_seed(seed, stream_base + attempt);
    auto points = sample_points(legs.size() - 1, s);
    auto result = count_parallel(legs, points, collect);
    if (!result.degenerate)
      return {std::move(result), std::move(points), attempt};
  }
  throw GenericityFailure("no generic point configuration found after " +
                          std::to_string(options.max_resamples + 1) +
                          " attempts");
}

} // namespace

InvariantResult solve_invariant(const NumericalData &data, std::uint64_t seed,
                                const CountOptions &options) {
  const auto legs = legs_from_numerical_data(data);
  if (legs.size() < 3)
    throw InvalidInput("alpha", "at least 3 tangent markings are required");
  if (legs.size() > options.max_legs)
    throw CapExceeded(legs.size(), options.max_legs,
                      estimated_work(legs.size()).get_str());

  auto first = count_generic(legs, seed, 0, options, options.collect_solutions);
  InvariantResult out;
  out.total = first.result.total;
  out.solutions = std::move(first.result.solutions);
  out.points = std::move(first.points);
  out.resamples = first.resamples;

  if (options.recheck) {
    auto second = count_generic(legs, seed, 1000, options, false);
    out.recheck_seed = second.points.seed;
    if (second.result.total != out.total)
      throw GenericityFailure("tropical count depends on the point "
                              "configuration: " +
                              out.total.get_str() + " vs " +
                              second.result.total.get_str());
  }
  return out;
}

mpz_class count_invariant(const NumericalData &data, std::uint64_t seed,
                          const CountOptions &options) {
  CountOptions opts = options;
  opts.collect_solutions = false;
  return solve_invariant(data, seed, opts).total;
}

ThreeLegDeterminants three_leg_determinants(const NumericalData &data) {
  if (data.k != 2)
    throw InvalidInput("k", "three-leg determinants need k = 2");
  const auto tangent = data.tangent_markings();
  if (tangent.size() != 3)
    throw InvalidInput("alpha", "expected exactly 3 tangent markings, found " +
                                    std::to_string(tangent.size()));
  for (std::size_t i : tangent)
    if (data.alpha[i].size() != 3)
      throw InvalidInput("alpha", "row length differs from k+1");

  auto shifted = [&](std::size_t i) {
    const auto &r = data.alpha[i];
    return std::array<mpz_class, 2>{mpz_class(static_cast<long>(r[0] - r[2])),
                                    mpz_class(static_cast<long>(r[1] - r[2]))};
  };
  const auto a = shifted(tangent[0]);
  const auto b = shifted(tangent[1]);
  const auto c = shifted(tangent[2]);
  auto det = [](const std::array<mpz_class, 2> &u,
                const std::array<mpz_class, 2> &v) -> mpz_class {
    return u[0] * v[1] - u[1] * v[0];
  };

  ThreeLegDeterminants out;
  out.det_ab = det(a, b);
  out.det_bc = det(b, c);
  out.det_ca = det(c, a);
  out.mean = mpq_class(out.det_ab + out.det_bc + out.det_ca, 3);
  out.mean.canonicalize();
  const mpz_class am = static_cast<long>(alpha_max(data, tangent[0]));
  const mpz_class bm = static_cast<long>(alpha_max(data, tangent[1]));
  const mpz_class cm = static_cast<long>(alpha_max(data, tangent[2]));
  out.max_sum = am + bm + cm;
  out.bound = out.max_sum * out.max_sum;
  out.weak_bound = mpq_class(4 * (am * bm + bm * cm + cm * am), 3);
  out.weak_bound.canonicalize();
  return out;
}

mpz_class three_leg_invariant(const NumericalData &data) {
  const auto report = validate(data);
  if (report.has(violation::unbalanced) || report.has(violation::ragged_row) ||
      report.has(violation::negative_entry))
    throw InvalidInput("alpha", "three-leg data must be balanced and "
                                "nonnegative");
  const auto dets = three_leg_determinants(data);
  if (dets.det_ab != dets.det_bc || dets.det_bc != dets.det_ca)
    throw std::logic_error("three-leg determinant forms disagree");
  return abs(dets.det_ab);
}

} // namespace tropbound
