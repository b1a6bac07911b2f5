#include "tropbound/tree_types.hpp"

#include <numeric>

#include "tropbound/errors.hpp"

namespace tropbound {

std::int64_t weight(const Vec2 &v) {
  return std::gcd(v.x < 0 ? -v.x : v.x, v.y < 0 ? -v.y : v.y);
}

std::vector<LegSpec> legs_from_numerical_data(const NumericalData &data) {
  if (data.k != 2)
    throw InvalidInput("k", "tropical counting is implemented for k = 2 only");
  const auto report = validate(data);
  if (!report.ok)
    throw InvalidInput("alpha",
                       "invalid numerical data: " + report.violations.front());
  std::vector<LegSpec> legs;
  for (std::size_t i : data.tangent_markings()) {
    const auto v = direction_of(data, i);
    legs.push_back({{v[0], v[1]}, i});
  }
  const std::size_t free = data.free_markings().size();
  if (free + 1 != legs.size())
    throw InvalidInput("alpha", std::to_string(legs.size()) +
                                    " tangent markings need " +
                                    std::to_string(legs.size() - 1) +
                                    " free point markings, found " +
                                    std::to_string(free));
  return legs;
}

namespace {

TreeTopology orient(std::size_t m,
                    const std::vector<std::pair<std::size_t, std::size_t>> &raw) {
  const std::size_t nodes = 2 * m - 2;
  std::vector<std::vector<std::size_t>> adj(nodes);
  for (const auto &[a, b] : raw) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  TreeTopology t;
  t.num_legs = m;
  std::vector<bool> seen(nodes, false);
  std::vector<std::size_t> queue{m};
  seen[m] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t v = queue[head];
    for (std::size_t w : adj[v]) {
      if (seen[w])
        continue;
      seen[w] = true;
      t.edges.emplace_back(v, w);
      queue.push_back(w);
    }
  }
  return t;
}

void grow(std::size_t m, std::size_t next_leaf,
          std::vector<std::pair<std::size_t, std::size_t>> &edges,
          std::vector<TreeTopology> &out) {
  if (next_leaf == m) {
    out.push_back(orient(m, edges));
    return;
  }
  // Leaf k is attached by subdividing one of the existing edges with a new
  // vertex; vertex ids are allocated in insertion order.
  const std::size_t vertex = m + next_leaf - 2;
  const std::size_t count = edges.size();
  for (std::size_t e = 0; e < count; ++e) {
    const auto [a, b] = edges[e];
    edges[e] = {a, vertex};
    edges.emplace_back(vertex, b);
    edges.emplace_back(vertex, next_leaf);
    grow(m, next_leaf + 1, edges, out);
    edges.pop_back();
    edges.pop_back();
    edges[e] = {a, b};
  }
}

} // namespace

std::vector<TreeTopology> enumerate_topologies(std::size_t num_legs) {
  if (num_legs < 3)
    throw InvalidInput("legs", "a trivalent tree needs at least 3 legs");
  std::vector<std::pair<std::size_t, std::size_t>> edges{
      {num_legs, 0}, {num_legs, 1}, {num_legs, 2}};
  std::vector<TreeTopology> out;
  grow(num_legs, 3, edges, out);
  return out;
}

std::optional<std::vector<Vec2>>
edge_directions(const TreeTopology &topology, const std::vector<LegSpec> &legs) {
  const std::size_t m = topology.num_legs;
  if (legs.size() != m)
    throw std::invalid_argument("edge_directions: leg count mismatch");
  // Edges come out of a BFS, so children are finalised in reverse order.
  std::vector<Vec2> below(topology.num_nodes());
  for (std::size_t leaf = 0; leaf < m; ++leaf)
    below[leaf] = legs[leaf].direction;
  std::vector<Vec2> dirs(topology.edges.size());
  for (std::size_t e = topology.edges.size(); e-- > 0;) {
    const auto [parent, child] = topology.edges[e];
    dirs[e] = below[child];
    if (!topology.is_leg(e) && dirs[e].is_zero())
      return std::nullopt;
    below[parent] += below[child];
  }
  return dirs;
}

mpz_class vertex_multiplicity(const TreeTopology &topology,
                              const std::vector<Vec2> &directions) {
  // Two outward directions per vertex suffice since the third is their
  // negated sum.
  std::vector<std::vector<Vec2>> outward(topology.num_nodes());
  for (std::size_t e = 0; e < topology.edges.size(); ++e) {
    const auto [parent, child] = topology.edges[e];
    outward[parent].push_back(directions[e]);
    outward[child].push_back(-directions[e]);
  }
  mpz_class mult = 1;
  for (std::size_t v = topology.num_legs; v < topology.num_nodes(); ++v) {
    const auto &d = outward[v];
    const std::int64_t det = cross(d[0], d[1]);
    mult *= static_cast<long>(det < 0 ? -det : det);
  }
  return mult;
}

std::vector<TreeType> enumerate_tree_types(const std::vector<LegSpec> &legs,
                                           std::size_t num_points) {
  if (legs.size() < 3)
    throw InvalidInput("legs", "at least 3 legs are required");
  if (num_points + 1 != legs.size())
    throw InvalidInput("points", "expected #legs - 1 point markings");
  std::vector<TreeType> out;
  for (auto &topology : enumerate_topologies(legs.size())) {
    auto dirs = edge_directions(topology, legs);
    if (!dirs)
      continue;
    const std::size_t edges = topology.edges.size();
    std::vector<std::size_t> assign(num_points, 0);
    while (true) {
      out.push_back({topology, *dirs, assign});
      std::size_t j = 0;
      while (j < num_points && ++assign[j] == edges)
        assign[j++] = 0;
      if (j == num_points)
        break;
    }
  }
  return out;
}

mpz_class estimated_work(std::size_t num_legs) {
  mpz_class topologies = 1;
  for (std::size_t j = 3; j + 5 <= 2 * num_legs; j += 2)
    topologies *= static_cast<unsigned long>(j);
  mpz_class assignments;
  mpz_ui_pow_ui(assignments.get_mpz_t(),
                static_cast<unsigned long>(2 * num_legs - 3),
                static_cast<unsigned long>(num_legs - 1));
  return topologies * assignments;
}

} // namespace tropbound
