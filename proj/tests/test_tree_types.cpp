#include <doctest.h>

#include <algorithm>
#include <set>

#include "tropbound/catalog.hpp"
#include "tropbound/errors.hpp"
#include "tropbound/tree_types.hpp"

using namespace tropbound;

namespace {

std::size_t double_factorial(std::size_t n) {
  std::size_t out = 1;
  for (std::size_t j = n; j > 1; j -= 2)
    out *= j;
  return out;
}

// A tree on labeled leaves is determined by its set of splits; store each
// split as the side not containing leaf 0.
std::set<std::set<std::size_t>> splits(const TreeTopology &t) {
  std::vector<std::set<std::size_t>> below(t.num_nodes());
  for (std::size_t leaf = 0; leaf < t.num_legs; ++leaf)
    below[leaf] = {leaf};
  std::set<std::set<std::size_t>> out;
  for (std::size_t e = t.edges.size(); e-- > 0;) {
    const auto [parent, child] = t.edges[e];
    below[parent].insert(below[child].begin(), below[child].end());
    if (!t.is_leg(e)) {
      std::set<std::size_t> side = below[child];
      if (side.count(0)) {
        std::set<std::size_t> other;
        for (std::size_t l = 0; l < t.num_legs; ++l)
          if (!side.count(l))
            other.insert(l);
        side = other;
      }
      out.insert(side);
    }
  }
  return out;
}

} // namespace

TEST_CASE("topology counts are (2m-5)!! and pairwise distinct") {
  for (std::size_t m = 3; m <= 8; ++m) {
    const auto all = enumerate_topologies(m);
    CHECK(all.size() == double_factorial(2 * m - 5));
    std::set<std::set<std::set<std::size_t>>> seen;
    for (const auto &t : all) {
      CHECK(t.edges.size() == 2 * m - 3);
      CHECK(splits(t).size() == m - 3);
      seen.insert(splits(t));
    }
    CHECK(seen.size() == all.size());
  }
  CHECK(enumerate_topologies(4).size() == 3);
  CHECK_THROWS_AS(enumerate_topologies(2), InvalidInput);
}

TEST_CASE("every vertex is trivalent and edges point away from the root") {
  for (const auto &t : enumerate_topologies(6)) {
    std::vector<int> valence(t.num_nodes(), 0);
    std::vector<int> parents(t.num_nodes(), 0);
    for (const auto &[p, c] : t.edges) {
      ++valence[p];
      ++valence[c];
      ++parents[c];
      CHECK(p >= t.num_legs);
    }
    for (std::size_t v = 0; v < t.num_nodes(); ++v) {
      CHECK(valence[v] == (v < t.num_legs ? 1 : 3));
      CHECK(parents[v] == (v == t.num_legs ? 0 : 1));
    }
  }
}

TEST_CASE("legs from numerical data") {
  SUBCASE("maximal contact") {
    const auto legs = legs_from_numerical_data(catalog::maximal_contact(2, 2));
    REQUIRE(legs.size() == 3);
    CHECK(legs[0].direction == Vec2{2, 0});
    CHECK(legs[1].direction == Vec2{0, 2});
    CHECK(legs[2].direction == Vec2{-2, -2});
  }
  SUBCASE("corner and split tangency coincide at d = 2") {
    const auto a = legs_from_numerical_data(catalog::corner_tangency(2));
    const auto b = legs_from_numerical_data(catalog::split_tangency(2));
    REQUIRE(a.size() == 4);
    const std::vector<Vec2> want{{2, 0}, {0, 1}, {0, 1}, {-2, -2}};
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(a[i].direction == want[i]);
      CHECK(b[i].direction == want[i]);
      CHECK(a[i].source_marking == i);
    }
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(legs_from_numerical_data(catalog::maximal_contact(3, 1)),
                    InvalidInput);
    auto extra_free = catalog::with_free_rows(2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3);
    CHECK_THROWS_AS(legs_from_numerical_data(extra_free), InvalidInput);
  }
}

TEST_CASE("edge directions are balanced at every vertex") {
  const auto legs = legs_from_numerical_data(catalog::primitive_degree(2));
  std::size_t kept = 0;
  for (const auto &t : enumerate_topologies(legs.size())) {
    const auto dirs = edge_directions(t, legs);
    if (!dirs)
      continue;
    ++kept;
    std::vector<Vec2> sum(t.num_nodes());
    for (std::size_t e = 0; e < t.edges.size(); ++e) {
      sum[t.edges[e].first] += (*dirs)[e];
      sum[t.edges[e].second] += -(*dirs)[e];
      if (!t.is_leg(e))
        CHECK_FALSE((*dirs)[e].is_zero());
    }
    for (std::size_t v = t.num_legs; v < t.num_nodes(); ++v)
      CHECK(sum[v].is_zero());
  }
  CHECK(kept > 0);
  CHECK(kept < 105);
}

TEST_CASE("tree types before solving") {
  const auto three = legs_from_numerical_data(catalog::maximal_contact(2, 2));
  CHECK(enumerate_tree_types(three, 2).size() == 9);
  // Split tangency at d = 3: the tree pairing the two vertical legs has a
  // nonzero bounded edge, so all 3 topologies survive: 3 * 5^3 types.
  const auto four = legs_from_numerical_data(catalog::split_tangency(3));
  CHECK(enumerate_tree_types(four, 3).size() == 3 * 125);
  CHECK_THROWS_AS(enumerate_tree_types(four, 2), InvalidInput);
}

TEST_CASE("vertex multiplicity") {
  const auto legs = legs_from_numerical_data(catalog::maximal_contact(2, 5));
  const auto t = enumerate_topologies(3).front();
  CHECK(vertex_multiplicity(t, *edge_directions(t, legs)) == 25);
}

TEST_CASE("estimated work") {
  CHECK(estimated_work(3) == 9);
  CHECK(estimated_work(4) == 3 * 125);
  CHECK(estimated_work(8) == mpz_class(10395) * mpz_class("62748517"));
}
