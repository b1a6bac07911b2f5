#include <doctest.h>

#include <numeric>
#include <random>

#include "support.hpp"
#include "tropbound/bounds.hpp"
#include "tropbound/catalog.hpp"
#include "tropbound/errors.hpp"
#include "tropbound/kontsevich.hpp"

using namespace tropbound;

namespace {

mpz_class bound_of(const NumericalData &d) {
  return theorem_main_bound(d, catalog::point_insertions(d)).value;
}

mpz_class zpow(long b, unsigned long e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(b), e);
  return out;
}

} // namespace

TEST_CASE("theorem bound on the catalogued profiles") {
  CHECK(bound_of(catalog::maximal_contact(2, 2)) == 36);
  CHECK(bound_of(catalog::split_tangency(2)) == 1296);
  CHECK(bound_of(catalog::corner_tangency(3)) == 4096);

  const auto b = theorem_main_bound(catalog::split_tangency(2),
                                    catalog::point_insertions(catalog::split_tangency(2)));
  CHECK(b.multiplier_product == 1);
  CHECK(b.binomial == 1);
  CHECK(b.power == 1296);
  CHECK(b.value == b.multiplier_product * b.binomial * b.power);
}

TEST_CASE("closed forms for d <= 5") {
  for (long d = 2; d <= 5; ++d) {
    CHECK(bound_of(catalog::maximal_contact(2, d)) == 9 * d * d);
    CHECK(bound_of(catalog::split_tangency(d)) == 81 * zpow(d, 4));
    CHECK(bound_of(catalog::corner_tangency(d)) == zpow(2 * d + 2, 4));
  }
  // d = 1: the (0,0,0) row is free but carries no insertion.
  const auto split1 = catalog::split_tangency(1);
  InsertionSpec ins{{{1, 0}, {1, 0}, {1, 0}, {1, 0}, {1, 2}, {1, 2}, {1, 2}}};
  CHECK(theorem_main_bound(split1, ins).value == 81);
  CHECK_THROWS_AS(bound_of(split1), DimensionMismatch);
}

TEST_CASE("theorem bound errors") {
  SUBCASE("no free marking") {
    NumericalData d{2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    InsertionSpec ins{{{1, 0}, {1, 0}, {1, 2}}};
    CHECK_THROWS_AS(theorem_main_bound(d, ins), HypothesisViolation);
  }
  SUBCASE("codimensions off by one") {
    auto d = catalog::maximal_contact(2, 2);
    InsertionSpec ins{{{1, 0}, {1, 0}, {1, 0}, {1, 2}, {1, 1}}};
    CHECK_THROWS_AS(theorem_main_bound(d, ins), DimensionMismatch);
  }
  SUBCASE("wrong length") {
    auto d = catalog::maximal_contact(2, 2);
    CHECK_THROWS_AS(theorem_main_bound(d, InsertionSpec{{{1, 2}, {1, 2}}}),
                    InvalidInput);
  }
  SUBCASE("unbalanced") {
    NumericalData d{2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}};
    CHECK_THROWS_AS(theorem_main_bound(d, InsertionSpec{{{1, 0}, {1, 0}, {1, 1}}}),
                    InvalidInput);
  }
}

TEST_CASE("n = 3 uses the empty power") {
  // Two tangent rows and a point at the free marking: n + k - 3 = 2,
  // binomial C(0, 0) = 1, power 2^0 = 1.
  NumericalData d{2, {{1, 0, 0}, {0, 1, 1}, {0, 0, 0}}};
  InsertionSpec ins{{{1, 0}, {1, 0}, {1, 2}}};
  const auto b = theorem_main_bound(d, ins);
  CHECK(b.power == 1);
  CHECK(b.binomial == 1);
  CHECK(b.value == 1);
}

TEST_CASE("line insertions give a nontrivial binomial") {
  // k = 2, maximal contact with the two free markings carrying lines and one
  // tangent marking carrying a point: nu = 1, C(2 + 2 - 1, 2) = 3.
  auto d = catalog::maximal_contact(2, 1);
  InsertionSpec ins{{{1, 2}, {1, 0}, {1, 0}, {1, 1}, {1, 1}}};
  const auto b = theorem_main_bound(d, ins);
  CHECK(b.free_codim == 1);
  CHECK(b.binomial == 3);
  CHECK(b.value == 3 * 9);
}

TEST_CASE("maximal contact corollary") {
  CHECK(maximal_contact_bound(2, 2) == 36);
  CHECK(maximal_contact_bound(1, 1) == 2);
  CHECK(maximal_contact_bound(3, 2) == support::ipow(8, 3));
  for (int k = 1; k <= 4; ++k)
    for (long d = 1; d <= 5; ++d)
      CHECK(maximal_contact_bound(k, d) == bound_of(catalog::maximal_contact(k, d)));
}

TEST_CASE("characteristic number corollary") {
  CHECK(characteristic_number_bound(1) == 9);
  CHECK(characteristic_number_bound(2) == 209952);
  CHECK(support::ipow(6, 8) == 1679616);
  mpq_class d3(zpow(9, 14), 216);
  d3.canonicalize();
  CHECK(characteristic_number_bound(3) == d3);
  for (long d = 1; d <= 5; ++d) {
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), d);
    const mpz_class numerator = bound_of(catalog::characteristic_numbers(d));
    CHECK(numerator == zpow(3 * d, 6 * d - 4));
    CHECK(characteristic_number_bound(d) ==
          mpq_class(numerator) / mpq_class(fact * fact * fact));
  }
  CHECK(characteristic_number_bound(3) >= 12);
  CHECK_THROWS_AS(characteristic_number_bound(0), InvalidInput);
}

TEST_CASE("multilinearity factor") {
  CHECK(multilinearity_factor(InsertionSpec{{{1, 0}, {1, 2}, {1, 1}}}) == 1);
  CHECK(multilinearity_factor(InsertionSpec{{{2, 0}, {3, 2}, {1, 1}}}) == 6);
  CHECK(multilinearity_factor(
            catalog::point_insertions(catalog::characteristic_numbers(3))) == 1);
  auto d = catalog::maximal_contact(2, 2);
  InsertionSpec ins = catalog::point_insertions(d);
  ins.entries[0].multiplier = 5;
  CHECK(theorem_main_bound(d, ins).value == 5 * 36);
}

TEST_CASE("permutation invariance") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 200; ++t) {
    const int k = 1 + static_cast<int>(rng() % 3);
    auto data = support::balanced(rng, k, 2 + rng() % 4, 2, 6);
    // Codimensions: points at free markings, remainder spread on tangent rows.
    auto ins = catalog::point_insertions(data);
    long remaining = static_cast<long>(data.markings()) + k - 3 - 2L * k;
    for (std::size_t i = 0; i < data.markings() && remaining > 0; ++i)
      if (!data.is_free(i)) {
        const int add = static_cast<int>(std::min<long>(remaining, k));
        ins.entries[i].codim = add;
        remaining -= add;
      }
    if (remaining != 0)
      continue;
    for (auto &e : ins.entries)
      e.multiplier = 1 + static_cast<long>(rng() % 3);
    const auto base = theorem_main_bound(data, ins).value;

    std::vector<std::size_t> perm(data.markings());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    NumericalData pd{data.k, {}};
    InsertionSpec pi;
    for (auto p : perm) {
      pd.alpha.push_back(data.alpha[p]);
      pi.entries.push_back(ins.entries[p]);
    }
    CHECK(theorem_main_bound(pd, pi).value == base);
  }
}

TEST_CASE("monotone under balanced increments") {
  std::mt19937_64 rng(19);
  int moves = 0;
  for (int t = 0; t < 300; ++t) {
    auto data = support::balanced(rng, 2, 3 + rng() % 3, 3, 5);
    const auto ins = catalog::point_insertions(data);
    if (data.markings() + data.k - 3 != 2 * data.free_markings().size())
      continue; // only data whose point insertions are dimensionally valid
    const auto before = theorem_main_bound(data, ins).value;
    // Raise one entry of every column by one, on tangent rows only.
    const auto tangent = data.tangent_markings();
    auto moved = data;
    for (int j = 0; j <= data.k; ++j)
      ++moved.alpha[tangent[rng() % tangent.size()]][j];
    if (!validate(moved).ok)
      continue;
    CHECK(theorem_main_bound(moved, ins).value >= before);
    ++moves;
  }
  CHECK(moves > 0);
}

TEST_CASE("point constraint at a free marking makes the binomial 1") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 200; ++t) {
    const int k = 1 + static_cast<int>(rng() % 4);
    auto data = support::balanced(rng, k, 2 + rng() % 4, 1 + rng() % 3, 4);
    const std::size_t n = data.markings();
    InsertionSpec ins;
    ins.entries.assign(n, {1, 0});
    // One point at the first free marking, the rest distributed greedily.
    const auto free = data.free_markings();
    ins.entries[free.front()].codim = k;
    long remaining = static_cast<long>(n) + k - 3 - k;
    if (remaining < 0)
      continue;
    for (std::size_t i = 0; i < n && remaining > 0; ++i) {
      if (i == free.front())
        continue;
      const int add = static_cast<int>(std::min<long>(remaining, k));
      ins.entries[i].codim = add;
      remaining -= add;
    }
    if (remaining != 0)
      continue;
    CHECK(theorem_main_bound(data, ins).binomial == 1);
  }
}
