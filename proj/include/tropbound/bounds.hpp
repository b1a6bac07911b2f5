#pragma once

// Upper bound for genus-zero log invariants of (P^k, boundary) with
// insertions d_i H^{nu_i}:
//
//   d_1 ... d_n * C(n-3+k-nu, n-3) * (sum_i max_j alpha_ij)^(n-3)
//
// where nu is the largest codimension inserted at a free marking.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "tropbound/numerical_data.hpp"

namespace tropbound {

struct Insertion {
  std::int64_t multiplier = 1; // d_i
  int codim = 0;               // nu_i
  bool operator==(const Insertion &) const = default;
};

struct InsertionSpec {
  std::vector<Insertion> entries;
  bool operator==(const InsertionSpec &) const = default;
};

struct BoundValue {
  mpz_class value;
  mpz_class multiplier_product; // prod d_i
  mpz_class binomial;           // C(n-3+k-nu, n-3)
  mpz_class power;              // (sum alpha_i^max)^(n-3)
  int free_codim = 0;           // nu
};

/// Checks the insertion spec against the data: length n, positive
/// multipliers, 0 <= nu_i <= k, and sum nu_i = n + k - 3.
void check_insertions(const NumericalData &data, const InsertionSpec &ins);

BoundValue theorem_main_bound(const NumericalData &data,
                              const InsertionSpec &ins);

mpz_class maximal_contact_bound(int k, std::int64_t d);

/// (3d)^(6d-4) / (d!)^3, exact.
mpq_class characteristic_number_bound(std::int64_t d);

mpz_class multilinearity_factor(const InsertionSpec &ins);

} // namespace tropbound
