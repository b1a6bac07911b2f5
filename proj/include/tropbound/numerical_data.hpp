#pragma once

// Tangency matrices for genus-zero log maps to (P^k, boundary).
//
// Row i holds the contact orders of marking i with the k+1 coordinate
// hyperplanes H_1..H_{k+1}. Column j corresponds to the fan ray r_j, with
// r_1..r_k the standard basis and r_{k+1} = -(e_1 + ... + e_k).

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace tropbound {

using Entry = std::int64_t;
using LatticeVector = std::vector<std::int64_t>;

struct NumericalData {
  int k = 2;
  std::vector<std::vector<Entry>> alpha;

  std::size_t markings() const noexcept { return alpha.size(); }
  bool is_free(std::size_t i) const;
  std::vector<std::size_t> free_markings() const;
  std::vector<std::size_t> tangent_markings() const;

  bool operator==(const NumericalData &) const = default;
};

namespace violation {
inline constexpr const char *bad_dimension = "bad_dimension";
inline constexpr const char *too_few_markings = "too_few_markings";
inline constexpr const char *ragged_row = "ragged_row";
inline constexpr const char *negative_entry = "negative_entry";
inline constexpr const char *unbalanced = "unbalanced";
inline constexpr const char *full_support_row = "full_support_row";
inline constexpr const char *no_free_marking = "no_free_marking";
} // namespace violation

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;

  bool has(const std::string &name) const;
};

std::vector<LatticeVector> fan_rays(int k);

ValidationReport validate(const NumericalData &data);

/// Common column sum. Throws InvalidInput when the columns disagree.
mpz_class degree(const NumericalData &data);

/// Sum_j alpha_ij r_j, the weighted direction of marking i (0-based).
LatticeVector direction_of(const NumericalData &data, std::size_t i);

Entry alpha_max(const NumericalData &data, std::size_t i);

} // namespace tropbound
