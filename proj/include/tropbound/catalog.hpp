#pragma once

// Named tangency profiles used throughout the tests, the verification
// suites and the CLI.

#include "tropbound/bounds.hpp"
#include "tropbound/numerical_data.hpp"

namespace tropbound::catalog {

/// One row (d at column j) per boundary component of P^k, plus two free rows.
NumericalData maximal_contact(int k, Entry d);

/// d simple-tangency rows per boundary line of P^2, plus 3d-1 free rows.
NumericalData characteristic_numbers(Entry d);

/// Plane profile (d,0,0), (0,d-1,0), (0,1,0), (0,0,d) with three free rows.
/// At d = 1 the second row is zero, so that marking counts as free.
NumericalData split_tangency(Entry d);

/// Plane profile (d,d-2,0), (0,1,0), (0,1,0), (0,0,d) with three free rows.
NumericalData corner_tangency(Entry d);

/// Degree-d primitive plane data: d legs along each of (1,0), (0,1),
/// (-1,-1) and 3d-1 free rows. Same matrix as characteristic_numbers.
NumericalData primitive_degree(Entry d);

/// Appends `free_rows` all-zero rows to the given tangency rows.
NumericalData with_free_rows(int k, std::vector<std::vector<Entry>> rows,
                             std::size_t free_rows);

/// Point constraints (codimension k) at free markings, nothing elsewhere.
InsertionSpec point_insertions(const NumericalData &data);

} // namespace tropbound::catalog
