#include "tropbound/catalog.hpp"

#include "tropbound/errors.hpp"

namespace tropbound::catalog {

NumericalData with_free_rows(int k, std::vector<std::vector<Entry>> rows,
                             std::size_t free_rows) {
  NumericalData data;
  data.k = k;
  data.alpha = std::move(rows);
  for (std::size_t i = 0; i < free_rows; ++i)
    data.alpha.emplace_back(k + 1, 0);
  return data;
}

NumericalData maximal_contact(int k, Entry d) {
  if (k < 1 || d < 1)
    throw InvalidInput("", "maximal contact needs k >= 1 and d >= 1");
  std::vector<std::vector<Entry>> rows;
  for (int j = 0; j <= k; ++j) {
    std::vector<Entry> row(k + 1, 0);
    row[j] = d;
    rows.push_back(std::move(row));
  }
  return with_free_rows(k, std::move(rows), 2);
}

NumericalData characteristic_numbers(Entry d) {
  if (d < 1)
    throw InvalidInput("", "degree must be positive");
  std::vector<std::vector<Entry>> rows;
  for (int j = 0; j < 3; ++j)
    for (Entry c = 0; c < d; ++c) {
      std::vector<Entry> row(3, 0);
      row[j] = 1;
      rows.push_back(std::move(row));
    }
  return with_free_rows(2, std::move(rows), 3 * d - 1);
}

NumericalData split_tangency(Entry d) {
  if (d < 1)
    throw InvalidInput("", "split tangency profile needs d >= 1");
  return with_free_rows(2, {{d, 0, 0}, {0, d - 1, 0}, {0, 1, 0}, {0, 0, d}}, 3);
}

NumericalData corner_tangency(Entry d) {
  if (d < 2)
    throw InvalidInput("", "corner tangency profile needs d >= 2");
  return with_free_rows(2, {{d, d - 2, 0}, {0, 1, 0}, {0, 1, 0}, {0, 0, d}}, 3);
}

NumericalData primitive_degree(Entry d) { return characteristic_numbers(d); }

InsertionSpec point_insertions(const NumericalData &data) {
  InsertionSpec ins;
  for (std::size_t i = 0; i < data.markings(); ++i)
    ins.entries.push_back({1, data.is_free(i) ? data.k : 0});
  return ins;
}

} // namespace tropbound::catalog
