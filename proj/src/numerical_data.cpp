#include "tropbound/numerical_data.hpp"

#include <algorithm>

#include "tropbound/errors.hpp"

namespace tropbound {

bool NumericalData::is_free(std::size_t i) const {
  const auto &row = alpha.at(i);
  return std::all_of(row.begin(), row.end(), [](Entry e) { return e == 0; });
}

std::vector<std::size_t> NumericalData::free_markings() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (is_free(i))
      out.push_back(i);
  return out;
}

std::vector<std::size_t> NumericalData::tangent_markings() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (!is_free(i))
      out.push_back(i);
  return out;
}

bool ValidationReport::has(const std::string &name) const {
  return std::find(violations.begin(), violations.end(), name) !=
         violations.end();
}

std::vector<LatticeVector> fan_rays(int k) {
  if (k < 1)
    throw InvalidInput("k", "ambient dimension must be positive");
  std::vector<LatticeVector> rays;
  rays.reserve(k + 1);
  for (int j = 0; j < k; ++j) {
    LatticeVector e(k, 0);
    e[j] = 1;
    rays.push_back(std::move(e));
  }
  rays.emplace_back(k, -1);
  return rays;
}

ValidationReport validate(const NumericalData &data) {
  ValidationReport report;
  auto flag = [&](const char *name) {
    if (!report.has(name))
      report.violations.emplace_back(name);
  };

  if (data.k < 1) {
    flag(violation::bad_dimension);
    report.ok = false;
    return report;
  }
  const std::size_t cols = static_cast<std::size_t>(data.k) + 1;
  if (data.markings() < 3)
    flag(violation::too_few_markings);

  bool rectangular = true;
  for (const auto &row : data.alpha) {
    if (row.size() != cols) {
      flag(violation::ragged_row);
      rectangular = false;
      continue;
    }
    if (std::any_of(row.begin(), row.end(), [](Entry e) { return e < 0; }))
      flag(violation::negative_entry);
    if (std::all_of(row.begin(), row.end(), [](Entry e) { return e > 0; }))
      flag(violation::full_support_row);
  }

  if (rectangular && !data.alpha.empty()) {
    std::vector<mpz_class> sums(cols, 0);
    for (const auto &row : data.alpha)
      for (std::size_t j = 0; j < cols; ++j)
        sums[j] += mpz_class(static_cast<long>(row[j]));
    if (std::any_of(sums.begin(), sums.end(),
                    [&](const mpz_class &s) { return s != sums.front(); }))
      flag(violation::unbalanced);
  }

  bool any_free = false;
  for (const auto &row : data.alpha)
    if (std::all_of(row.begin(), row.end(), [](Entry e) { return e == 0; }))
      any_free = true;
  if (!any_free)
    flag(violation::no_free_marking);

  report.ok = report.violations.empty();
  return report;
}

mpz_class degree(const NumericalData &data) {
  if (data.k < 1)
    throw InvalidInput("k", "ambient dimension must be positive");
  if (data.alpha.empty())
    throw InvalidInput("alpha", "no markings");
  const std::size_t cols = static_cast<std::size_t>(data.k) + 1;
  std::vector<mpz_class> sums(cols, 0);
  for (const auto &row : data.alpha) {
    if (row.size() != cols)
      throw InvalidInput("alpha", "row length differs from k+1");
    for (std::size_t j = 0; j < cols; ++j)
      sums[j] += mpz_class(static_cast<long>(row[j]));
  }
  for (const auto &s : sums)
    if (s != sums.front())
      throw InvalidInput("alpha", "column sums differ (unbalanced)");
  return sums.front();
}

LatticeVector direction_of(const NumericalData &data, std::size_t i) {
  if (i >= data.markings())
    throw std::out_of_range("marking index out of range");
  const auto rays = fan_rays(data.k);
  const auto &row = data.alpha[i];
  if (row.size() != rays.size())
    throw InvalidInput("alpha", "row length differs from k+1");
  LatticeVector v(data.k, 0);
  for (std::size_t j = 0; j < rays.size(); ++j)
    for (int c = 0; c < data.k; ++c)
      v[c] += row[j] * rays[j][c];
  return v;
}

Entry alpha_max(const NumericalData &data, std::size_t i) {
  if (i >= data.markings())
    throw std::out_of_range("marking index out of range");
  const auto &row = data.alpha[i];
  if (row.empty())
    return 0;
  return *std::max_element(row.begin(), row.end());
}

} // namespace tropbound
