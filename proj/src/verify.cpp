#include "tropbound/verify.hpp"

#include <algorithm>

#include "tropbound/catalog.hpp"
#include "tropbound/errors.hpp"
#include "tropbound/kontsevich.hpp"

namespace tropbound {

std::optional<bool> VerificationReport::recomputed_ok() const {
  if (!exact)
    return std::nullopt;
  return mpq_class(*exact) <= bound;
}

VerificationFailure::VerificationFailure(VerificationReport report)
    : std::runtime_error("verification failed for case " + report.case_name),
      report_(std::move(report)) {}

namespace {

void finish(VerificationReport &r) {
  r.ok = r.recomputed_ok();
  if (r.exact && sgn(*r.exact) > 0) {
    mpq_class ratio = r.bound / mpq_class(*r.exact);
    ratio.canonicalize();
    r.ratio = ratio;
  }
}

std::optional<std::string> exact_unavailable(const NumericalData &data,
                                             const InsertionSpec &ins) {
  if (data.k != 2)
    return "exact side implemented for k = 2 only";
  for (std::size_t i = 0; i < data.markings(); ++i) {
    const int want = data.is_free(i) ? data.k : 0;
    if (ins.entries[i].codim != want)
      return "exact side needs point constraints at free markings and "
             "codimension 0 at tangent markings";
  }
  return std::nullopt;
}

} // namespace

VerificationReport verify_case(const std::string &name,
                               const NumericalData &data,
                               const InsertionSpec &ins, std::uint64_t seed,
                               const CountOptions &options) {
  VerificationReport r;
  r.case_name = name;
  r.data = data;
  r.insertions = ins;
  r.seed = seed;
  r.bound = mpq_class(theorem_main_bound(data, ins).value);

  for (std::size_t i : data.tangent_markings()) {
    const auto &row = data.alpha[i];
    if (std::count_if(row.begin(), row.end(), [](Entry e) { return e > 0; }) >
        1) {
      r.notes.emplace_back("boundary_stratum_leg");
      break;
    }
  }

  if (auto why = exact_unavailable(data, ins)) {
    r.notes.push_back("exact_unavailable: " + *why);
  } else {
    try {
      r.exact = multilinearity_factor(ins) * count_invariant(data, seed, options);
      r.exact_source = "tropical";
    } catch (const CapExceeded &e) {
      r.notes.push_back(std::string("exact_unavailable: ") + e.what());
    } catch (const InvalidInput &e) {
      r.notes.push_back(std::string("exact_unavailable: ") + e.what());
    }
  }
  finish(r);
  return r;
}

std::vector<VerificationReport> paper_example_suite(std::uint64_t seed) {
  std::vector<VerificationReport> out;
  for (Entry d = 2; d <= 4; ++d) {
    const std::string tag = "_d" + std::to_string(d);
    auto mc = catalog::maximal_contact(2, d);
    out.push_back(verify_case("maximal_contact" + tag, mc,
                              catalog::point_insertions(mc), seed));
    auto split = catalog::split_tangency(d);
    out.push_back(verify_case("split_tangency" + tag, split,
                              catalog::point_insertions(split), seed));
    auto corner = catalog::corner_tangency(d);
    out.push_back(verify_case("corner_tangency" + tag, corner,
                              catalog::point_insertions(corner), seed));
  }
  for (Entry d = 1; d <= 3; ++d) {
    VerificationReport r;
    r.case_name = "characteristic_d" + std::to_string(d);
    r.data = catalog::characteristic_numbers(d);
    r.insertions = catalog::point_insertions(r.data);
    r.seed = seed;
    r.bound = characteristic_number_bound(d);
    r.exact = kontsevich_nd(d);
    r.exact_source = "recursion";
    finish(r);
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
    return a.case_name < b.case_name;
  });
  for (const auto &r : out)
    if (r.ok != true)
      throw VerificationFailure(r);
  return out;
}

NumericalData random_three_leg_data(std::mt19937_64 &rng, Entry max_entry) {
  std::uniform_int_distribution<Entry> entry(0, max_entry);
  std::uniform_int_distribution<int> column(0, 2);
  auto row_with_zero = [&] {
    std::vector<Entry> row{entry(rng), entry(rng), entry(rng)};
    row[column(rng)] = 0;
    return row;
  };
  while (true) {
    auto a = row_with_zero();
    auto b = row_with_zero();
    // The third row is forced: c_j = S - a_j - b_j, with S the largest
    // a_j + b_j so that c is nonnegative and has a zero.
    Entry s = 0;
    for (int j = 0; j < 3; ++j)
      s = std::max(s, a[j] + b[j]);
    std::vector<Entry> c(3);
    for (int j = 0; j < 3; ++j)
      c[j] = s - a[j] - b[j];
    auto data = catalog::with_free_rows(2, {a, b, c}, 2);
    if (*std::max_element(c.begin(), c.end()) > max_entry)
      continue;
    if (data.tangent_markings().size() != 3 || !validate(data).ok)
      continue;
    return data;
  }
}

namespace {

std::optional<std::string> determinant_failure(const NumericalData &data) {
  const auto dets = three_leg_determinants(data);
  if (dets.det_ab != dets.det_bc || dets.det_bc != dets.det_ca)
    return "determinant forms disagree";
  if (mpq_class(abs(dets.mean)) > mpq_class(dets.bound))
    return "|mean determinant| exceeds (a_max+b_max+c_max)^2";
  if (dets.weak_bound > mpq_class(dets.bound))
    return "(4/3)(ab+bc+ca) exceeds (a+b+c)^2";
  return std::nullopt;
}

} // namespace

RandomSuiteReport random_three_leg_suite(std::uint64_t seed,
                                         std::size_t trials,
                                         std::size_t exact_trials) {
  if (trials == 0)
    throw InvalidInput("trials", "at least one trial is required");
  RandomSuiteReport report;
  report.seed = seed;

  for (Entry d = 1; d <= 5; ++d) {
    auto data = catalog::with_free_rows(2, {{d, 0, 0}, {0, d, 0}, {0, 0, d}}, 2);
    const auto dets = three_leg_determinants(data);
    if (abs(dets.det_ab) != d * d || dets.bound != 9 * d * d)
      report.counterexamples.push_back({data, "fixed case values"});
    if (auto why = determinant_failure(data))
      report.counterexamples.push_back({data, *why});
    ++report.fixed_cases;
  }

  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    auto data = random_three_leg_data(rng);
    if (auto why = determinant_failure(data))
      report.counterexamples.push_back({data, *why});
    if (t < exact_trials) {
      const auto r = verify_case("random_three_leg_" + std::to_string(t), data,
                                 catalog::point_insertions(data),
                                 derive_seed(seed, t));
      if (r.ok != true)
        report.counterexamples.push_back({data, "bound below tropical count"});
      else if (*r.exact != three_leg_invariant(data))
        report.counterexamples.push_back(
            {data, "tropical count differs from the determinant"});
      ++report.exact_checked;
    }
    ++report.trials;
  }
  return report;
}

} // namespace tropbound
