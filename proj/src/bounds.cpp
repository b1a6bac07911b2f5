#include "tropbound/bounds.hpp"

#include <algorithm>

#include "tropbound/errors.hpp"
#include "tropbound/kontsevich.hpp"

namespace tropbound {

void check_insertions(const NumericalData &data, const InsertionSpec &ins) {
  const std::size_t n = data.markings();
  if (ins.entries.size() != n)
    throw InvalidInput("insertions", "expected " + std::to_string(n) +
                                         " entries, got " +
                                         std::to_string(ins.entries.size()));
  long total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto &e = ins.entries[i];
    const std::string at = "insertions/" + std::to_string(i);
    if (e.multiplier < 1)
      throw InvalidInput(at + "/d", "multiplier must be positive");
    if (e.codim < 0 || e.codim > data.k)
      throw InvalidInput(at + "/nu", "codimension must lie in [0, k]");
    total += e.codim;
  }
  const long expected = static_cast<long>(n) + data.k - 3;
  if (total != expected)
    throw DimensionMismatch("insertion codimensions sum to " +
                            std::to_string(total) + ", expected n+k-3 = " +
                            std::to_string(expected));
}

BoundValue theorem_main_bound(const NumericalData &data,
                              const InsertionSpec &ins) {
  const auto report = validate(data);
  if (!report.ok) {
    if (report.violations.size() == 1 &&
        report.has(violation::no_free_marking))
      throw HypothesisViolation(
          "no marking is mapped into the torus (no all-zero row)");
    throw InvalidInput("alpha", "invalid numerical data: " +
                                    report.violations.front());
  }
  check_insertions(data, ins);

  const std::size_t n = data.markings();
  BoundValue out;
  out.multiplier_product = multilinearity_factor(ins);

  // Largest free-marking codimension gives the smallest binomial.
  int nu = 0;
  for (std::size_t i : data.free_markings())
    nu = std::max(nu, ins.entries[i].codim);
  out.free_codim = nu;
  out.binomial = binomial(n - 3 + data.k - nu, static_cast<long>(n - 3));

  mpz_class base = 0;
  for (std::size_t i = 0; i < n; ++i)
    base += mpz_class(static_cast<long>(alpha_max(data, i)));
  mpz_pow_ui(out.power.get_mpz_t(), base.get_mpz_t(), n - 3);

  out.value = out.multiplier_product * out.binomial * out.power;
  return out;
}

mpz_class maximal_contact_bound(int k, std::int64_t d) {
  if (k < 1 || d < 1)
    throw InvalidInput("", "maximal contact bound needs k >= 1 and d >= 1");
  mpz_class base = mpz_class(static_cast<long>(k + 1)) * static_cast<long>(d);
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

mpq_class characteristic_number_bound(std::int64_t d) {
  if (d < 1)
    throw InvalidInput("d", "degree must be positive");
  mpz_class num;
  mpz_class base = 3 * static_cast<long>(d);
  mpz_pow_ui(num.get_mpz_t(), base.get_mpz_t(), 6 * d - 4);
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(d));
  mpq_class out(num, fact * fact * fact);
  out.canonicalize();
  return out;
}

mpz_class multilinearity_factor(const InsertionSpec &ins) {
  mpz_class out = 1;
  for (const auto &e : ins.entries)
    out *= static_cast<long>(e.multiplier);
  return out;
}

} // namespace tropbound
