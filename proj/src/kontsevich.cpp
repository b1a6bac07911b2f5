#include "tropbound/kontsevich.hpp"

#include <mutex>

#include "tropbound/errors.hpp"

namespace tropbound {

mpz_class binomial(long n, long r) {
  if (n < 0 || r < 0 || r > n)
    return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(r));
  return out;
}

namespace {

template <class Lookup> mpz_class recursion_step(long d, Lookup &&nd) {
  mpz_class total = 0;
  for (long a = 1; a < d; ++a) {
    const long b = d - a;
    mpz_class bracket = b * binomial(3 * d - 4, 3 * a - 2) -
                        a * binomial(3 * d - 4, 3 * a - 1);
    total += nd(a) * nd(b) * (a * a * b) * bracket;
  }
  return total;
}

void require_positive(long d) {
  if (d < 1)
    throw InvalidInput("d", "degree must be positive");
}

} // namespace

mpz_class NdTable::get(long d) {
  require_positive(d);
  {
    std::shared_lock lock(mutex_);
    if (auto it = values_.find(d); it != values_.end())
      return it->second;
  }
  // Fill bottom-up so the recursion never re-enters the lock.
  std::unique_lock lock(mutex_);
  for (long e = values_.rbegin()->first + 1; e <= d; ++e)
    values_.emplace(e, recursion_step(e, [&](long x) { return values_.at(x); }));
  return values_.at(d);
}

mpz_class kontsevich_nd(long d) {
  static NdTable table;
  return table.get(d);
}

mpz_class kontsevich_nd_unmemoized(long d) {
  require_positive(d);
  if (d == 1)
    return 1;
  return recursion_step(d, [](long x) { return kontsevich_nd_unmemoized(x); });
}

} // namespace tropbound
