#pragma once

// Counts N_d of rational plane curves of degree d through 3d-1 general
// points, via the Kontsevich recursion
//
//   N_d = sum_{a+b=d} N_a N_b a^2 b [ b C(3d-4, 3a-2) - a C(3d-4, 3a-1) ].

#include <map>
#include <shared_mutex>

#include <gmpxx.h>

namespace tropbound {

/// C(n, r), zero when r < 0 or r > n.
mpz_class binomial(long n, long r);

/// Memoized table of N_d. Concurrent readers only ever observe completed
/// entries.
class NdTable {
public:
  mpz_class get(long d);

private:
  std::map<long, mpz_class> values_{{1, mpz_class(1)}};
  std::shared_mutex mutex_;
};

/// Process-wide memoized N_d.
mpz_class kontsevich_nd(long d);

/// Plain recursion with no memo, exponential in d.
mpz_class kontsevich_nd_unmemoized(long d);

} // namespace tropbound
