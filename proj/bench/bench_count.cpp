// Wall-clock comparison of the serial reference enumeration and the
// pruned OpenMP kernel on the catalogued plane profiles.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tropbound/catalog.hpp"
#include "tropbound/tropical.hpp"

using namespace tropbound;

namespace {

template <class F> double seconds(F &&f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

void compare(const std::string &name, const NumericalData &data,
             bool with_reference) {
  const auto legs = legs_from_numerical_data(data);
  const auto points = sample_points(legs.size() - 1, 1);
  CountResult par, ref;
  const double t_par = seconds([&] { par = count_parallel(legs, points); });
  std::printf("%-22s legs=%zu  parallel: %8s in %8.3fs (%zu systems)", name.c_str(),
              legs.size(), par.total.get_str().c_str(), t_par, par.systems_solved);
  if (with_reference) {
    const double t_ref = seconds([&] { ref = count_reference(legs, points); });
    std::printf("  reference: %8s in %8.3fs (%zu systems)%s",
                ref.total.get_str().c_str(), t_ref, ref.systems_solved,
                ref.total == par.total ? "" : "  MISMATCH");
  }
  std::printf("\n");
}

} // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled\n");
#endif
  compare("maximal_contact d=3", catalog::maximal_contact(2, 3), true);
  compare("split_tangency d=3", catalog::split_tangency(3), true);
  compare("corner_tangency d=4", catalog::corner_tangency(4), true);
  compare("five legs", catalog::with_free_rows(2, {{2, 0, 0}, {0, 1, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, 1}}, 4), true);
  compare("primitive d=2", catalog::primitive_degree(2), false);
  return 0;
}
