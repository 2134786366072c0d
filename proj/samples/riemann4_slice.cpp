// Coarse 2D Riemann configuration 4 run; prints the density slice at y = 0.5.

#include <cstdio>
#include <cstdlib>

#include "mopweno/mopweno.hpp"

int main(int argc, char** argv) {
  using namespace mopweno;
  const int n = argc > 1 ? std::atoi(argv[1]) : 50;
  EulerRun run;
  run.problem = EulerProblem::riemann4;
  run.n = n;
  run.t_end = 0.25;
  for (const char* name : {"weno-m", "mop-weno-m"}) {
    const auto r = solve_euler(run, parse_scheme(name));
    const auto slice = density_slice(r, default_slice(run.problem));
    std::printf("%s: %ld steps, slice TV %.5e\n", name, r.steps, total_variation(std::span<const SliceSample>(slice)));
    for (const auto& s : slice) std::printf("  x=%.4f rho=%.6f\n", s.coord, s.value);
  }
}
