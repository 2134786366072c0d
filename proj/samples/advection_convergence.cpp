// Grid convergence of a few schemes on u(x,0) = sin(pi x - sin(pi x)/pi), t = 2.

#include <cstdio>

#include "mopweno/mopweno.hpp"

int main() {
  using namespace mopweno;
  for (const char* name : {"weno-js", "weno-m", "mop-weno-m"}) {
    std::printf("%s\n", name);
    double prev = 0.0;
    for (int n : {40, 80, 160}) {
      AdvectionProblem p;
      p.ic = InitialCondition::sin_sin;
      p.n_cells = n;
      p.t_end = 2.0;
      const auto r = solve_advection(p, parse_scheme(name));
      if (prev > 0.0)
        std::printf("  N=%4d  Linf=%.4e  order=%.2f\n", n, r.errors.linf, convergence_order(prev, r.errors.linf));
      else
        std::printf("  N=%4d  Linf=%.4e\n", n, r.errors.linf);
      prev = r.errors.linf;
    }
  }
}
