// Plain vs order-preserving mapping of one weight triple.

#include <cstdio>

#include "mopweno/mopweno.hpp"

int main() {
  using namespace mopweno;
  const Triple w{0.15, 0.5, 0.14};
  const auto spec = default_spec(Family::m);
  const auto plain = plain_alphas(spec, w);
  const auto mop = mop_alphas(spec, w);
  std::printf("omega      : %.6f %.6f %.6f\n", w[0], w[1], w[2]);
  std::printf("WENO-M     : %.6f %.6f %.6f  non-OP=%d\n", plain[0], plain[1], plain[2], is_non_op(w, plain));
  std::printf("MOP-WENO-M : %.6f %.6f %.6f  non-OP=%d\n", mop[0], mop[1], mop[2], is_non_op(w, mop));
  for (double x : {0.05, 0.2, 0.25, 0.45, 0.7}) std::printf("minDist(%.2f) = %d\n", x, min_dist_index(x));
}
