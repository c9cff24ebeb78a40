// Test-only oracles, independent of the implementation paths they check.
#ifndef VERONESE_TESTS_ORACLES_HPP
#define VERONESE_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "veronese/gf2e.hpp"

namespace oracle {

using vrn::fe;
using vrn::Gf2e;

// All roots of alpha X^2 + beta X + gamma by evaluating every field element.
inline std::vector<fe> quadratic_roots_sweep(const Gf2e& F, fe a, fe b, fe c) {
  std::vector<fe> out;
  for (std::uint32_t x = 0; x < F.q(); ++x) {
    fe t = static_cast<fe>(x);
    fe v = F.add(F.add(F.mul(a, F.sq(t)), F.mul(b, t)), c);
    if (v == 0) out.push_back(t);
  }
  return out;
}

// All roots of theta^3 + theta + a by sweep.
inline std::vector<fe> depressed_cubic_roots_sweep(const Gf2e& F, fe a) {
  std::vector<fe> out;
  for (std::uint32_t x = 0; x < F.q(); ++x) {
    fe t = static_cast<fe>(x);
    fe v = F.add(F.add(F.mul(t, F.sq(t)), t), a);
    if (v == 0) out.push_back(t);
  }
  return out;
}

// All roots of X^3 + a1 X^2 + a2 X + a3 by sweep.
inline std::vector<fe> cubic_roots_sweep(const Gf2e& F, fe a1, fe a2, fe a3) {
  std::vector<fe> out;
  for (std::uint32_t x = 0; x < F.q(); ++x) {
    fe t = static_cast<fe>(x);
    fe v = F.add(F.add(F.add(F.mul(t, F.sq(t)), F.mul(a1, F.sq(t))), F.mul(a2, t)), a3);
    if (v == 0) out.push_back(t);
  }
  return out;
}

// Rank of a symmetric 3x3 matrix via 2x2/3x3 minors (no elimination).
inline int sym_rank_minors(const Gf2e& F, fe a, fe b, fe c, fe d, fe e, fe f) {
  // M = [[a,b,c],[b,d,e],[c,e,f]]
  fe det = F.add(F.add(F.mul(a, F.mul(d, f)), F.mul(a, F.sq(e))),
                 F.add(F.mul(f, F.sq(b)), F.mul(d, F.sq(c))));
  if (det != 0) return 3;
  bool minor2 = F.add(F.mul(a, d), F.sq(b)) != 0 || F.add(F.mul(a, f), F.sq(c)) != 0 ||
                F.add(F.mul(d, f), F.sq(e)) != 0 || F.add(F.mul(a, e), F.mul(b, c)) != 0 ||
                F.add(F.mul(b, e), F.mul(c, d)) != 0 || F.add(F.mul(b, f), F.mul(c, e)) != 0;
  if (minor2) return 2;
  return (a | b | c | d | e | f) ? 1 : 0;
}

}  // namespace oracle

#endif
