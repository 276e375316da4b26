#include "galcov/invariants.hpp"

#include <stdexcept>

namespace galcov {

DegenerationParams degeneration_params(int k) {
  if (k < 3)
    throw std::invalid_argument(
        "degeneration_params: need at least 3 planes, got k=" +
        std::to_string(k));
  return DegenerationParams{k, 2 * (k - 1), k - 1};
}

BigInt factorial_big(int d) {
  if (d < 0) throw std::invalid_argument("factorial_big: negative argument");
  BigInt f = 1;
  for (int i = 2; i <= d; ++i) f *= i;
  return f;
}

BigInt chern_c1sq(int d, int m) {
  if (d < 1) throw std::invalid_argument("chern_c1sq: need d >= 1");
  if (m < 0) throw std::invalid_argument("chern_c1sq: need m >= 0");
  const BigInt spread = m - 6;
  return factorial_big(d) * spread * spread / 4;
}

std::string classify(const BigInt& c1_squared) {
  return c1_squared > 0 ? "general_type" : "not_determined";
}

ChernData chern_data(int k) {
  const DegenerationParams p = degeneration_params(k);
  ChernData c;
  c.d = p.d;
  c.m = p.m;
  c.c1_squared = chern_c1sq(p.d, p.m);
  c.classification = classify(c.c1_squared);
  return c;
}

}  // namespace galcov
