#include "galcov/permutation.hpp"

#include <cstdlib>
#include <set>
#include <stdexcept>

namespace galcov {

Perm identity_perm(int d) {
  Perm p(static_cast<size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) p[i] = i;
  p[0] = 0;
  return p;
}

Perm transposition(int d, int i, int j) {
  Perm p = identity_perm(d);
  p[i] = j;
  p[j] = i;
  return p;
}

bool is_identity(const Perm& p) {
  for (size_t i = 1; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

Perm inverse_perm(const Perm& p) {
  Perm q(p.size());
  q[0] = 0;
  for (size_t i = 1; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
  return q;
}

Perm compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  r[0] = 0;
  for (size_t i = 1; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

Perm evaluate_word(const Word& w, const std::vector<Perm>& images, int d) {
  Perm acc = identity_perm(d);
  for (int s : w) {
    const Perm& img = images[static_cast<size_t>(std::abs(s))];
    acc = compose(acc, s > 0 ? img : inverse_perm(img));
  }
  return acc;
}

namespace {

// Orbit of point beta under gens, with a transversal u[p] satisfying
// u[p](beta) = p.  BFS in deterministic order.
void orbit_with_transversal(const std::vector<Perm>& gens, int d, int beta,
                            std::vector<int>& orbit, std::vector<Perm>& u) {
  u.assign(static_cast<size_t>(d) + 1, Perm{});
  orbit.clear();
  u[beta] = identity_perm(d);
  orbit.push_back(beta);
  for (size_t head = 0; head < orbit.size(); ++head) {
    const int p = orbit[head];
    for (const Perm& g : gens) {
      const int q = g[p];
      if (u[q].empty()) {
        u[q] = compose(u[p], g);
        orbit.push_back(q);
      }
    }
  }
}

std::uint64_t order_rec(const std::vector<Perm>& gens, int d) {
  // Find the first point moved by any generator.
  int beta = 0;
  for (int p = 1; p <= d && beta == 0; ++p)
    for (const Perm& g : gens)
      if (g[p] != p) {
        beta = p;
        break;
      }
  if (beta == 0) return 1;  // all generators are the identity

  std::vector<int> orbit;
  std::vector<Perm> u;
  orbit_with_transversal(gens, d, beta, orbit, u);

  // Schreier generators of the stabilizer of beta, deduplicated.
  std::set<Perm> seen;
  std::vector<Perm> stab;
  for (int p : orbit) {
    for (const Perm& g : gens) {
      Perm s = compose(compose(u[p], g), inverse_perm(u[g[p]]));
      if (!is_identity(s) && seen.insert(s).second) stab.push_back(std::move(s));
    }
  }
  return static_cast<std::uint64_t>(orbit.size()) * order_rec(stab, d);
}

}  // namespace

std::uint64_t permutation_group_order(const std::vector<Perm>& gens, int d) {
  std::vector<Perm> nontrivial;
  for (const Perm& g : gens)
    if (!is_identity(g)) nontrivial.push_back(g);
  return order_rec(nontrivial, d);
}

std::vector<Perm> edge_homomorphism(int k) {
  if (k < 2) throw std::invalid_argument("edge_homomorphism: need k >= 2");
  const int n = k - 1;
  std::vector<Perm> images(2 * static_cast<size_t>(n) + 1);
  for (int j = 1; j <= n; ++j) {
    images[strand_of(j)] = transposition(k, j, j + 1);
    images[strand_of_primed(j)] = transposition(k, j, j + 1);
  }
  return images;
}

HomCheck verify_homomorphism(const Presentation& p, const std::vector<Perm>& images,
                             int d) {
  HomCheck out;
  for (size_t i = 0; i < p.relators.size(); ++i) {
    if (!is_identity(evaluate_word(p.relators[i], images, d))) {
      out.ok = false;
      out.failing.push_back(i);
    }
  }
  return out;
}

std::uint64_t factorial_u64(int n) {
  if (n < 0 || n > 20) throw std::invalid_argument("factorial_u64: need 0 <= n <= 20");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace galcov
