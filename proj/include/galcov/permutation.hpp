// Permutations on points 1..d, the edge homomorphism onto the symmetric
// group, and permutation-group order via a stabilizer chain.
//
// The degenerated surface is a chain of k planes; line j is the common
// edge of planes j and j+1, so both of its generators map to the
// transposition (j, j+1) in S_k.  Checking that every relator of a
// presentation maps to the identity verifies the homomorphism; the order
// of the image group (computed independently of any coset enumeration by
// a Schreier-style orbit/stabilizer recursion) certifies surjectivity
// when it equals k!.

#pragma once

#include <cstdint>
#include <vector>

#include "galcov/presentation.hpp"

namespace galcov {

// images of 1..d at indices 1..d; index 0 is unused and holds 0.
using Perm = std::vector<int>;

Perm identity_perm(int d);
Perm transposition(int d, int i, int j);
bool is_identity(const Perm& p);
Perm inverse_perm(const Perm& p);

// Apply p first, then q.
Perm compose(const Perm& p, const Perm& q);

// Image of a free-group word under generator images (index g = image of
// generator g; index 0 unused).
Perm evaluate_word(const Word& w, const std::vector<Perm>& images, int d);

// Order of the group generated by gens, by recursive orbit/stabilizer
// computation with Schreier generators.
std::uint64_t permutation_group_order(const std::vector<Perm>& gens, int d);

// Generator images for k planes: generators 2j-1 and 2j (the loops of
// line j) both map to the transposition (j, j+1) in S_k.  Entry g is the
// image of generator g, g = 1..2(k-1).
std::vector<Perm> edge_homomorphism(int k);

struct HomCheck {
  bool ok = true;
  std::vector<std::size_t> failing;  // indices of relators not mapping to id
};

HomCheck verify_homomorphism(const Presentation& p, const std::vector<Perm>& images,
                             int d);

std::uint64_t factorial_u64(int n);  // n <= 20

}  // namespace galcov
