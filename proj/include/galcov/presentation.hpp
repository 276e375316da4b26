// Fundamental-group presentations read off a braid monodromy
// factorization.
//
// For a branch curve of degree 2n the complement group G is generated by
// one loop per strand position, written 1, 1', 2, 2', ..., n, n'.  Every
// atomic factor contributes one defining relator through the images
// A = conj(x_a), B = conj(x_b) of its endpoints under its conjugator:
//
//   branch (power 1):  A B^-1              (the two loops agree)
//   node   (power 2):  A B A^-1 B^-1       (the loops commute)
//   cusp   (power 3):  A B A B^-1 A^-1 B^-1  (the triple relation)
//
// Closing the plane at infinity adds the projective relator
// x_n' x_n ... x_1' x_1.  The quotient G1 adds the square of every
// generator.

#pragma once

#include <string>
#include <vector>

#include "galcov/factorization.hpp"
#include "galcov/words.hpp"

namespace galcov {

struct Presentation {
  int num_gens = 0;
  std::vector<std::string> names;  // names[g] for g = 1..num_gens ([0] unused)
  std::vector<Word> relators;
  std::vector<std::string> tags;   // parallel to relators
};

// The defining relator of one atomic factor, freely and cyclically
// reduced.
Word relator_of_atomic(const AtomicFactor& f);

// x_n' x_n ... x_1' x_1 for n lines.
Word projective_relator(int n);

// Presentation of the complement group G for k planes: the relators of
// every atomic factor of full_factorization(k) in order, then the
// projective relator.  Relators that reduce to the empty word are
// dropped (a diagnostic count goes to the log).
Presentation presentation_G(int k);

// G1 = G with the square of every generator added.
Presentation presentation_G1(const Presentation& g);
Presentation presentation_G1(int k);

// Deterministic text export: line 1 is "gens: <name> <name> ...", then
// one relator per line as space-separated letter tokens ("4 5 4 5^-1
// 4^-1 5^-1"), in presentation order, LF line endings.
std::string presentation_text(const Presentation& p);

}  // namespace galcov
