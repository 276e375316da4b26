// Braid words as sequences of signed half-twists between strand pairs.
//
// A letter Z(a,b) with strand positions a < b is the positive half-twist
// exchanging strands a and b along a path running below the real axis;
// Zbar(a,b) takes the path above the axis.  A braid word acts on the
// free group with one generator x_p per strand position; the leftmost
// letter of a word acts first.
//
// Calibrated letter action (frozen; the downstream monodromy relators
// depend on it, see the expected-relator tests):
//
//   Z(a,b):     x_a -> x_b              x_b -> x_b x_a x_b^-1
//   Z(a,b)^-1:  x_a -> x_a^-1 x_b x_a   x_b -> x_a
//   Zbar(a,b):  x_a -> x_a x_b x_a^-1   x_b -> x_a
//   Zbar^-1:    x_a -> x_b              x_b -> x_b^-1 x_a x_b
//
// and every other generator is fixed, including the strands between a
// and b.  The above-axis rule is the mirror image of the below-axis one:
// an arc above the axis misses the below-axis tails of the intermediate
// loops, so its twist also only touches x_a and x_b.
//
// The header also builds the two composite words used as conjugators by
// the factorization layer: the full twist of an ordered strand set, and
// the degree-2 compound twist of two strand groups.

#pragma once

#include "galcov/words.hpp"

namespace galcov {

enum class Side { below, above };

struct Twist {
  int a = 0;
  int b = 0;
  int sign = 1;  // +1 for the half-twist, -1 for its inverse
  Side side = Side::below;

  bool operator==(const Twist&) const = default;
};

using BraidWord = std::vector<Twist>;

// Strand positions owned by line j: (2j-1, 2j), printed "j" and "j'".
int strand_of(int line);
int strand_of_primed(int line);

// Single positive half-twist between strands a and b (normalized a < b).
BraidWord half_twist(int a, int b, Side side = Side::below);

BraidWord inverse(const BraidWord& w);
BraidWord power(const BraidWord& w, int e);
BraidWord multiply(const BraidWord& a, const BraidWord& b);

// c^-1 * x * c.
BraidWord conjugated(const BraidWord& x, const BraidWord& c);

// Image of the free-group word w under the action of c (leftmost letter
// of c applied first), freely reduced.
Word apply_braid(const BraidWord& c, Word w);

// Generator images of the action of c: entry g holds the image of x_g,
// for g = 1..num_strands (entry 0 unused).
std::vector<Word> braid_action(const BraidWord& c, int num_strands);

// Permutation of strand positions induced by c: entry p is where the
// strand starting at position p ends (entry 0 unused).  Each letter
// contributes the transposition (a b), leftmost letter first.
std::vector<int> strand_permutation(const BraidWord& c, int num_strands);

// Full twist of the ordered strand set {s_1 < ... < s_m}: the chain word
// (Z(s_1,s_2) ... Z(s_{m-1},s_m))^m.  Its action conjugates each member
// by the descending product x_{s_m} ... x_{s_1} and fixes every other
// strand.  Empty for m <= 1.
BraidWord full_twist_word(const std::vector<int>& strands);

// Degree-2 compound twist of two strand groups, as a concrete word:
//
//   word = [ full_twist(first ∪ second) * full_twist(first)^-1 ]^sign
//
// with sign = +1 or -1.  For first = {p} a single strand this is the
// plain full twist of the union; for first = {p,q} a pair it is the
// "cabled" form whose action treats the pair as one fat strand.
BraidWord paired_twist_word(const std::vector<int>& first,
                            const std::vector<int>& second, int sign);

// Rendering: "Z(2,2')", "Zbar(1,4)^-1", ... with strands shown as line
// tokens.  braid_text joins letter tokens with single spaces.
std::string twist_token(const Twist& t);
std::string braid_text(const BraidWord& w);

}  // namespace galcov
