// Free-group words over numbered generators.
//
// A word is a sequence of nonzero ints: +g stands for the generator g,
// -g for its inverse.  Generators are numbered from 1 and come in pairs:
// generator 2j-1 prints as "j" and generator 2j prints as "j'" (the two
// strands owned by line j in the geometric picture downstream).
//
// Besides the usual free-group operations this header provides equality
// of defining relators up to cyclic rotation and inversion, which is the
// natural equivalence when comparing presentations: a relator, its
// inverse, and any cyclic shift all impose the same relation.

#pragma once

#include <string>
#include <vector>

namespace galcov {

using Word = std::vector<int>;

// Free reduction: cancel adjacent x x^-1 pairs until none remain.
Word reduced(Word w);

Word inverse_word(const Word& w);

// Reduced concatenation a * b.
Word multiply(const Word& a, const Word& b);

// w^e for any integer e (negative exponents invert).
Word power_word(const Word& w, int e);

// c^-1 * x * c, reduced.
Word conjugated_word(const Word& x, const Word& c);

// Cyclic reduction: freely reduce, then strip matching first/last letters.
Word cyclically_reduced(Word w);

// True when a and b define the same relation: after cyclic reduction, b
// is a cyclic rotation of a or of a^-1.
bool relator_equivalent(const Word& a, const Word& b);

// Apply a homomorphism given by generator images: images[g] is the image
// of generator g (index 0 unused).  Inverse letters map to the inverse
// image.  The result is freely reduced.
Word substituted(const Word& w, const std::vector<Word>& images);

// Net exponent of generator g in w.
int exponent_sum(const Word& w, int g);

// Token rendering: generator 2j-1 -> "j", generator 2j -> "j'";
// inverse letters get the suffix "^-1".  word_text joins letter tokens
// with single spaces.
std::string gen_token(int g);
std::string letter_token(int signed_gen);
std::string word_text(const Word& w);

}  // namespace galcov
