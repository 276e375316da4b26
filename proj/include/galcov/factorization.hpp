// Braid monodromy factorization of the branch curve of a chain-of-lines
// degeneration.
//
// The degenerated surface is a union of k planes meeting along a chain
// of n = k-1 lines; line j owns the strand pair (2j-1, 2j), printed j
// and j'.  After regeneration every singular fiber of the projected
// branch curve contributes one factor: a branch point gives a half-twist
// (power 1), a node a full twist (power 2), and a cusp a triple
// half-twist (power 3), each between a strand or strand pair and
// possibly conjugated by a braid word.
//
// Assembly is recursive.  The factors contributed by the highest line k
// cover its cusps with line k-1, its nodes with the far lines 1..k-2
// (once below and once above the axis), and its branch point; the
// remaining factors are those of lines 1..k-1, each conjugated by the
// compound twist pairing lines k-1 and k.  The three-line chain is the
// explicit base case.  The full factorization for k planes prepends one
// branch factor per line for the regenerated vertices.
//
// Compound factors expand into atomic factors (a single conjugated
// half-twist power each):
//
//   node (i; j j')     ->  (i,j), (i,j')
//   node (j j'; k)     ->  (j',k), (j,k)
//   node (i i'; j j')  ->  (i',j'), (i,j'), (i',j), (i,j)
//   cusp               ->  its core three times, conjugated by nothing,
//                          by Z(pair), and by Z(pair)^-1
//   above node (j j'; k') -> (j',k'), (j,k'), both conjugated by the
//                          transport word D_j that carries the below-axis
//                          frame across lines j..k-1 (see expand_factor)
//
// with every atomic inheriting the compound's outer conjugator on the
// right.

#pragma once

#include <string>
#include <vector>

#include "galcov/braid.hpp"

namespace galcov {

enum class FactorKind { branch, node, cusp };

// A compound factor: a power of a (possibly compound) half-twist between
// the strand groups `first` and `second`, conjugated by `conj`.
struct Factor {
  FactorKind kind = FactorKind::branch;
  std::vector<int> first;   // strand positions, operand order as printed
  std::vector<int> second;
  int power = 1;            // 1 branch, 2 node, 3 cusp
  Side side = Side::below;
  BraidWord conj;
  std::string tag;
};

using Factorization = std::vector<Factor>;

// One conjugated power of a single half-twist.
struct AtomicFactor {
  int a = 0;
  int b = 0;
  int power = 1;
  Side side = Side::below;
  BraidWord conj;
  std::string tag;
};

std::vector<AtomicFactor> expand_factor(const Factor& f);
std::vector<AtomicFactor> expand(const Factorization& fs);

// Factors contributed by line k against lines 1..k-1 (k >= 2): the cusp
// family with line k-1, the below- and above-axis node families with
// lines 1..k-2, and the branch factor of line k.
Factorization line_factors(int k);

// All factors of the chain of lines 1..m (m >= 3).
Factorization chain_factors(int m);

// Full factorization for k planes (k >= 4): one vertex branch factor per
// line, then chain_factors(k-1).
Factorization full_factorization(int k);

// Total twisting degree: each compound factor contributes power^2
// (branch 1, node 4, cusp 9).
long long exponent_sum(const Factorization& fs);

// Deterministic export, one atomic factor per line:
//   [tag] Z(a,b) side=below|above pow=P conj=<letter list>
std::string factorization_text(const std::vector<AtomicFactor>& fs);

}  // namespace galcov
