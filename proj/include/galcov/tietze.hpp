// Presentation simplification by Tietze transformations.
//
// The simplifier applies, to a fixed point, exactly these order- and
// isomorphism-preserving moves:
//
//   * free and cyclic reduction of every relator; empty relators drop;
//   * duplicate removal, where two relators count as equal when one is a
//     cyclic rotation of the other or of its inverse;
//   * generator elimination through length-1 and length-2 relators
//     (x = e, or y = x^{±1}); the candidate relator is chosen
//     deterministically as the lexicographically smallest eliminating
//     relator (length first, then letters ordered by generator number
//     with the positive letter before the inverse), and the later of its
//     two generators is the one eliminated;
//   * involution normalization: when x·x is a relator, other relators
//     rewrite x^-1 -> x and cancel adjacent x x pairs (cyclically);
//   * commuting-pair rewriting: when generators x < y are known to
//     commute (an x y x y relator between involutions, or an explicit
//     commutator relator), adjacent "x y" canonicalizes to "y x",
//     letting cancellations surface.
//
// Generator count never increases; surviving generators are renumbered
// consecutively and keep their names.

#pragma once

#include "galcov/presentation.hpp"

namespace galcov {

Presentation tietze_simplify(const Presentation& p);

}  // namespace galcov
