// Abelianization of a finite presentation via integer normal form.
//
// The relation matrix has one row per relator holding generator exponent
// sums.  Diagonalizing it over the integers (Smith normal form, naive
// exact reduction with overflow checks — the matrices here are tiny)
// yields the elementary divisors of the abelianized group: divisors
// equal to 1 are dropped, and one 0 is reported per free rank.

#pragma once

#include <vector>

#include "galcov/presentation.hpp"

namespace galcov {

// Elementary divisors of the abelianization: nontrivial torsion divisors
// in divisibility order, then zeros for the free rank.
std::vector<long long> abelianization(const Presentation& p);

}  // namespace galcov
