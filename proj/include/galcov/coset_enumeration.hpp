// Coset enumeration over the trivial subgroup (Todd-Coxeter).
//
// Two interchangeable strategies sit behind one interface:
//
//   relator_scan     HLT-style: scan every relator at every coset,
//                    defining new cosets to complete scans, with a
//                    lookahead-and-compact phase when the live-coset
//                    budget is hit.
//   definition_eager Felsch-style: define one table entry at a time and
//                    exhaustively propagate deductions through all
//                    relator rotations before the next definition.
//
// Both share the same table and coincidence machinery (union-find over
// coset numbers with queued row merging).  When the table closes, the
// number of live cosets is the order of the presented group.  The
// enumeration reports overflow when it cannot proceed without exceeding
// max_cosets live cosets; overflow signals an exhausted budget, not a
// mathematical failure.

#pragma once

#include "galcov/presentation.hpp"

namespace galcov {

enum class Strategy { relator_scan, definition_eager };

struct EnumerationResult {
  bool completed = false;   // false = budget overflow
  long long order = 0;      // valid when completed
  long long max_live = 0;   // peak live cosets over the run
  long long total_defined = 0;
};

EnumerationResult enumerate_cosets(const Presentation& p, long long max_cosets,
                                   Strategy strategy = Strategy::relator_scan);

}  // namespace galcov
