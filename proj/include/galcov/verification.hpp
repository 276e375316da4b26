// End-to-end verification pipeline for the Galois-cover computation.
//
// For k planes it builds the braid monodromy factorization, extracts the
// branch-curve group presentation, forms the quotient G1 by the squares
// of the generators, checks the edge homomorphism onto S_k, measures
// |G1| by coset enumeration, and concludes pi_1(X_Gal) = 1 exactly when
// the verified surjection G1 -> S_k has trivial kernel (|G1| = k!).
// Chern data for the cover is attached to the report.

#pragma once

#include <optional>
#include <string>

#include "galcov/coset_enumeration.hpp"
#include "galcov/invariants.hpp"

namespace galcov {

struct VerificationReport {
  int k = 0;
  int d = 0;
  int m = 0;
  int factor_count = 0;    // atomic half-twist factors in the factorization
  int relator_count = 0;   // relators of the branch-curve group G
  long long exponent_sum = 0;
  std::optional<long long> g1_order;  // empty if the coset budget overflowed
  BigInt expected_order;              // k!
  bool hom_verified = false;
  bool surjective = false;
  bool isomorphic = false;
  bool pi1_trivial = false;
  BigInt c1_squared;
  std::string classification;
  long long max_cosets_used = 0;  // peak live cosets during enumeration
  long long runtime_ms = 0;
};

struct VerifyOptions {
  std::size_t max_cosets = 1000000;
  Strategy strategy = Strategy::relator_scan;
  bool simplify = true;  // Tietze-simplify G1 before enumerating
};

// Runs the full pipeline for k >= 4 planes.
VerificationReport verify_simply_connected(int k, const VerifyOptions& opt);

// Serializes the report with a fixed field set and order.  g1_order is
// null when the enumeration overflowed; expected_order and c1_squared
// are decimal strings.
std::string report_json(const VerificationReport& r);

}  // namespace galcov
