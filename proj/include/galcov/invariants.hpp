// Numerical invariants of the Galois cover of a chain-of-planes
// degeneration: the projection degrees and the Chern number c1^2.
//
// For k planes the generic projection has degree d = k, the branch
// curve has degree m = 2(k-1), and c1^2 = d! * (m-6)^2 / 4.  All
// arithmetic is exact (big integer); c1^2 > 0 classifies the cover as
// a surface of general type.

#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace galcov {

using BigInt = boost::multiprecision::cpp_int;

struct DegenerationParams {
  int d;        // degree of the generic projection (= number of planes k)
  int m;        // degree of the branch curve (= 2 * n_lines)
  int n_lines;  // lines in the intersection arrangement (= k - 1)
};

struct ChernData {
  int d = 0;
  int m = 0;
  BigInt c1_squared;
  std::string classification;  // "general_type" or "not_determined"
};

// Parameters of the degeneration with k planes (k >= 3).
DegenerationParams degeneration_params(int k);

// d! * (m-6)^2 / 4, exactly.  Requires d >= 1, m >= 0.
BigInt chern_c1sq(int d, int m);

// "general_type" iff c1_squared > 0, else "not_determined".
std::string classify(const BigInt& c1_squared);

// Bundles chern_c1sq and classify for the projection data of k planes.
ChernData chern_data(int k);

// d! for d >= 0.
BigInt factorial_big(int d);

}  // namespace galcov
