#include "galcov/abelianization.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "galcov/words.hpp"

namespace galcov {
namespace {

using Matrix = std::vector<std::vector<long long>>;

long long checked_mul(long long a, long long b) {
  long long r = 0;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("abelianization: matrix entry overflow");
  return r;
}

long long checked_sub(long long a, long long b) {
  long long r = 0;
  if (__builtin_sub_overflow(a, b, &r))
    throw std::overflow_error("abelianization: matrix entry overflow");
  return r;
}

// row_i -= q * row_t
void row_op(Matrix& m, std::size_t i, std::size_t t, long long q) {
  for (std::size_t j = 0; j < m[i].size(); ++j)
    m[i][j] = checked_sub(m[i][j], checked_mul(q, m[t][j]));
}

// col_j -= q * col_t
void col_op(Matrix& m, std::size_t j, std::size_t t, long long q) {
  for (std::size_t i = 0; i < m.size(); ++i)
    m[i][j] = checked_sub(m[i][j], checked_mul(q, m[i][t]));
}

}  // namespace

std::vector<long long> abelianization(const Presentation& p) {
  const std::size_t rows = p.relators.size();
  const std::size_t cols = static_cast<std::size_t>(p.num_gens);
  Matrix m(rows, std::vector<long long>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (int g = 1; g <= p.num_gens; ++g)
      m[i][static_cast<std::size_t>(g - 1)] = exponent_sum(p.relators[i], g);

  std::vector<long long> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Locate a nonzero entry of minimal magnitude in the trailing block.
    std::size_t pi = t;
    std::size_t pj = t;
    long long best = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 && (best == 0 || std::llabs(m[i][j]) < best)) {
          best = std::llabs(m[i][j]);
          pi = i;
          pj = j;
        }
    if (best == 0) break;
    std::swap(m[t], m[pi]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        row_op(m, i, t, m[i][t] / m[t][t]);
        if (m[i][t] != 0) {  // the remainder is a smaller pivot
          std::swap(m[t], m[i]);
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        col_op(m, j, t, m[t][j] / m[t][t]);
        if (m[t][j] != 0) {
          for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
          dirty = true;
        }
      }
    }

    // Keep the divisibility chain: if the pivot misses an entry of the
    // trailing block, fold that row into row t and redo the clearing.
    bool adjusted = false;
    for (std::size_t i = t + 1; i < rows && !adjusted; ++i)
      for (std::size_t j = t + 1; j < cols && !adjusted; ++j)
        if (m[i][j] % m[t][t] != 0) {
          row_op(m, t, i, -1);  // row_t += row_i
          adjusted = true;
        }
    if (adjusted) continue;

    diag.push_back(std::llabs(m[t][t]));
    ++t;
  }

  std::vector<long long> out;
  for (long long d : diag)
    if (d != 1) out.push_back(d);
  for (std::size_t j = t; j < cols; ++j) out.push_back(0);
  return out;
}

}  // namespace galcov
