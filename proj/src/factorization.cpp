#include "galcov/factorization.hpp"

#include <stdexcept>

namespace galcov {

namespace {

AtomicFactor atomic(int a, int b, int pow, Side side, BraidWord conj,
                    const std::string& tag, int index) {
  AtomicFactor f;
  f.a = a;
  f.b = b;
  f.power = pow;
  f.side = side;
  f.conj = std::move(conj);
  f.tag = tag + "#" + std::to_string(index);
  return f;
}

}  // namespace

std::vector<AtomicFactor> expand_factor(const Factor& f) {
  std::vector<AtomicFactor> out;
  switch (f.kind) {
    case FactorKind::branch: {
      out.push_back(atomic(f.first[0], f.second[0], 1, f.side, f.conj, f.tag, 1));
      break;
    }
    case FactorKind::cusp: {
      // Core = (single operand, lower strand of the pair operand); the
      // three copies sweep the pair with nothing, Z(pair), Z(pair)^-1.
      const bool point_first = f.first.size() == 1;
      const int single = point_first ? f.first[0] : f.second[0];
      const std::vector<int>& pair = point_first ? f.second : f.first;
      const int lo = std::min(pair[0], pair[1]);
      const int hi = std::max(pair[0], pair[1]);
      const int ca = std::min(single, lo);
      const int cb = std::max(single, lo);
      const BraidWord swap = half_twist(lo, hi);
      out.push_back(atomic(ca, cb, 3, f.side, f.conj, f.tag, 1));
      out.push_back(atomic(ca, cb, 3, f.side, multiply(swap, f.conj), f.tag, 2));
      out.push_back(atomic(ca, cb, 3, f.side, multiply(inverse(swap), f.conj), f.tag, 3));
      break;
    }
    case FactorKind::node: {
      if (f.first.size() == 2 && f.second.size() == 2) {
        // Quad (i i'; j j').
        const int i = f.first[0], ip = f.first[1];
        const int j = f.second[0], jp = f.second[1];
        out.push_back(atomic(ip, jp, 2, f.side, f.conj, f.tag, 1));
        out.push_back(atomic(i, jp, 2, f.side, f.conj, f.tag, 2));
        out.push_back(atomic(ip, j, 2, f.side, f.conj, f.tag, 3));
        out.push_back(atomic(i, j, 2, f.side, f.conj, f.tag, 4));
      } else if (f.first.size() == 1) {
        // Point-first (i; j j').
        const int i = f.first[0];
        out.push_back(atomic(i, f.second[0], 2, f.side, f.conj, f.tag, 1));
        out.push_back(atomic(i, f.second[1], 2, f.side, f.conj, f.tag, 2));
      } else if (f.side == Side::below) {
        // Pair-first (j j'; k), descending like the quad.
        out.push_back(atomic(f.first[1], f.second[0], 2, f.side, f.conj, f.tag, 1));
        out.push_back(atomic(f.first[0], f.second[0], 2, f.side, f.conj, f.tag, 2));
      } else {
        // Above-axis pair (j j'; k').  The pair of lines (j, k) is far
        // apart; the above-axis path is realized below the axis after
        // transporting by D_j = full_twist(strands of lines j..k-1)
        // * Z(j,j')^-2 * Z(k,k')^-2, which carries x_j, x_j' to their
        // conjugates by the descending chain of lines j+1..k-1 and x_k'
        // to x_k^-1 x_k' x_k.
        const int j_line = (f.first[0] + 1) / 2;
        const int k_line = f.second[0] / 2;
        std::vector<int> span;
        for (int s = strand_of(j_line); s <= strand_of_primed(k_line - 1); ++s)
          span.push_back(s);
        BraidWord d = full_twist_word(span);
        d = multiply(d, power(half_twist(f.first[0], f.first[1]), -2));
        d = multiply(d, power(half_twist(strand_of(k_line), strand_of_primed(k_line)), -2));
        out.push_back(atomic(f.first[1], f.second[0], 2, f.side, multiply(d, f.conj), f.tag, 1));
        out.push_back(atomic(f.first[0], f.second[0], 2, f.side, multiply(d, f.conj), f.tag, 2));
      }
      break;
    }
  }
  return out;
}

std::vector<AtomicFactor> expand(const Factorization& fs) {
  std::vector<AtomicFactor> out;
  for (const Factor& f : fs) {
    auto part = expand_factor(f);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Factorization line_factors(int k) {
  if (k < 2) throw std::invalid_argument("line_factors: need k >= 2");
  Factorization out;
  const std::string prefix = "L" + std::to_string(k);
  const std::vector<int> pair_k1 = {strand_of(k - 1), strand_of_primed(k - 1)};

  // Cusps with the adjacent line k-1.
  Factor cusp;
  cusp.kind = FactorKind::cusp;
  cusp.first = pair_k1;
  cusp.second = {strand_of(k)};
  cusp.power = 3;
  cusp.tag = prefix + ".cusp";
  out.push_back(cusp);

  // Below-axis nodes with the far lines j = 1..k-2.  The factor for
  // line j is conjugated by the inverse compound twists of the lines
  // between j and the cusp pair.
  for (int j = 1; j <= k - 2; ++j) {
    Factor node;
    node.kind = FactorKind::node;
    node.first = {strand_of(j), strand_of_primed(j)};
    node.second = {strand_of(k)};
    node.power = 2;
    for (int t = j + 1; t <= k - 2; ++t) {
      node.conj = multiply(
          node.conj,
          paired_twist_word({strand_of(t), strand_of_primed(t)}, {strand_of(k)}, -1));
    }
    node.tag = prefix + ".node" + std::to_string(j);
    out.push_back(node);
  }

  // Above-axis nodes with the far lines.
  for (int j = 1; j <= k - 2; ++j) {
    Factor node;
    node.kind = FactorKind::node;
    node.first = {strand_of(j), strand_of_primed(j)};
    node.second = {strand_of_primed(k)};
    node.power = 2;
    node.side = Side::above;
    node.tag = prefix + ".node" + std::to_string(j) + "b";
    out.push_back(node);
  }

  // Branch point of line k.
  Factor branch;
  branch.kind = FactorKind::branch;
  branch.first = {strand_of(k)};
  branch.second = {strand_of_primed(k)};
  branch.power = 1;
  branch.conj = paired_twist_word(pair_k1, {strand_of(k)}, 1);
  branch.tag = prefix + ".branch";
  out.push_back(branch);
  return out;
}

namespace {

// The explicit three-line base chain.
Factorization base_chain() {
  Factorization out;
  const BraidWord w12 = paired_twist_word({strand_of_primed(1)},
                                          {strand_of(2), strand_of_primed(2)}, 1);
  const BraidWord w23 = paired_twist_word({strand_of(2), strand_of_primed(2)},
                                          {strand_of(3)}, 1);

  Factor c12;
  c12.kind = FactorKind::cusp;
  c12.first = {strand_of_primed(1)};
  c12.second = {strand_of(2), strand_of_primed(2)};
  c12.power = 3;
  c12.tag = "B3.cusp12";
  out.push_back(c12);

  Factor b1;
  b1.kind = FactorKind::branch;
  b1.first = {strand_of(1)};
  b1.second = {strand_of_primed(1)};
  b1.power = 1;
  b1.conj = w12;
  b1.tag = "B3.branch1";
  out.push_back(b1);

  Factor c23;
  c23.kind = FactorKind::cusp;
  c23.first = {strand_of(2), strand_of_primed(2)};
  c23.second = {strand_of(3)};
  c23.power = 3;
  c23.conj = w12;
  c23.tag = "B3.cusp23";
  out.push_back(c23);

  Factor b3;
  b3.kind = FactorKind::branch;
  b3.first = {strand_of(3)};
  b3.second = {strand_of_primed(3)};
  b3.power = 1;
  b3.conj = multiply(w23, w12);
  b3.tag = "B3.branch3";
  out.push_back(b3);

  Factor quad;
  quad.kind = FactorKind::node;
  quad.first = {strand_of(1), strand_of_primed(1)};
  quad.second = {strand_of(3), strand_of_primed(3)};
  quad.power = 2;
  quad.tag = "B3.quad13";
  out.push_back(quad);
  return out;
}

}  // namespace

Factorization chain_factors(int m) {
  if (m < 3) throw std::invalid_argument("chain_factors: need m >= 3");
  if (m == 3) return base_chain();
  Factorization out = line_factors(m);
  const BraidWord lift = paired_twist_word(
      {strand_of(m - 1), strand_of_primed(m - 1)}, {strand_of(m)}, 1);
  Factorization tail = chain_factors(m - 1);
  for (Factor& f : tail) {
    f.conj = multiply(f.conj, lift);
    out.push_back(std::move(f));
  }
  return out;
}

Factorization full_factorization(int k) {
  if (k < 4) throw std::invalid_argument("full_factorization: need k >= 4");
  const int n = k - 1;
  Factorization out;
  for (int j = 1; j <= n; ++j) {
    Factor v;
    v.kind = FactorKind::branch;
    v.first = {strand_of(j)};
    v.second = {strand_of_primed(j)};
    v.power = 1;
    v.tag = "vertex" + std::to_string(j);
    out.push_back(v);
  }
  Factorization chain = chain_factors(n);
  out.insert(out.end(), std::make_move_iterator(chain.begin()),
             std::make_move_iterator(chain.end()));
  return out;
}

long long exponent_sum(const Factorization& fs) {
  long long total = 0;
  for (const Factor& f : fs) total += static_cast<long long>(f.power) * f.power;
  return total;
}

std::string factorization_text(const std::vector<AtomicFactor>& fs) {
  std::string out;
  for (const AtomicFactor& f : fs) {
    out += '[';
    out += f.tag;
    out += "] Z(";
    out += gen_token(f.a);
    out += ',';
    out += gen_token(f.b);
    out += ") side=";
    out += (f.side == Side::below) ? "below" : "above";
    out += " pow=";
    out += std::to_string(f.power);
    out += " conj=";
    out += braid_text(f.conj);
    out += '\n';
  }
  return out;
}

}  // namespace galcov
