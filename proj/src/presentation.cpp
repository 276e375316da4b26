#include "galcov/presentation.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace galcov {

Word relator_of_atomic(const AtomicFactor& f) {
  const Word a = apply_braid(f.conj, Word{f.a});
  const Word b = apply_braid(f.conj, Word{f.b});
  Word r;
  switch (f.power) {
    case 1:
      r = multiply(a, inverse_word(b));
      break;
    case 2:
      r = multiply(multiply(a, b), multiply(inverse_word(a), inverse_word(b)));
      break;
    case 3:
      r = multiply(multiply(multiply(a, b), a),
                   multiply(inverse_word(b), multiply(inverse_word(a), inverse_word(b))));
      break;
    default:
      throw std::invalid_argument("relator_of_atomic: power must be 1, 2, or 3");
  }
  return cyclically_reduced(r);
}

Word projective_relator(int n) {
  Word w;
  w.reserve(2 * static_cast<size_t>(n));
  for (int j = n; j >= 1; --j) {
    w.push_back(strand_of_primed(j));
    w.push_back(strand_of(j));
  }
  return w;
}

Presentation presentation_G(int k) {
  const int n = k - 1;
  Presentation p;
  p.num_gens = 2 * n;
  p.names.resize(p.num_gens + 1);
  for (int g = 1; g <= p.num_gens; ++g) p.names[g] = gen_token(g);
  int dropped = 0;
  for (const AtomicFactor& f : expand(full_factorization(k))) {
    Word r = relator_of_atomic(f);
    if (r.empty()) {
      ++dropped;
      continue;
    }
    p.relators.push_back(std::move(r));
    p.tags.push_back(f.tag);
  }
  p.relators.push_back(projective_relator(n));
  p.tags.push_back("projective");
  if (dropped > 0)
    std::fprintf(stderr, "[info] presentation for k=%d: dropped %d empty relators\n", k,
                 dropped);
  return p;
}

Presentation presentation_G1(const Presentation& g) {
  Presentation p = g;
  for (int gen = 1; gen <= p.num_gens; ++gen) {
    p.relators.push_back(Word{gen, gen});
    p.tags.push_back("square." + p.names[gen]);
  }
  return p;
}

Presentation presentation_G1(int k) { return presentation_G1(presentation_G(k)); }

std::string presentation_text(const Presentation& p) {
  // Letters are rendered through the presentation's own name table, so
  // the export stays correct after simplification renumbers generators.
  std::string out = "gens:";
  for (int g = 1; g <= p.num_gens; ++g) {
    out += ' ';
    out += p.names[g];
  }
  out += '\n';
  for (const Word& r : p.relators) {
    for (size_t i = 0; i < r.size(); ++i) {
      if (i) out += ' ';
      out += p.names[std::abs(r[i])];
      if (r[i] < 0) out += "^-1";
    }
    out += '\n';
  }
  return out;
}

}  // namespace galcov
