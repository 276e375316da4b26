#include "galcov/tietze.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <vector>

namespace galcov {

namespace {

struct Rel {
  Word w;
  std::string tag;
};

// Letter order for tie-breaking: by generator number, positive before
// inverse.
bool letter_less(int a, int b) {
  const int ga = std::abs(a), gb = std::abs(b);
  if (ga != gb) return ga < gb;
  return a > 0 && b < 0;
}

bool word_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return letter_less(a[i], b[i]);
  }
  return false;
}

// Canonical key of a relator class: the least rotation of w or of its
// inverse under plain integer comparison (used only for deduplication).
Word canonical_key(const Word& w) {
  const Word inv = inverse_word(w);
  Word best;
  bool have = false;
  for (const Word* v : {&w, &inv}) {
    const size_t n = v->size();
    for (size_t off = 0; off < std::max<size_t>(n, 1); ++off) {
      Word rot;
      rot.reserve(n);
      for (size_t i = 0; i < n; ++i) rot.push_back((*v)[(off + i) % n]);
      if (!have || std::lexicographical_compare(rot.begin(), rot.end(),
                                                best.begin(), best.end())) {
        best = std::move(rot);
        have = true;
      }
    }
  }
  return best;
}

bool is_square(const Word& w) { return w.size() == 2 && w[0] == w[1] && w[0] > 0; }

// Cyclic deletion of adjacent equal involution letters (x x -> e).
bool delete_involution_pairs(Word& w, const std::set<int>& invs) {
  bool changed = false;
  bool again = true;
  while (again && w.size() >= 2) {
    again = false;
    for (size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] > 0 && w[i] == w[i + 1] && invs.count(w[i])) {
        w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
        changed = again = true;
        break;
      }
    }
    if (!again && w.size() >= 2 && w.front() > 0 && w.front() == w.back() &&
        invs.count(w.front())) {
      w.erase(w.begin());
      w.pop_back();
      changed = again = true;
    }
  }
  return changed;
}

}  // namespace

Presentation tietze_simplify(const Presentation& p) {
  std::vector<Rel> rels;
  rels.reserve(p.relators.size());
  for (size_t i = 0; i < p.relators.size(); ++i)
    rels.push_back(
        {p.relators[i], i < p.tags.size() ? p.tags[i] : std::string("r" + std::to_string(i))});
  std::vector<bool> alive(static_cast<size_t>(p.num_gens) + 1, true);

  auto normalize = [&]() {
    bool outer = true;
    while (outer) {
      outer = false;
      // Reduce, drop empties.
      std::vector<Rel> next;
      for (Rel& r : rels) {
        Word w = cyclically_reduced(r.w);
        if (w.empty()) continue;
        // A square stored as (x^-1)^2 is the same relation as x^2.
        if (w.size() == 2 && w[0] == w[1] && w[0] < 0) w = {-w[0], -w[0]};
        next.push_back({std::move(w), std::move(r.tag)});
      }
      rels = std::move(next);

      // Involutions and commuting pairs currently on record.
      std::set<int> invs;
      for (const Rel& r : rels)
        if (is_square(r.w)) invs.insert(r.w[0]);
      std::set<std::pair<int, int>> commuting;  // (small, large)
      for (const Rel& r : rels) {
        const Word& w = r.w;
        if (w.size() != 4) continue;
        const int a = std::abs(w[0]), b = std::abs(w[1]);
        if (a == b) continue;
        // x y x y between involutions, in any signs after normalization.
        if (w[0] > 0 && w[1] > 0 && w[2] == w[0] && w[3] == w[1] && invs.count(w[0]) &&
            invs.count(w[1]))
          commuting.insert({std::min(a, b), std::max(a, b)});
        // Explicit commutator x y x^-1 y^-1.
        if (std::abs(w[2]) == a && std::abs(w[3]) == b && w[2] == -w[0] && w[3] == -w[1])
          commuting.insert({std::min(a, b), std::max(a, b)});
      }

      // A relator that is itself the record of a commuting pair must not
      // be rewritten with that pair (it would erase itself and lose the
      // relation), mirroring the square exemption below.
      auto is_commuting_witness = [&](const Word& w) {
        if (w.size() != 4) return false;
        const int a = std::abs(w[0]), b = std::abs(w[1]);
        if (a == b) return false;
        if (w[0] > 0 && w[1] > 0 && w[2] == w[0] && w[3] == w[1] &&
            invs.count(w[0]) && invs.count(w[1]))
          return true;
        return w[2] == -w[0] && w[3] == -w[1] && std::abs(w[2]) == a &&
               std::abs(w[3]) == b;
      };

      // Rewriting passes over every relator except the squares and the
      // commuting-pair records themselves.
      for (Rel& r : rels) {
        if (is_square(r.w) || is_commuting_witness(r.w)) continue;
        Word& w = r.w;
        bool changed = false;
        for (int& s : w) {
          if (s < 0 && invs.count(-s)) {
            s = -s;
            changed = true;
          }
        }
        changed |= delete_involution_pairs(w, invs);
        // Bubble commuting letters into descending generator order.
        bool moved = true;
        while (moved) {
          moved = false;
          for (size_t i = 0; i + 1 < w.size(); ++i) {
            const int a = std::abs(w[i]), b = std::abs(w[i + 1]);
            if (a < b && commuting.count({a, b})) {
              std::swap(w[i], w[i + 1]);
              moved = changed = true;
            }
          }
          if (moved) {
            w = cyclically_reduced(std::move(w));
            changed |= delete_involution_pairs(w, invs);
          }
        }
        if (changed) outer = true;
      }

      // Deduplicate up to rotation and inversion, keeping first tags.
      std::map<Word, size_t> seen;
      std::vector<Rel> unique;
      for (Rel& r : rels) {
        if (r.w.empty()) {
          outer = true;
          continue;
        }
        Word key = canonical_key(cyclically_reduced(r.w));
        if (key.empty()) {
          outer = true;
          continue;
        }
        if (seen.emplace(std::move(key), unique.size()).second) {
          unique.push_back(std::move(r));
        } else {
          outer = true;
        }
      }
      rels = std::move(unique);
    }
  };

  for (;;) {
    normalize();
    // Pick the smallest eliminating relator: length 1, or length 2 with
    // two distinct generators.
    const Rel* pick = nullptr;
    for (const Rel& r : rels) {
      const bool eliminates =
          r.w.size() == 1 ||
          (r.w.size() == 2 && std::abs(r.w[0]) != std::abs(r.w[1]));
      if (!eliminates) continue;
      if (!pick || word_less(r.w, pick->w)) pick = &r;
    }
    if (!pick) break;

    int elim, replacement_letter = 0;
    if (pick->w.size() == 1) {
      elim = std::abs(pick->w[0]);
    } else {
      const int s1 = pick->w[0], s2 = pick->w[1];
      const int keep_idx = std::abs(s1) > std::abs(s2) ? 1 : 0;
      const int s_keep = keep_idx == 0 ? s1 : s2;
      const int s_elim = keep_idx == 0 ? s2 : s1;
      elim = std::abs(s_elim);
      // From s1 s2 = e: x_elim = x_keep^(-sgn(s_keep) * sgn(s_elim)).
      const int sign = -(s_keep > 0 ? 1 : -1) * (s_elim > 0 ? 1 : -1);
      replacement_letter = sign * std::abs(s_keep);
    }
    std::vector<Word> images(static_cast<size_t>(p.num_gens) + 1);
    for (int g = 1; g <= p.num_gens; ++g) images[g] = Word{g};
    images[elim] = replacement_letter == 0 ? Word{} : Word{replacement_letter};
    for (Rel& r : rels) r.w = substituted(r.w, images);
    alive[elim] = false;
  }

  // Renumber surviving generators consecutively.
  std::vector<int> remap(static_cast<size_t>(p.num_gens) + 1, 0);
  Presentation out;
  out.names.push_back("");
  for (int g = 1; g <= p.num_gens; ++g) {
    if (!alive[g]) continue;
    remap[g] = ++out.num_gens;
    out.names.push_back(p.names.empty() ? gen_token(g) : p.names[g]);
  }
  for (Rel& r : rels) {
    Word w;
    w.reserve(r.w.size());
    for (int s : r.w) w.push_back(s > 0 ? remap[s] : -remap[-s]);
    out.relators.push_back(std::move(w));
    out.tags.push_back(std::move(r.tag));
  }
  return out;
}

}  // namespace galcov
