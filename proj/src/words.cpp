#include "galcov/words.hpp"

#include <algorithm>
#include <cstdlib>

namespace galcov {

namespace {

// Push one letter onto an already-reduced word, cancelling if possible.
void push_reduced(Word& out, int letter) {
  if (!out.empty() && out.back() == -letter) {
    out.pop_back();
  } else {
    out.push_back(letter);
  }
}

}  // namespace

Word reduced(Word w) {
  Word out;
  out.reserve(w.size());
  for (int s : w) push_reduced(out, s);
  return out;
}

Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

Word multiply(const Word& a, const Word& b) {
  Word out = a;
  for (int s : b) push_reduced(out, s);
  return out;
}

Word power_word(const Word& w, int e) {
  Word base = e < 0 ? inverse_word(w) : w;
  int reps = std::abs(e);
  Word out;
  for (int i = 0; i < reps; ++i) out = multiply(out, base);
  return out;
}

Word conjugated_word(const Word& x, const Word& c) {
  return multiply(multiply(inverse_word(c), x), c);
}

Word cyclically_reduced(Word w) {
  w = reduced(std::move(w));
  size_t i = 0, j = w.size();
  while (j - i >= 2 && w[i] == -w[j - 1]) {
    ++i;
    --j;
  }
  return Word(w.begin() + i, w.begin() + j);
}

namespace {

// True when b is a cyclic rotation of a (equal lengths assumed).
bool is_rotation(const Word& a, const Word& b) {
  const size_t n = a.size();
  if (b.size() != n) return false;
  if (n == 0) return true;
  for (size_t off = 0; off < n; ++off) {
    bool match = true;
    for (size_t i = 0; i < n; ++i) {
      if (a[(off + i) % n] != b[i]) {
        match = false;
        break;
      }
    }
    if (match) return true;
  }
  return false;
}

}  // namespace

bool relator_equivalent(const Word& a, const Word& b) {
  Word ca = cyclically_reduced(a);
  Word cb = cyclically_reduced(b);
  if (ca.size() != cb.size()) return false;
  return is_rotation(ca, cb) || is_rotation(ca, inverse_word(cb));
}

Word substituted(const Word& w, const std::vector<Word>& images) {
  Word out;
  for (int s : w) {
    const Word& img = images[static_cast<size_t>(std::abs(s))];
    if (s > 0) {
      for (int t : img) push_reduced(out, t);
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it) push_reduced(out, -*it);
    }
  }
  return out;
}

int exponent_sum(const Word& w, int g) {
  int total = 0;
  for (int s : w) {
    if (s == g) ++total;
    if (s == -g) --total;
  }
  return total;
}

std::string gen_token(int g) {
  if (g % 2 == 1) return std::to_string((g + 1) / 2);
  return std::to_string(g / 2) + "'";
}

std::string letter_token(int signed_gen) {
  std::string t = gen_token(std::abs(signed_gen));
  if (signed_gen < 0) t += "^-1";
  return t;
}

std::string word_text(const Word& w) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += letter_token(w[i]);
  }
  return out;
}

}  // namespace galcov
