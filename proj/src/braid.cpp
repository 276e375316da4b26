#include "galcov/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

namespace galcov {

int strand_of(int line) { return 2 * line - 1; }
int strand_of_primed(int line) { return 2 * line; }

BraidWord half_twist(int a, int b, Side side) {
  if (a > b) std::swap(a, b);
  return {Twist{a, b, 1, side}};
}

BraidWord inverse(const BraidWord& w) {
  BraidWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    Twist t = *it;
    t.sign = -t.sign;
    out.push_back(t);
  }
  return out;
}

BraidWord power(const BraidWord& w, int e) {
  BraidWord base = e < 0 ? inverse(w) : w;
  int reps = std::abs(e);
  BraidWord out;
  out.reserve(base.size() * static_cast<size_t>(reps));
  for (int i = 0; i < reps; ++i) out.insert(out.end(), base.begin(), base.end());
  return out;
}

BraidWord multiply(const BraidWord& a, const BraidWord& b) {
  BraidWord out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

BraidWord conjugated(const BraidWord& x, const BraidWord& c) {
  return multiply(multiply(inverse(c), x), c);
}

namespace {

// Substitute the images of x_a, x_b under a single letter into w.
Word apply_letter(const Twist& t, const Word& w) {
  // Images of x_a and x_b; every other generator is fixed.
  Word img_a, img_b;
  const int a = t.a, b = t.b;
  const bool positive = t.sign > 0;
  if (t.side == Side::below) {
    if (positive) {
      img_a = {b};
      img_b = {b, a, -b};
    } else {
      img_a = {-a, b, a};
      img_b = {a};
    }
  } else {
    if (positive) {
      img_a = {a, b, -a};
      img_b = {a};
    } else {
      img_a = {b};
      img_b = {-b, a, b};
    }
  }
  Word out;
  out.reserve(w.size() + 4);
  auto push = [&out](int letter) {
    if (!out.empty() && out.back() == -letter) {
      out.pop_back();
    } else {
      out.push_back(letter);
    }
  };
  for (int s : w) {
    int g = std::abs(s);
    if (g != a && g != b) {
      push(s);
      continue;
    }
    const Word& img = (g == a) ? img_a : img_b;
    if (s > 0) {
      for (int x : img) push(x);
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it) push(-*it);
    }
  }
  return out;
}

}  // namespace

Word apply_braid(const BraidWord& c, Word w) {
  for (const Twist& t : c) w = apply_letter(t, w);
  return w;
}

std::vector<Word> braid_action(const BraidWord& c, int num_strands) {
  std::vector<Word> images(static_cast<size_t>(num_strands) + 1);
  for (int g = 1; g <= num_strands; ++g) images[g] = apply_braid(c, Word{g});
  return images;
}

std::vector<int> strand_permutation(const BraidWord& c, int num_strands) {
  std::vector<int> perm(static_cast<size_t>(num_strands) + 1);
  for (int i = 0; i <= num_strands; ++i) perm[i] = i;
  for (const Twist& t : c) {
    for (int i = 1; i <= num_strands; ++i) {
      if (perm[i] == t.a) {
        perm[i] = t.b;
      } else if (perm[i] == t.b) {
        perm[i] = t.a;
      }
    }
  }
  perm[0] = 0;
  return perm;
}

BraidWord full_twist_word(const std::vector<int>& strands) {
  std::vector<int> s = strands;
  std::sort(s.begin(), s.end());
  const int m = static_cast<int>(s.size());
  BraidWord out;
  if (m <= 1) return out;
  out.reserve(static_cast<size_t>(m) * (m - 1));
  for (int rep = 0; rep < m; ++rep) {
    for (int i = 0; i + 1 < m; ++i) out.push_back(Twist{s[i], s[i + 1], 1, Side::below});
  }
  return out;
}

BraidWord paired_twist_word(const std::vector<int>& first,
                            const std::vector<int>& second, int sign) {
  std::vector<int> all = first;
  all.insert(all.end(), second.begin(), second.end());
  BraidWord w = multiply(full_twist_word(all), inverse(full_twist_word(first)));
  return sign < 0 ? inverse(w) : w;
}

std::string twist_token(const Twist& t) {
  std::string out = (t.side == Side::below) ? "Z(" : "Zbar(";
  out += gen_token(t.a);
  out += ',';
  out += gen_token(t.b);
  out += ')';
  if (t.sign < 0) out += "^-1";
  return out;
}

std::string braid_text(const BraidWord& w) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += twist_token(w[i]);
  }
  return out;
}

}  // namespace galcov
