// Calibration of the six-plane computation against the expected relator
// list (see k6_expected.hpp for the full transcription and numbering).
//
// Every expected relator must equal a generated relator up to cyclic
// rotation and inversion, family by family, and the matching must be a
// bijection: 46 expected, 46 generated, none reused and none left over.

#include "doctest.h"

#include <string>
#include <vector>

#include "galcov/presentation.hpp"
#include "k6_expected.hpp"

using namespace galcov;

namespace {

const Presentation& gen6() {
  static const Presentation p = presentation_G(6);
  return p;
}

bool matches_some_generated(const Word& expected) {
  for (const Word& r : gen6().relators)
    if (relator_equivalent(expected, r)) return true;
  return false;
}

}  // namespace

TEST_CASE("six planes: expected relator count") {
  CHECK(k6_expected::all_relators().size() == 46);
  CHECK(gen6().relators.size() == 46);
}

TEST_CASE("six planes: vertex relators come from the vertex factors") {
  const Presentation& p = gen6();
  for (int j = 1; j <= 5; ++j) {
    const std::size_t i = static_cast<std::size_t>(j - 1);
    CHECK(p.tags[i] == "vertex" + std::to_string(j) + "#1");
    CHECK(p.relators[i] == Word{2 * j - 1, -2 * j});
  }
}

TEST_CASE("six planes: every expected relator family is reproduced") {
  for (const k6_expected::Family& family : k6_expected::families()) {
    for (std::size_t i = 0; i < family.relators.size(); ++i) {
      INFO(family.name, ", member ", i);
      CHECK(matches_some_generated(family.relators[i]));
    }
  }
}

TEST_CASE("six planes: the matching is a bijection") {
  const std::vector<Word> expected = k6_expected::all_relators();
  REQUIRE(expected.size() == gen6().relators.size());
  CHECK(k6_expected::matching_size(expected, gen6().relators) ==
        expected.size());
}
