#include "doctest.h"

#include <stdexcept>

#include "galcov/invariants.hpp"
#include "galcov/verification.hpp"

using namespace galcov;

TEST_CASE("degeneration parameters of the chain of planes") {
  const DegenerationParams p6 = degeneration_params(6);
  CHECK(p6.d == 6);
  CHECK(p6.m == 10);
  CHECK(p6.n_lines == 5);
  const DegenerationParams p5 = degeneration_params(5);
  CHECK(p5.d == 5);
  CHECK(p5.m == 8);
  CHECK(p5.n_lines == 4);
  const DegenerationParams p3 = degeneration_params(3);
  CHECK(p3.d == 3);
  CHECK(p3.m == 4);
  CHECK(p3.n_lines == 2);
  CHECK_THROWS_AS(degeneration_params(2), std::invalid_argument);
}

TEST_CASE("exact factorials") {
  CHECK(factorial_big(0) == 1);
  CHECK(factorial_big(6) == 720);
  CHECK(factorial_big(20) == BigInt("2432902008176640000"));
  CHECK(factorial_big(25) == BigInt("15511210043330985984000000"));
}

TEST_CASE("the Chern number reproduces the printed values") {
  CHECK(chern_c1sq(5, 8) == 120);    // 5! * 1
  CHECK(chern_c1sq(6, 10) == 2880);  // 6! * 2^2
  for (int d = 1; d <= 12; ++d) CHECK(chern_c1sq(d, 6) == 0);
}

TEST_CASE("the Chern number follows the closed form in k") {
  for (int k = 5; k <= 10; ++k) {
    const DegenerationParams p = degeneration_params(k);
    CHECK(chern_c1sq(p.d, p.m) == factorial_big(k) * (k - 4) * (k - 4));
  }
}

TEST_CASE("the Chern number grows strictly from four planes on") {
  BigInt prev = chern_c1sq(4, 6);
  for (int k = 5; k <= 12; ++k) {
    const DegenerationParams p = degeneration_params(k);
    const BigInt cur = chern_c1sq(p.d, p.m);
    CHECK(cur > prev);
    prev = cur;
  }
}

TEST_CASE("classification is general type exactly for positive Chern number") {
  CHECK(classify(BigInt(2880)) == "general_type");
  CHECK(classify(BigInt(0)) == "not_determined");
  CHECK(classify(BigInt(-4)) == "not_determined");
  CHECK(chern_data(4).classification == "not_determined");
  for (int k = 5; k <= 10; ++k)
    CHECK(chern_data(k).classification == "general_type");
}

TEST_CASE("large instances serialize exactly") {
  CHECK(chern_c1sq(20, 38).str() == "622822914093219840000");  // 20! * 16^2
  const ChernData c25 = chern_data(25);
  CHECK(c25.c1_squared == factorial_big(25) * 441);
  CHECK(c25.c1_squared.str() == "6840443629108964818944000000");
  CHECK(classify(c25.c1_squared) == "general_type");
}

TEST_CASE("chern_c1sq validates its inputs") {
  CHECK_THROWS_AS(chern_c1sq(0, 8), std::invalid_argument);
  CHECK_THROWS_AS(chern_c1sq(5, -1), std::invalid_argument);
}

TEST_CASE("the verification report embeds the invariants") {
  VerifyOptions opt;
  const VerificationReport r = verify_simply_connected(5, opt);
  CHECK(r.k == 5);
  CHECK(r.d == 5);
  CHECK(r.m == 8);
  CHECK(r.expected_order == 120);
  CHECK(r.c1_squared == 120);
  CHECK(r.classification == "general_type");
  REQUIRE(r.g1_order.has_value());
  CHECK(*r.g1_order == 120);
  CHECK(r.hom_verified);
  CHECK(r.surjective);
  CHECK(r.isomorphic);
  CHECK(r.pi1_trivial);
}

TEST_CASE("the report serializer emits the frozen schema") {
  VerifyOptions opt;
  const VerificationReport r = verify_simply_connected(4, opt);
  const std::string json = report_json(r);
  for (const char* field :
       {"\"schema_version\": 1", "\"k\": 4", "\"d\": 4", "\"m\": 6",
        "\"factor_count\": 15", "\"relator_count\": 16",
        "\"exponent_sum\": 27", "\"g1_order\": 24",
        "\"expected_order\": \"24\"", "\"hom_verified\": true",
        "\"surjective\": true", "\"pi1_trivial\": true",
        "\"c1_squared\": \"0\"", "\"classification\": \"not_determined\"",
        "\"max_cosets_used\":", "\"runtime_ms\":"}) {
    INFO(field);
    CHECK(json.find(field) != std::string::npos);
  }
}

TEST_CASE("an overflowed report carries a null order and no verdict") {
  VerifyOptions opt;
  opt.max_cosets = 10;
  const VerificationReport r = verify_simply_connected(4, opt);
  CHECK(!r.g1_order.has_value());
  CHECK(!r.pi1_trivial);
  CHECK(r.hom_verified);  // the homomorphism side is budget-independent
  CHECK(r.surjective);
  CHECK(report_json(r).find("\"g1_order\": null") != std::string::npos);
}
