#include "galcov/verification.hpp"

#include <chrono>

#include "json.hpp"

#include "galcov/factorization.hpp"
#include "galcov/permutation.hpp"
#include "galcov/presentation.hpp"
#include "galcov/tietze.hpp"

namespace galcov {

VerificationReport verify_simply_connected(int k, const VerifyOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();

  VerificationReport r;
  r.k = k;
  const DegenerationParams params = degeneration_params(k);
  r.d = params.d;
  r.m = params.m;
  const ChernData chern = chern_data(k);
  r.c1_squared = chern.c1_squared;
  r.classification = chern.classification;
  r.expected_order = factorial_big(k);

  const Factorization factors = full_factorization(k);
  r.factor_count = static_cast<int>(expand(factors).size());
  r.exponent_sum = exponent_sum(factors);

  const Presentation g = presentation_G(k);
  r.relator_count = static_cast<int>(g.relators.size());
  Presentation g1 = presentation_G1(g);

  // The edge homomorphism and its surjectivity are checked on the
  // original generator set, before any simplification renumbers it.
  const std::vector<Perm> images = edge_homomorphism(k);
  r.hom_verified = verify_homomorphism(g1, images, k).ok;
  const std::vector<Perm> image_gens(images.begin() + 1, images.end());
  r.surjective = permutation_group_order(image_gens, k) == factorial_u64(k);

  const Presentation enumerated = opt.simplify ? tietze_simplify(g1) : g1;
  const EnumerationResult res = enumerate_cosets(
      enumerated, static_cast<long long>(opt.max_cosets), opt.strategy);
  r.max_cosets_used = static_cast<long long>(res.max_live);
  if (res.completed) r.g1_order = static_cast<long long>(res.order);

  r.isomorphic = r.hom_verified && r.surjective && r.g1_order.has_value() &&
                 BigInt(*r.g1_order) == r.expected_order;
  // A verified surjection G1 -> S_k with |G1| = k! has trivial kernel,
  // and that kernel is the fundamental group of the Galois cover.
  r.pi1_trivial = r.isomorphic;

  const auto t1 = std::chrono::steady_clock::now();
  r.runtime_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return r;
}

std::string report_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["k"] = r.k;
  j["d"] = r.d;
  j["m"] = r.m;
  j["factor_count"] = r.factor_count;
  j["relator_count"] = r.relator_count;
  j["exponent_sum"] = r.exponent_sum;
  if (r.g1_order.has_value())
    j["g1_order"] = *r.g1_order;
  else
    j["g1_order"] = nullptr;
  j["expected_order"] = r.expected_order.str();
  j["hom_verified"] = r.hom_verified;
  j["surjective"] = r.surjective;
  j["pi1_trivial"] = r.pi1_trivial;
  j["c1_squared"] = r.c1_squared.str();
  j["classification"] = r.classification;
  j["max_cosets_used"] = r.max_cosets_used;
  j["runtime_ms"] = r.runtime_ms;
  return j.dump(2) + "\n";
}

}  // namespace galcov
