#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "covgal/realize.hpp"
#include "test_util.hpp"

using namespace covgal;
using namespace testutil;

namespace {

/// Re-runs monodromy on the emitted spec and checks the certified group.
void recertify(const RealizationSpec& r) {
  MonodromyData m = monodromy(r.spec);
  PermGroup G = generate(
      m.gens.empty() ? std::vector<Permutation>{Permutation::identity(r.spec.n)}
                     : m.gens);
  CHECK(G.order() == r.achieved.order());
}

}  // namespace

TEST_CASE("cyclic realizations") {
  RealizationSpec r1 = realize_cyclic(1);
  CHECK(r1.achieved.order() == 1);
  CHECK(r1.identification == "trivial");
  REQUIRE(r1.spec.n == 1);
  // f = z - (x - c) with c = 0.
  CHECK(r1.spec.coeffs[0].as_exact() == ipoly({0, -1}).as_exact());

  for (int n = 2; n <= 5; ++n) {
    RealizationSpec r = realize_cyclic(n);
    CHECK(r.achieved.order() == n);
    CHECK(r.identification == "cyclic " + std::to_string(n));
    CHECK(r.isomorphism_verified);
    recertify(r);
  }

  RealizationSpec shifted = realize_cyclic(2, Disc{ComplexF(1, 0), 0.3});
  CHECK(shifted.achieved.order() == 2);
  CHECK_THROWS_AS(realize_cyclic(0), InputError);
}

TEST_CASE("abelian product realizations") {
  RealizationSpec klein = realize_abelian_product({2, 2});
  CHECK(klein.achieved.order() == 4);
  CHECK(klein.achieved.is_abelian());
  // Exponent 2: every element squares to the identity.
  for (const auto& e : klein.achieved.elements) CHECK(e.order() <= 2);
  CHECK(klein.identification == "elementary abelian 2^2");
  recertify(klein);

  RealizationSpec triv = realize_abelian_product({1});
  CHECK(triv.achieved.order() == 1);

  RealizationSpec z6 = realize_abelian_product({2, 3});
  CHECK(z6.achieved.order() == 6);
  CHECK(z6.achieved.is_abelian());
  std::vector<size_t> sizes;
  for (const auto& orb : orbits(z6.achieved)) sizes.push_back(orb.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<size_t>{2, 3});
  CHECK(z6.identification == "cyclic 6");

  CHECK_THROWS_AS(realize_abelian_product({}), InputError);
}

TEST_CASE("symmetric realizations") {
  RealizationSpec s2 = realize_symmetric(2);
  CHECK(s2.achieved.order() == 2);

  RealizationSpec s3 = realize_symmetric(3);
  CHECK(s3.achieved.order() == 6);
  CHECK(s3.identification == "symmetric 3");
  CHECK(s3.candidates_tried == 1);  // z^3 - 3z + 2x works immediately
  // The deterministic first candidate: a_0 = 2x, a_1 = -3, holes at +-1.
  CHECK(s3.spec.coeffs[0].as_exact() == ipoly({0, 2}).as_exact());
  CHECK(s3.spec.coeffs[1].as_exact() == ipoly({-3}).as_exact());
  REQUIRE(s3.spec.domain.num_holes() == 2);
  std::vector<double> centers = {s3.spec.domain.holes[0].center.real(),
                                 s3.spec.domain.holes[1].center.real()};
  std::sort(centers.begin(), centers.end());
  CHECK(centers[0] == doctest::Approx(-1.0));
  CHECK(centers[1] == doctest::Approx(1.0));
  recertify(s3);

  CHECK_THROWS_AS(realize_symmetric(1), InputError);
}

TEST_CASE("signature search finds S_3 within budget") {
  std::vector<Permutation> target = {
      Permutation::from_cycle_string("(1 2)", 3),
      Permutation::from_cycle_string("(2 3)", 3)};
  RealizationSpec r = realize_search(target, 200, 1);
  CHECK(r.achieved.order() == 6);
  CHECK_FALSE(r.achieved.is_abelian());
  CHECK_FALSE(r.isomorphism_verified);  // signature match only
  CHECK(r.candidates_tried <= 200);
  recertify(r);
}

TEST_CASE("search guards") {
  CHECK_THROWS_AS(realize_search({}, 10, 1), InputError);
  std::vector<Permutation> big = {
      Permutation::from_cycle_string("(1 2 3 4 5 6 7 8 9)", 9)};
  CHECK_THROWS_AS(realize_search(big, 10, 1), InputError);
  // An exhausted budget reports not-found.
  std::vector<Permutation> s5 = {
      Permutation::from_cycle_string("(1 2)", 5),
      Permutation::from_cycle_string("(1 2 3 4 5)", 5)};
  CHECK_THROWS_AS(realize_search(s5, 1, 12345), SearchBudgetExhausted);
}

TEST_CASE("rational re-expression keeps the group") {
  RealizationSpec r = realize_cyclic(3);
  RealizationSpec q = realize_rational(r);
  CHECK(q.spec.exact());
  CHECK(q.achieved.order() == 3);
}
