#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "covgal/perm.hpp"

using namespace covgal;

namespace {

Permutation random_perm(int n, std::mt19937_64& rng) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(img);
}

}  // namespace

TEST_CASE("cycle notation round trip") {
  CHECK(Permutation::identity(4).to_cycle_string() == "()");
  Permutation p = Permutation::from_cycle_string("(1 2 3)(4 5)", 5);
  CHECK(p.to_cycle_string() == "(1 2 3)(4 5)");
  CHECK(p(0) == 1);
  CHECK(p(2) == 0);
  CHECK(p(3) == 4);

  std::mt19937_64 rng(3);
  for (int it = 0; it < 200; ++it) {
    Permutation q = random_perm(6, rng);
    CHECK(Permutation::from_cycle_string(q.to_cycle_string(), 6) == q);
  }
}

TEST_CASE("composition applies the right factor first") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    Permutation a = random_perm(5, rng), b = random_perm(5, rng);
    Permutation c = a * b;
    for (int i = 0; i < 5; ++i) CHECK(c(i) == a(b(i)));
  }
  Permutation t12 = Permutation::from_cycle_string("(1 2)", 3);
  Permutation t23 = Permutation::from_cycle_string("(2 3)", 3);
  // (1 2) after (2 3): 1 -> 2, 2 -> 3 -> 3? no: 2 -> 3, 3 -> 2 -> 1.
  CHECK(t12 * t23 == Permutation::from_cycle_string("(1 2 3)", 3));
}

TEST_CASE("inverse, power, order, sign") {
  std::mt19937_64 rng(9);
  for (int it = 0; it < 200; ++it) {
    Permutation p = random_perm(7, rng);
    CHECK((p * p.inverse()).is_identity());
    CHECK(p.power(p.order()).is_identity());
    CHECK(p.power(-1) == p.inverse());
    CHECK(p.power(3) == p * p * p);
    Permutation q = random_perm(7, rng);
    CHECK((p * q).sign() == p.sign() * q.sign());
  }
  CHECK(Permutation::from_cycle_string("(1 2 3 4)", 4).order() == 4);
  CHECK(Permutation::from_cycle_string("(1 2)(3 4 5)", 5).order() == 6);
  CHECK(Permutation::from_cycle_string("(1 2)", 2).sign() == -1);
}

TEST_CASE("group generation") {
  PermGroup g2 =
      generate({Permutation::from_cycle_string("(1 2)(3 4)", 4)});
  CHECK(g2.order() == 2);

  PermGroup s3 = generate({Permutation::from_cycle_string("(1 2)", 3),
                           Permutation::from_cycle_string("(2 3)", 3)});
  CHECK(s3.order() == 6);
  CHECK(s3.is_transitive());
  CHECK_FALSE(s3.is_abelian());

  CHECK_THROWS_AS(generate({Permutation::identity(12),
                            Permutation::from_cycle_string("(1 2)", 12)},
                           1),
                  OrderCapExceeded);
}

TEST_CASE("orbits") {
  auto singletons = orbits({Permutation::identity(4)}, 4);
  CHECK(singletons.size() == 4);

  auto cyc = orbits({Permutation::from_cycle_string("(1 2 3 4)", 4)}, 4);
  REQUIRE(cyc.size() == 1);
  CHECK(cyc[0].size() == 4);

  auto split = orbits({Permutation::from_cycle_string("(1 2)(3 4)", 5)}, 5);
  CHECK(split.size() == 3);
}

TEST_CASE("subgroup lattice") {
  PermGroup z4 = generate({Permutation::from_cycle_string("(1 2 3 4)", 4)});
  CHECK(subgroups(z4).subgroups.size() == 3);

  PermGroup triv = generate({Permutation::identity(3)});
  CHECK(subgroups(triv).subgroups.size() == 1);

  PermGroup s3 = generate({Permutation::from_cycle_string("(1 2)", 3),
                           Permutation::from_cycle_string("(2 3)", 3)});
  auto lat = subgroups(s3);
  CHECK(lat.subgroups.size() == 6);
  // Lagrange: every subgroup order divides |G|; inclusion implies division.
  for (const auto& h : lat.subgroups) CHECK(s3.order() % h.order() == 0);
  for (size_t i = 0; i < lat.subgroups.size(); ++i)
    for (size_t j = 0; j < lat.subgroups.size(); ++j)
      if (lat.includes[j][i])
        CHECK(lat.subgroups[j].order() % lat.subgroups[i].order() == 0);

  PermGroup s4 = generate({Permutation::from_cycle_string("(1 2)", 4),
                           Permutation::from_cycle_string("(1 2 3 4)", 4)});
  auto lat4 = subgroups(s4);
  CHECK(lat4.subgroups.size() == 30);
  for (const auto& h : lat4.subgroups) CHECK(24 % h.order() == 0);
}

TEST_CASE("coset action") {
  PermGroup s3 = generate({Permutation::from_cycle_string("(1 2)", 3),
                           Permutation::from_cycle_string("(2 3)", 3)});
  auto lat = subgroups(s3);
  for (const auto& h : lat.subgroups) {
    auto action = coset_action(s3, h);
    long degree = s3.order() / h.order();
    for (const auto& g : action) CHECK(g.degree() == degree);
    // The coset action of a transitive-generator set is transitive.
    CHECK(orbits(action, static_cast<int>(degree)).size() == 1);
  }

  // A subset that is not closed under the group operation is rejected.
  Subgroup bad;
  bad.members = {s3.index_of(Permutation::identity(3)),
                 s3.index_of(Permutation::from_cycle_string("(1 2 3)", 3))};
  std::sort(bad.members.begin(), bad.members.end());
  CHECK_THROWS_AS(coset_action(s3, bad), NotASubgroup);
}

TEST_CASE("identification heuristic") {
  CHECK(identify(generate({Permutation::identity(3)})) == "trivial");
  CHECK(identify(generate({Permutation::from_cycle_string("(1 2 3 4)", 4)})) ==
        "cyclic 4");
  CHECK(identify(generate({Permutation::from_cycle_string("(1 2)", 3),
                           Permutation::from_cycle_string("(2 3)", 3)})) ==
        "symmetric 3");
  CHECK(identify(generate({Permutation::from_cycle_string("(1 2 3)", 4),
                           Permutation::from_cycle_string("(2 3 4)", 4)})) ==
        "alternating 4");
  std::string klein =
      identify(generate({Permutation::from_cycle_string("(1 2)", 4),
                         Permutation::from_cycle_string("(3 4)", 4)}));
  CHECK(klein == "elementary abelian 2^2");
  CHECK(identify(generate({Permutation::from_cycle_string("(1 2)(3 4 5)", 5)})) ==
        "cyclic 6");
}
