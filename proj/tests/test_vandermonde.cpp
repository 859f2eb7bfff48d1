#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "covgal/vandermonde.hpp"
#include "test_util.hpp"

using namespace covgal;
using namespace testutil;

TEST_CASE("index tuple order") {
  auto t2 = index_order(2);
  REQUIRE(t2.size() == 2);
  CHECK(t2[0] == IndexTuple{0});
  CHECK(t2[1] == IndexTuple{1});

  auto t3 = index_order(3);
  REQUIRE(t3.size() == 6);
  CHECK(t3[0] == IndexTuple{0, 0});
  CHECK(t3[5] == IndexTuple{2, 1});

  auto t4 = index_order(4);
  REQUIRE(t4.size() == 24);
  CHECK(t4.front() == IndexTuple{0, 0, 0});
  CHECK(t4.back() == IndexTuple{3, 2, 1});
  CHECK(std::set<IndexTuple>(t4.begin(), t4.end()).size() == 24);
}

TEST_CASE("sigma enumeration of the symmetric group") {
  auto s2 = sigma_enum(2);
  REQUIRE(s2.size() == 2);
  CHECK(s2[0].is_identity());
  CHECK(s2[1] == Permutation::from_cycle_string("(1 2)", 2));

  // For n = 3 the fifth element is sigma_1 sigma_2 = (1 2).
  auto s3 = sigma_enum(3);
  CHECK(s3[4] == Permutation::from_cycle_string("(1 2)", 3));

  long factorial = 1;
  for (int n = 2; n <= 7; ++n) {
    factorial *= n;
    auto perms = sigma_enum(n);
    CHECK(static_cast<long>(perms.size()) == factorial);
    CHECK(static_cast<long>(
              std::set<Permutation>(perms.begin(), perms.end()).size()) ==
          factorial);
  }
}

TEST_CASE("delta fixed values") {
  CHECK(delta(std::vector<GaussianRational>{GaussianRational(3)}) ==
        GaussianRational(1));

  // n = 3 at alpha = (0, 1, 2): the closed form gives -[(1)(2)(1)]^3 = -8.
  std::vector<GaussianRational> a012 = {GaussianRational(0),
                                        GaussianRational(1),
                                        GaussianRational(2)};
  CHECK(delta(a012) == GaussianRational(-8));
  CHECK(std::abs(delta(std::vector<ComplexF>{0.0, 1.0, 2.0}) -
                 ComplexF(-8.0)) < 1e-9);

  CHECK_THROWS_AS(delta(std::vector<GaussianRational>{GaussianRational(1),
                                                      GaussianRational(1)}),
                  DuplicateRoots);
  CHECK_THROWS_AS(delta(std::vector<ComplexF>{1., 2., 3., 4., 5., 6.}),
                  OrderCapExceeded);
}

TEST_CASE("V_2 closed form: alpha_2 - alpha_1") {
  std::mt19937_64 rng(101);
  for (int it = 0; it < 100; ++it) {
    auto a = random_distinct_roots(2, rng);
    ComplexF d = delta(a);
    ComplexF want = a[1] - a[0];
    CHECK(std::abs(d - want) / std::abs(want) < 1e-9);
  }
}

TEST_CASE("V_3 closed form: -[(a2-a1)(a3-a1)(a3-a2)]^3") {
  std::mt19937_64 rng(102);
  for (int it = 0; it < 100; ++it) {
    auto a = random_distinct_roots(3, rng);
    ComplexF d = delta(a);
    ComplexF prod = (a[1] - a[0]) * (a[2] - a[0]) * (a[2] - a[1]);
    ComplexF want = -prod * prod * prod;
    CHECK(std::abs(d - want) / std::abs(want) < 1e-9);
  }
}

TEST_CASE("delta does not vanish at distinct roots") {
  std::mt19937_64 rng(103);
  for (int n = 2; n <= 4; ++n) {
    for (int it = 0; it < 100; ++it) {
      auto a = random_distinct_roots(n, rng);
      // Normalize to unit scale.
      double scale = 0.0;
      for (ComplexF v : a) scale = std::max(scale, std::abs(v));
      for (auto& v : a) v /= scale;
      CHECK(std::abs(delta(a)) > 1e-12);
    }
  }
}

TEST_CASE("sign character of delta") {
  std::mt19937_64 rng(104);
  for (int n : {3, 4}) {
    auto all = sigma_enum(n);
    for (int it = 0; it < 5; ++it) {
      auto a = random_distinct_roots(n, rng);
      for (const auto& sigma : all) {
        auto rep = check_sign(a, sigma);
        CHECK(rep.relative_error < 1e-9);
        CHECK(rep.square_error < 1e-9);
        CHECK(rep.sign == sigma.sign());
      }
    }
  }
}

TEST_CASE("sign character of delta, exact") {
  std::mt19937_64 rng(105);
  std::uniform_int_distribution<long> num(-6, 6);
  for (int it = 0; it < 10; ++it) {
    std::vector<GaussianRational> a;
    while (a.size() < 3) {
      GaussianRational cand(Rat(num(rng), 2), Rat(num(rng), 3));
      bool fresh = true;
      for (const auto& v : a) fresh &= !(v == cand);
      if (fresh) a.push_back(cand);
    }
    for (const auto& sigma : sigma_enum(3)) CHECK(check_sign_exact(a, sigma));
  }
}

TEST_CASE("G-Galois linear system") {
  auto one = galois_system({ComplexF(2.5, 0.0)});
  REQUIRE(one.y.size() == 1);
  CHECK(std::abs(one.y[0] - ComplexF(1.0)) < 1e-12);

  auto two = galois_system({ComplexF(0.0), ComplexF(1.0)});
  REQUIRE(two.y.size() == 2);
  CHECK(std::abs(two.y[0] - ComplexF(1.0)) < 1e-10);
  CHECK(std::abs(two.y[1] - ComplexF(-1.0)) < 1e-10);

  std::mt19937_64 rng(106);
  for (int n = 2; n <= 4; ++n) {
    for (int it = 0; it < 10; ++it) {
      auto res = galois_system(random_distinct_roots(n, rng));
      CHECK(res.max_residual < 1e-9);
    }
  }
}

TEST_CASE("v_matrix shape and first row") {
  auto a = std::vector<ComplexF>{ComplexF(0.3, 0.1), ComplexF(-0.7, 0.4),
                                 ComplexF(0.9, -0.2)};
  auto V = v_matrix(a);
  REQUIRE(V.entries.size() == 6);
  // Column 1 is the constant monomial 1 for every row.
  for (const auto& row : V.entries)
    CHECK(std::abs(row[0] - ComplexF(1.0)) < 1e-15);
  // Row 1 is the identity twist: entries are the plain monomials.
  for (size_t j = 0; j < 6; ++j) {
    ComplexF want = 1.0;
    for (size_t k = 0; k < V.tuples[j].size(); ++k)
      for (int e = 0; e < V.tuples[j][k]; ++e) want *= a[k];
    CHECK(std::abs(V.entries[0][j] - want) < 1e-12);
  }
}
