#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "covgal/tracking.hpp"
#include "test_util.hpp"

using namespace covgal;
using namespace testutil;

namespace {

/// Fixed-step nearest-neighbor continuation at high density, as an
/// independent oracle for the adaptive tracker.
Permutation fixed_step_oracle(const WeierstrassSpec& f, const Path& path,
                              const RootFiber& base, int steps) {
  const int n = f.n;
  std::vector<ComplexF> cur = base.roots;
  double L = path.length();
  TrackerOptions opts;
  for (int s = 1; s <= steps; ++s) {
    ComplexF x = path.point_at(L * s / steps);
    auto a = f.fiber_coeffs(x);
    std::vector<ComplexF> next(n);
    for (int i = 0; i < n; ++i)
      next[i] = detail::newton_polish(a, cur[i], opts);
    cur = next;
  }
  // Match the continued fiber against the (sorted) base fiber.
  std::vector<int> img(n, -1);
  std::vector<bool> used(n, false);
  for (int i = 0; i < n; ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
      double d = std::abs(cur[i] - base.roots[j]);
      if (!used[j] && d < best) {
        best = d;
        img[i] = j;
      }
    }
    used[img[i]] = true;
  }
  return Permutation(img);
}

}  // namespace

TEST_CASE("roots at a point") {
  auto r = roots_at(power_minus_x(2), ComplexF(1.0, 0.0));
  REQUIRE(r.size() == 2);
  CHECK(std::abs(r[0] - ComplexF(-1.0)) < 1e-12);
  CHECK(std::abs(r[1] - ComplexF(1.0)) < 1e-12);

  auto r3 = roots_at(trinomial_s3(), ComplexF(0.0, 0.0));
  REQUIRE(r3.size() == 3);
  CHECK(std::abs(r3[0] + std::sqrt(3.0)) < 1e-10);
  CHECK(std::abs(r3[1]) < 1e-10);
  CHECK(std::abs(r3[2] - std::sqrt(3.0)) < 1e-10);

  // Repeated roots are rejected.
  std::vector<PolyX> sq(2);
  sq[0] = ipoly({0});
  Domain disc0 = build_domain(Disc{ComplexF(0, 0), 1.0}, {});
  WeierstrassSpec fsq(sq, disc0);
  CHECK_THROWS_AS(roots_at(fsq, ComplexF(0.0, 0.0)), RootCollision);
}

TEST_CASE("Weierstrass margin") {
  CHECK(check_weierstrass(power_minus_x(2)) == doctest::Approx(2.0));

  // z^2 - x over a disc containing the branch point x = 0.
  std::vector<PolyX> c(2);
  c[0] = ipoly({0, -1});
  WeierstrassSpec bad(c, build_domain(Disc{ComplexF(0, 0), 1.0}, {},
                                      ComplexF(0.5, 0.0)));
  CHECK_THROWS_AS(check_weierstrass(bad), WeierstrassViolation);

  // Constant coefficients z^2 - 1: margin 4 everywhere.
  std::vector<PolyX> cc(2);
  cc[0] = ipoly({-1});
  WeierstrassSpec konst(cc, build_domain(Disc{ComplexF(0, 0), 3.0}, {}));
  CHECK(check_weierstrass(konst) == doctest::Approx(4.0));
}

TEST_CASE("tracking constant coefficients is the identity") {
  std::vector<PolyX> cc(3);
  cc[0] = ipoly({-1});  // z^3 - 1
  Domain dom = build_domain(Disc{ComplexF(0, 0), 2.0},
                            {Disc{ComplexF(0, 0), 0.5}}, ComplexF(1.5, 0.0));
  WeierstrassSpec f(cc, dom);
  MonodromyData m = monodromy(f);
  REQUIRE(m.gens.size() == 1);
  CHECK(m.gens[0].is_identity());
}

TEST_CASE("small loop around a simple branch point gives a transposition") {
  WeierstrassSpec f = trinomial_s3();
  MonodromyData m = monodromy(f);
  REQUIRE(m.gens.size() == 2);
  for (const auto& g : m.gens) {
    CHECK(g.order() == 2);
    CHECK(g.sign() == -1);  // a transposition fixing one of three roots
    int fixed = 0;
    for (int i = 0; i < 3; ++i) fixed += g(i) == i;
    CHECK(fixed == 1);
  }
  // The two transpositions differ, generating S_3.
  CHECK_FALSE(m.gens[0] == m.gens[1]);
  CHECK(generate(m.gens).order() == 6);
}

TEST_CASE("adaptive tracker agrees with a dense fixed-step oracle") {
  for (const WeierstrassSpec& f :
       {power_minus_x(3), trinomial_s3(), reducible_pair()}) {
    MonodromyData m = monodromy(f);
    for (int j = 1; j <= f.domain.num_holes(); ++j) {
      Path loop = generator_loop(f.domain, j);
      Permutation oracle = fixed_step_oracle(f, loop, m.base, 20000);
      CHECK(m.gens[j - 1] == oracle);
    }
  }
}

TEST_CASE("monodromy of z^n - x is an n-cycle") {
  for (int n = 2; n <= 6; ++n) {
    MonodromyData m = monodromy(power_minus_x(n));
    REQUIRE(m.gens.size() == 1);
    CHECK(m.gens[0].order() == n);
    CHECK(m.gens[0].cycles().size() == 1);
    CHECK(m.max_residual < 1e-9);
  }
}

TEST_CASE("loop inverse and word composition") {
  WeierstrassSpec f = trinomial_s3();
  MonodromyData m = monodromy(f);

  CHECK(track_word(f, LoopWord{{1, -1}}, m.base).is_identity());
  CHECK(track_word(f, LoopWord{{2, -2}}, m.base).is_identity());

  // Word [1, 2]: letter 1 first, so the composite is g2 * g1.
  Permutation w12 = track_word(f, LoopWord{{1, 2}}, m.base);
  CHECK(w12 == m.gens[1] * m.gens[0]);
  Permutation w21 = track_word(f, LoopWord{{2, 1}}, m.base);
  CHECK(w21 == m.gens[0] * m.gens[1]);

  // Inverse letters give inverse permutations.
  CHECK(track_word(f, LoopWord{{-1}}, m.base) == m.gens[0].inverse());
}

TEST_CASE("basepoint change conjugates the generators") {
  WeierstrassSpec f = trinomial_s3();
  MonodromyData m0 = monodromy(f);

  Domain moved = build_domain(f.domain.outer, f.domain.holes,
                              ComplexF(0.0, 2.5));
  WeierstrassSpec f1(f.coeffs, moved);
  MonodromyData m1 = monodromy(f1);
  CHECK(conjugate_generators(m0.gens, m1.gens, 3));
  CHECK(generate(m0.gens).order() == generate(m1.gens).order());
}

TEST_CASE("spec construction guards") {
  CHECK_THROWS_AS(WeierstrassSpec({}, build_domain(Disc{ComplexF(0, 0), 1.0},
                                                   {})),
                  InputError);
}
