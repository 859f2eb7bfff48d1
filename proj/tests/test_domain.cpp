#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "covgal/domain.hpp"

using namespace covgal;

TEST_CASE("domain validation") {
  Domain simple = build_domain(Disc{ComplexF(0, 0), 2.0}, {});
  CHECK(simple.num_holes() == 0);
  CHECK(simple.contains(ComplexF(0, 0), 0.0));
  CHECK_FALSE(simple.contains(ComplexF(3, 0), 0.0));

  CHECK_THROWS_AS(build_domain(Disc{ComplexF(0, 0), 2.0},
                               {Disc{ComplexF(0, 0), 1.0},
                                Disc{ComplexF(1, 0), 1.0}}),
                  OverlappingHoles);
  CHECK_THROWS_AS(build_domain(Disc{ComplexF(0, 0), 2.0},
                               {Disc{ComplexF(1.5, 0), 1.0}}),
                  HoleOutsideOuter);
  CHECK_THROWS_AS(build_domain(Disc{ComplexF(0, 0), 2.0},
                               {Disc{ComplexF(0, 0), 0.5}},
                               ComplexF(0.1, 0.0)),
                  BasepointInHole);
  CHECK_THROWS_AS(build_domain(Disc{ComplexF(0, 0), -1.0}, {}), InputError);
}

TEST_CASE("default margin and basepoint") {
  Domain d = build_domain(Disc{ComplexF(0, 0), 2.0},
                          {Disc{ComplexF(0, 0), 0.5}});
  CHECK(d.margin == doctest::Approx(0.05));
  CHECK(d.basepoint.real() == doctest::Approx(1.95));
  CHECK(d.basepoint.imag() == doctest::Approx(0.0));

  Domain nohole = build_domain(Disc{ComplexF(1, 1), 4.0}, {});
  CHECK(nohole.margin == doctest::Approx(0.2));
}

TEST_CASE("segment distance") {
  CHECK(segment_distance(ComplexF(0, 0), ComplexF(2, 0), ComplexF(1, 1)) ==
        doctest::Approx(1.0));
  CHECK(segment_distance(ComplexF(0, 0), ComplexF(2, 0), ComplexF(3, 0)) ==
        doctest::Approx(1.0));
  CHECK(segment_distance(ComplexF(0, 0), ComplexF(0, 0), ComplexF(3, 4)) ==
        doctest::Approx(5.0));
}

TEST_CASE("generator loop on the annulus") {
  Domain d = build_domain(Disc{ComplexF(0, 0), 2.0},
                          {Disc{ComplexF(0, 0), 0.5}}, ComplexF(1.5, 0.0));
  Path loop = generator_loop(d, 1);
  CHECK(loop.closed);
  CHECK(dist(loop.start(), d.basepoint) < 1e-12);
  CHECK(dist(loop.end(), d.basepoint) < 1e-12);

  // Winding number around the hole center is +1 (counterclockwise).
  double L = loop.length();
  int samples = 4000;
  double winding = 0.0;
  double prev = std::arg(loop.point_at(0.0) - d.holes[0].center);
  for (int k = 1; k <= samples; ++k) {
    double cur = std::arg(loop.point_at(L * k / samples) - d.holes[0].center);
    double dtheta = cur - prev;
    while (dtheta > M_PI) dtheta -= 2 * M_PI;
    while (dtheta < -M_PI) dtheta += 2 * M_PI;
    winding += dtheta;
    prev = cur;
  }
  CHECK(winding / (2 * M_PI) == doctest::Approx(1.0).epsilon(1e-6));

  CHECK(path_clearance(d, loop) > 0.0);
  CHECK_THROWS_AS(generator_loop(d, 2), InputError);
}

TEST_CASE("two well-separated holes give two clear lassos") {
  Domain d = build_domain(Disc{ComplexF(0, 0), 5.0},
                          {Disc{ComplexF(-2, 0), 0.4},
                           Disc{ComplexF(2, 0), 0.4}},
                          ComplexF(0.0, -4.0));
  auto rep = validate_spider(d);
  CHECK(rep.ok());
  Path l1 = generator_loop(d, 1), l2 = generator_loop(d, 2);
  CHECK(path_clearance(d, l1) > 0.0);
  CHECK(path_clearance(d, l2) > 0.0);
}

TEST_CASE("collinear holes block the far lasso") {
  // Basepoint, near hole, far hole on one line: the corridor to the far
  // hole crosses the near one.
  Domain d = build_domain(Disc{ComplexF(0, 0), 6.0},
                          {Disc{ComplexF(0, 0), 0.5},
                           Disc{ComplexF(-2.5, 0), 0.5}},
                          ComplexF(4.0, 0.0));
  auto rep = validate_spider(d);
  CHECK_FALSE(rep.ok());
  CHECK(rep.reachable[0]);
  CHECK_FALSE(rep.reachable[1]);
  CHECK_THROWS_AS(generator_loop(d, 2), SpiderBlocked);
}

TEST_CASE("loop words") {
  Domain d = build_domain(Disc{ComplexF(0, 0), 5.0},
                          {Disc{ComplexF(-2, 0), 0.4},
                           Disc{ComplexF(2, 0), 0.4}},
                          ComplexF(0.0, -4.0));
  Path empty = loop_word(d, LoopWord{});
  CHECK(empty.length() == 0.0);
  CHECK(dist(empty.point_at(0.0), d.basepoint) < 1e-12);

  Path lasso = generator_loop(d, 1);
  Path there_and_back = loop_word(d, LoopWord{{1, -1}});
  CHECK(there_and_back.length() == doctest::Approx(2.0 * lasso.length()));
  CHECK(there_and_back.closed);

  Path both = loop_word(d, LoopWord{{1, 2}});
  CHECK(both.length() ==
        doctest::Approx(lasso.length() + generator_loop(d, 2).length()));
  CHECK(dist(both.start(), d.basepoint) < 1e-12);
  CHECK(dist(both.end(), d.basepoint) < 1e-12);

  CHECK_THROWS_AS(loop_word(d, LoopWord{{0}}), InputError);
}

TEST_CASE("path geometry") {
  Path circle;
  circle.anchor = ComplexF(1, 0);
  circle.segments.push_back(ArcSeg{ComplexF(0, 0), 1.0, 0.0, 2 * M_PI});
  CHECK(circle.length() == doctest::Approx(2 * M_PI));
  CHECK(dist(circle.point_at(M_PI), ComplexF(-1, 0)) < 1e-12);

  Path rev = circle.reversed();
  CHECK(dist(rev.point_at(0.0), circle.point_at(circle.length())) < 1e-12);
  CHECK(rev.length() == doctest::Approx(circle.length()));
}
