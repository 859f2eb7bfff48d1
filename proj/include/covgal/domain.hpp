#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "covgal/errors.hpp"
#include "covgal/numerics.hpp"

namespace covgal {

struct Disc {
  ComplexF center;
  double radius = 0.0;
};

inline double dist(ComplexF a, ComplexF b) { return std::abs(a - b); }

/// Distance from point p to the segment [a, b].
inline double segment_distance(ComplexF a, ComplexF b, ComplexF p) {
  ComplexF d = b - a;
  double len2 = std::norm(d);
  if (len2 == 0.0) return dist(a, p);
  double t = std::clamp(((p - a) * std::conj(d)).real() / len2, 0.0, 1.0);
  return dist(a + t * d, p);
}

/// Planar base space X = outer disc minus disjoint open hole discs.
struct Domain {
  Disc outer;
  std::vector<Disc> holes;
  ComplexF basepoint;
  double margin = 0.0;  // clearance kept from all boundaries

  int num_holes() const { return static_cast<int>(holes.size()); }

  /// Membership in X with a clearance (negative clearance admits boundary).
  bool contains(ComplexF x, double clearance) const {
    if (dist(x, outer.center) > outer.radius - clearance) return false;
    for (const auto& h : holes)
      if (dist(x, h.center) < h.radius + clearance) return false;
    return true;
  }
};

struct LineSeg {
  ComplexF a, b;
};
/// Circular arc around `center`, from angle t0 to t1 (t1 > t0 means ccw).
struct ArcSeg {
  ComplexF center;
  double radius;
  double t0, t1;
};
using Segment = std::variant<LineSeg, ArcSeg>;

inline double segment_length(const Segment& s) {
  if (const auto* l = std::get_if<LineSeg>(&s)) return dist(l->a, l->b);
  const auto& a = std::get<ArcSeg>(s);
  return a.radius * std::abs(a.t1 - a.t0);
}

inline ComplexF segment_point(const Segment& s, double t) {  // t in [0,1]
  if (const auto* l = std::get_if<LineSeg>(&s)) return l->a + t * (l->b - l->a);
  const auto& a = std::get<ArcSeg>(s);
  return a.center + std::polar(a.radius, a.t0 + t * (a.t1 - a.t0));
}

inline Segment reverse_segment(const Segment& s) {
  if (const auto* l = std::get_if<LineSeg>(&s)) return LineSeg{l->b, l->a};
  const auto& a = std::get<ArcSeg>(s);
  return ArcSeg{a.center, a.radius, a.t1, a.t0};
}

/// Piecewise path of line segments and circular arcs.
struct Path {
  std::vector<Segment> segments;
  ComplexF anchor;  // start point (also the whole path for empty words)
  bool closed = false;

  double length() const {
    double L = 0.0;
    for (const auto& s : segments) L += segment_length(s);
    return L;
  }

  ComplexF start() const {
    return segments.empty() ? anchor : segment_point(segments.front(), 0.0);
  }
  ComplexF end() const {
    return segments.empty() ? anchor : segment_point(segments.back(), 1.0);
  }

  /// Point at arc length s from the start.
  ComplexF point_at(double s) const {
    if (segments.empty()) return anchor;
    for (const auto& seg : segments) {
      double L = segment_length(seg);
      if (s <= L || &seg == &segments.back())
        return segment_point(seg, L > 0 ? std::clamp(s / L, 0.0, 1.0) : 0.0);
      s -= L;
    }
    return end();
  }

  Path reversed() const {
    Path r;
    r.anchor = anchor;
    r.closed = closed;
    for (auto it = segments.rbegin(); it != segments.rend(); ++it)
      r.segments.push_back(reverse_segment(*it));
    return r;
  }

  friend Path operator+(const Path& a, const Path& b) {
    Path r = a;
    r.segments.insert(r.segments.end(), b.segments.begin(), b.segments.end());
    r.closed = dist(r.start(), r.end()) < 1e-12;
    return r;
  }
};

/// Word in the free generators of pi_1(X): 1-based hole indices, negative
/// for inverses.
struct LoopWord {
  std::vector<int> letters;
};

inline double default_margin(const Disc& outer, const std::vector<Disc>& holes) {
  if (holes.empty()) return 0.05 * outer.radius;
  double rmin = holes.front().radius;
  for (const auto& h : holes) rmin = std::min(rmin, h.radius);
  return 0.1 * rmin;
}

/// Validated domain; absent basepoint defaults to the point at angle 0 just
/// inside the outer boundary.
inline Domain build_domain(const Disc& outer, const std::vector<Disc>& holes,
                           std::optional<ComplexF> basepoint = std::nullopt) {
  if (outer.radius <= 0) throw InputError("outer radius must be positive");
  for (const auto& h : holes)
    if (h.radius <= 0) throw InputError("hole radius must be positive");
  double m = default_margin(outer, holes);
  for (size_t i = 0; i < holes.size(); ++i)
    for (size_t j = i + 1; j < holes.size(); ++j)
      if (dist(holes[i].center, holes[j].center) <=
          holes[i].radius + holes[j].radius)
        throw OverlappingHoles("holes " + std::to_string(i + 1) + " and " +
                               std::to_string(j + 1));
  for (size_t i = 0; i < holes.size(); ++i)
    if (dist(holes[i].center, outer.center) + holes[i].radius >= outer.radius)
      throw HoleOutsideOuter("hole " + std::to_string(i + 1));

  Domain d;
  d.outer = outer;
  d.holes = holes;
  d.margin = m;
  if (basepoint) {
    d.basepoint = *basepoint;
    if (dist(d.basepoint, outer.center) > outer.radius)
      throw BasepointInHole("basepoint outside the outer disc");
    for (const auto& h : holes)
      if (dist(d.basepoint, h.center) <= h.radius)
        throw BasepointInHole("basepoint inside a hole");
  } else {
    d.basepoint = outer.center + ComplexF(outer.radius - m, 0.0);
    for (const auto& h : holes)
      if (dist(d.basepoint, h.center) <= h.radius + m)
        throw BasepointInHole("default basepoint blocked; pass one explicitly");
  }
  return d;
}

struct SpiderReport {
  std::vector<bool> reachable;        // per hole
  std::vector<std::string> problems;  // empty when all reachable
  bool ok() const {
    for (bool r : reachable)
      if (!r) return false;
    return true;
  }
};

namespace detail {

/// Checks the straight corridor from the basepoint to hole j's ring.
inline std::string corridor_problem(const Domain& d, int j) {
  const Disc& hj = d.holes[j];
  double reach = dist(d.basepoint, hj.center);
  double ring = hj.radius + d.margin;
  if (reach <= ring) return "basepoint inside the lasso ring";
  ComplexF dir = (hj.center - d.basepoint) / reach;
  ComplexF p = hj.center - dir * ring;  // corridor endpoint on the ring
  for (int k = 0; k < d.num_holes(); ++k) {
    if (k == j) continue;
    if (segment_distance(d.basepoint, p, d.holes[k].center) <
        d.holes[k].radius + d.margin)
      return "corridor to hole " + std::to_string(j + 1) +
             " intersects hole " + std::to_string(k + 1);
    if (dist(hj.center, d.holes[k].center) <
        ring + d.holes[k].radius + d.margin)
      return "ring of hole " + std::to_string(j + 1) + " touches hole " +
             std::to_string(k + 1);
  }
  if (dist(hj.center, d.outer.center) + ring > d.outer.radius - d.margin)
    return "ring of hole " + std::to_string(j + 1) + " leaves the outer disc";
  return "";
}

}  // namespace detail

inline SpiderReport validate_spider(const Domain& d) {
  SpiderReport rep;
  for (int j = 0; j < d.num_holes(); ++j) {
    std::string prob = detail::corridor_problem(d, j);
    rep.reachable.push_back(prob.empty());
    if (!prob.empty()) rep.problems.push_back(prob);
  }
  return rep;
}

/// Counterclockwise lasso around hole j (1-based): corridor in, full ccw
/// circle at radius (hole radius + margin), corridor back.
inline Path generator_loop(const Domain& d, int j) {
  if (j < 1 || j > d.num_holes()) throw InputError("hole index out of range");
  std::string prob = detail::corridor_problem(d, j - 1);
  if (!prob.empty()) throw SpiderBlocked(prob);
  const Disc& h = d.holes[j - 1];
  double ring = h.radius + d.margin;
  ComplexF dir = (h.center - d.basepoint) / dist(d.basepoint, h.center);
  ComplexF p = h.center - dir * ring;
  double theta = std::arg(p - h.center);
  Path loop;
  loop.anchor = d.basepoint;
  loop.closed = true;
  loop.segments.push_back(LineSeg{d.basepoint, p});
  loop.segments.push_back(ArcSeg{h.center, ring, theta, theta + 2.0 * M_PI});
  loop.segments.push_back(LineSeg{p, d.basepoint});
  return loop;
}

/// Concatenation of generator lassos (and reversals) in word order.
inline Path loop_word(const Domain& d, const LoopWord& w) {
  Path out;
  out.anchor = d.basepoint;
  out.closed = true;
  for (int letter : w.letters) {
    if (letter == 0) throw InputError("zero letter in loop word");
    Path lasso = generator_loop(d, std::abs(letter));
    out = out + (letter > 0 ? lasso : lasso.reversed());
  }
  out.closed = true;
  return out;
}

/// Minimum clearance of sampled path points from all boundaries.
inline double path_clearance(const Domain& d, const Path& path,
                             int samples_per_unit = 64) {
  double L = path.length();
  int m = std::max(2, static_cast<int>(L * samples_per_unit));
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= m; ++k) {
    ComplexF x = path.point_at(L * k / m);
    double c = d.outer.radius - dist(x, d.outer.center);
    for (const auto& h : d.holes)
      c = std::min(c, dist(x, h.center) - h.radius);
    best = std::min(best, c);
  }
  return best;
}

}  // namespace covgal
