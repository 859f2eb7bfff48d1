#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "covgal/domain.hpp"
#include "covgal/errors.hpp"
#include "covgal/numerics.hpp"
#include "covgal/perm.hpp"

namespace covgal {

struct TrackerOptions {
  double residual_tol = 1e-10;
  double collision_threshold = 1e-8;
  double initial_step_frac = 1.0 / 64.0;  // of total path length
  double min_step_frac = 1e-6;
  int max_newton = 50;
  int boundary_samples = 128;  // per boundary circle, for validity checks
  int grid_rings = 24;         // radial rings of the validity grid
  double weierstrass_threshold = 1e-8;
};

/// Monic degree-n polynomial in z with coefficient polynomials in x,
/// over a planar domain.
struct WeierstrassSpec {
  int n = 0;
  std::vector<PolyX> coeffs;  // a_0 .. a_{n-1}
  Domain domain;

  WeierstrassSpec() = default;
  WeierstrassSpec(std::vector<PolyX> a, Domain d)
      : n(static_cast<int>(a.size())), coeffs(std::move(a)), domain(std::move(d)) {
    if (n < 1) throw InputError("degree must be at least 1");
  }

  bool exact() const {
    for (const auto& c : coeffs)
      if (!c.exact()) return false;
    return true;
  }

  std::vector<PolyFloat> float_coeffs() const {
    std::vector<PolyFloat> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) out.push_back(c.to_float());
    return out;
  }

  /// z-coefficients at a point, low degree first, with implicit leading 1.
  std::vector<ComplexF> fiber_coeffs(ComplexF x) const {
    std::vector<ComplexF> out(n);
    for (int k = 0; k < n; ++k) out[k] = poly_eval(coeffs[k], x);
    return out;
  }
};

inline PolyX discriminant_of(const WeierstrassSpec& f) {
  if (f.exact()) {
    std::vector<PolyExact> a;
    for (const auto& c : f.coeffs) a.push_back(c.as_exact());
    return PolyX(discriminant(a));
  }
  return PolyX(discriminant(f.float_coeffs()));
}

struct RootFiber {
  ComplexF point;
  std::vector<ComplexF> roots;
};

struct MonodromyData {
  RootFiber base;
  std::vector<Permutation> gens;  // one per hole, counterclockwise lasso
  double max_residual = 0.0;      // worst |f(root)| over accepted fibers
  double weierstrass_margin = 0.0;
};

namespace detail {

inline ComplexF horner(const std::vector<ComplexF>& a, ComplexF z) {
  // a holds a_0..a_{n-1} of the monic polynomial.
  ComplexF acc = 1.0;
  for (size_t k = a.size(); k-- > 0;) acc = acc * z + a[k];
  return acc;
}

inline ComplexF horner_derivative(const std::vector<ComplexF>& a, ComplexF z) {
  const int n = static_cast<int>(a.size());
  ComplexF acc = ComplexF(n);
  for (int k = n - 1; k >= 1; --k) acc = acc * z + ComplexF(k) * a[k];
  return acc;
}

inline ComplexF newton_polish(const std::vector<ComplexF>& a, ComplexF z,
                              const TrackerOptions& opts) {
  for (int it = 0; it < opts.max_newton; ++it) {
    ComplexF fz = horner(a, z);
    if (std::abs(fz) < 0.1 * opts.residual_tol) break;
    ComplexF dfz = horner_derivative(a, z);
    if (std::abs(dfz) < 1e-300) break;
    z -= fz / dfz;
  }
  return z;
}

inline double min_pairwise_separation(const std::vector<ComplexF>& v) {
  double m = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j)
      m = std::min(m, std::abs(v[i] - v[j]));
  return m;
}

/// All roots of the monic polynomial with z-coeffs a: companion-matrix
/// eigenvalues followed by Newton polish. Unsorted.
inline std::vector<ComplexF> companion_roots(const std::vector<ComplexF>& a,
                                             const TrackerOptions& opts) {
  const int n = static_cast<int>(a.size());
  if (n == 1) return {-a[0]};
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
  for (int k = 0; k < n; ++k) comp(k, n - 1) = -a[k];
  for (int k = 1; k < n; ++k) comp(k, k - 1) = 1.0;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, false);
  if (solver.info() != Eigen::Success)
    throw NoConvergence("companion eigensolver failed");
  std::vector<ComplexF> roots(n);
  for (int k = 0; k < n; ++k)
    roots[k] = newton_polish(a, solver.eigenvalues()(k), opts);
  return roots;
}

inline void sort_lexicographic(std::vector<ComplexF>& roots) {
  std::sort(roots.begin(), roots.end(), [](ComplexF a, ComplexF b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
}

}  // namespace detail

/// All n roots of f at x, Newton-polished, in deterministic lexicographic
/// order by (re, im).
inline std::vector<ComplexF> roots_at(const WeierstrassSpec& f, ComplexF x,
                                      const TrackerOptions& opts = {}) {
  auto a = f.fiber_coeffs(x);
  auto roots = detail::companion_roots(a, opts);
  detail::sort_lexicographic(roots);
  double scale = 1.0;
  for (ComplexF r : roots) scale = std::max(scale, std::abs(r));
  if (detail::min_pairwise_separation(roots) <
      opts.collision_threshold * scale)
    throw RootCollision("repeated root at x = " + format_complex(x));
  for (ComplexF r : roots) {
    double res = std::abs(detail::horner(a, r));
    if (res > opts.residual_tol * std::max(1.0, std::pow(scale, f.n)))
      throw NoConvergence("root residual " + std::to_string(res) + " at x = " +
                          format_complex(x));
  }
  return roots;
}

/// Minimum of |disc(x)| over boundary circles and a polar grid of the
/// domain. Throws if the discriminant vanishes (or nearly so) on X.
inline double check_weierstrass(const WeierstrassSpec& f,
                                const TrackerOptions& opts = {}) {
  PolyFloat disc = discriminant_of(f).to_float();
  const Domain& d = f.domain;

  // A root of disc inside X is a hard violation regardless of sampling.
  if (disc.is_zero())
    throw WeierstrassViolation("discriminant is identically zero");
  if (disc.degree() >= 1) {
    std::vector<ComplexF> a(disc.c.begin(), disc.c.end() - 1);
    ComplexF lead = disc.c.back();
    for (auto& v : a) v /= lead;
    for (ComplexF r : detail::companion_roots(a, opts))
      if (d.contains(r, 0.5 * d.margin))
        throw WeierstrassViolation("discriminant root at x = " +
                                   format_complex(r));
  }

  double margin = std::numeric_limits<double>::infinity();
  auto sample = [&](ComplexF x) {
    margin = std::min(margin, std::abs(disc.eval(x)));
  };
  auto circle = [&](ComplexF c, double r) {
    for (int k = 0; k < opts.boundary_samples; ++k)
      sample(c + std::polar(r, 2.0 * M_PI * k / opts.boundary_samples));
  };
  circle(d.outer.center, d.outer.radius);
  for (const auto& h : d.holes) circle(h.center, h.radius);
  for (int ring = 0; ring <= opts.grid_rings; ++ring) {
    double r = d.outer.radius * ring / opts.grid_rings;
    int steps = std::max(1, 8 * ring);
    for (int k = 0; k < steps; ++k) {
      ComplexF x = d.outer.center + std::polar(r, 2.0 * M_PI * k / steps);
      bool inside = true;
      for (const auto& h : d.holes)
        inside &= dist(x, h.center) >= h.radius;
      if (inside) sample(x);
    }
  }
  if (margin < opts.weierstrass_threshold)
    throw WeierstrassViolation("sampled |disc| minimum " +
                               std::to_string(margin));
  return margin;
}

struct TrackResult {
  RootFiber end;                    // end.roots[i] continues start root i
  Permutation correspondence;      // i -> index in the canonical end fiber
  double max_residual = 0.0;
};

/// Predictor-corrector continuation of a full root fiber along a path, with
/// adaptive step halving and a nearest/second-nearest matching gate.
inline TrackResult track_path(const WeierstrassSpec& f, const Path& path,
                              const RootFiber& start,
                              const TrackerOptions& opts = {}) {
  if (dist(start.point, path.start()) > 1e-9)
    throw InputError("start fiber is not over the path's initial point");
  const double L = path.length();
  TrackResult result;
  result.max_residual = 0.0;

  std::vector<ComplexF> cur = start.roots;
  const int n = static_cast<int>(cur.size());
  if (L > 0) {
    const double initial = L * opts.initial_step_frac;
    const double min_step = L * opts.min_step_frac;
    double s = 0.0, step = initial;
    while (s < L) {
      double s2 = std::min(L, s + step);
      ComplexF x2 = path.point_at(s2);
      auto a2 = f.fiber_coeffs(x2);
      auto cand = detail::companion_roots(a2, opts);

      // Match each current root to its nearest candidate.
      std::vector<int> match(n, -1);
      bool ok = true;
      double minsep = detail::min_pairwise_separation(cur);
      for (int i = 0; i < n && ok; ++i) {
        double best = std::numeric_limits<double>::infinity();
        double second = best;
        for (int j = 0; j < n; ++j) {
          double dd = std::abs(cur[i] - cand[j]);
          if (dd < best) {
            second = best;
            best = dd;
            match[i] = j;
          } else if (dd < second) {
            second = dd;
          }
        }
        if (n > 1 && !(best < second / 3.0 && best < 0.5 * minsep)) ok = false;
      }
      if (ok) {
        std::vector<bool> used(n, false);
        for (int i = 0; i < n; ++i) {
          if (used[match[i]]) {
            ok = false;
            break;
          }
          used[match[i]] = true;
        }
        if (!ok) throw AmbiguousMatch("two roots matched the same successor");
      }
      if (!ok) {
        step *= 0.5;
        if (step < min_step)
          throw StepUnderflow("step fell below minimum at s = " +
                              std::to_string(s / L));
        continue;
      }
      std::vector<ComplexF> next(n);
      for (int i = 0; i < n; ++i)
        next[i] = detail::newton_polish(a2, cand[match[i]], opts);
      for (int i = 0; i < n; ++i)
        result.max_residual =
            std::max(result.max_residual, std::abs(detail::horner(a2, next[i])));
      cur = std::move(next);
      s = s2;
      step = std::min(initial, step * 2.0);
    }
  }

  result.end.point = path.end();
  result.end.roots = cur;

  // Index bijection against the canonical (lexicographically sorted) fiber.
  std::vector<ComplexF> canonical = cur;
  detail::sort_lexicographic(canonical);
  std::vector<int> img(n, -1);
  std::vector<bool> used(n, false);
  for (int i = 0; i < n; ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
      double dd = std::abs(cur[i] - canonical[j]);
      if (dd < best && !used[j]) {
        best = dd;
        img[i] = j;
      }
    }
    used[img[i]] = true;
  }
  result.correspondence = Permutation(std::move(img));
  return result;
}

/// Base fiber plus one counterclockwise-lasso permutation per hole.
/// Convention: tracking word w1 then w2 composes as perm(w2) * perm(w1).
inline MonodromyData monodromy(const WeierstrassSpec& f,
                               const TrackerOptions& opts = {}) {
  MonodromyData m;
  m.weierstrass_margin = check_weierstrass(f, opts);
  auto spider = validate_spider(f.domain);
  if (!spider.ok()) throw SpiderBlocked(spider.problems.front());
  m.base.point = f.domain.basepoint;
  m.base.roots = roots_at(f, f.domain.basepoint, opts);
  for (int j = 1; j <= f.domain.num_holes(); ++j) {
    auto res = track_path(f, generator_loop(f.domain, j), m.base, opts);
    m.gens.push_back(res.correspondence);
    m.max_residual = std::max(m.max_residual, res.max_residual);
  }
  return m;
}

/// Tracks the loop of a whole word; equals the composition of its letters.
inline Permutation track_word(const WeierstrassSpec& f, const LoopWord& w,
                              const RootFiber& base,
                              const TrackerOptions& opts = {}) {
  return track_path(f, loop_word(f.domain, w), base, opts).correspondence;
}

}  // namespace covgal
