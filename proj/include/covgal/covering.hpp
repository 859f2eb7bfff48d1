#pragma once

#include <map>
#include <vector>

#include <Eigen/Dense>

#include "covgal/errors.hpp"
#include "covgal/numerics.hpp"
#include "covgal/perm.hpp"
#include "covgal/tracking.hpp"

namespace covgal {

/// Combinatorial cover of X: finite fiber with one permutation per hole.
struct FiniteCover {
  int degree = 0;
  std::vector<Permutation> action;        // one per pi_1 generator
  std::vector<std::vector<int>> components;
  bool galois = false;
};

namespace detail {

/// Galois <=> the action restricted to one component is regular on it.
inline bool regular_on_components(const std::vector<Permutation>& action,
                                  const std::vector<std::vector<int>>& comps,
                                  long cap = 100000) {
  if (action.empty()) return comps.empty() || comps.front().size() == 1;
  for (const auto& comp : comps) {
    // Restrict generators to the component.
    std::map<int, int> local;
    for (size_t k = 0; k < comp.size(); ++k) local[comp[k]] = static_cast<int>(k);
    std::vector<Permutation> restricted;
    for (const auto& g : action) {
      std::vector<int> img(comp.size());
      for (size_t k = 0; k < comp.size(); ++k) img[k] = local.at(g(comp[k]));
      restricted.emplace_back(std::move(img));
    }
    PermGroup H = generate(restricted, cap);
    if (H.order() != static_cast<long>(comp.size())) return false;
  }
  return true;
}

inline FiniteCover make_cover(int degree, std::vector<Permutation> action) {
  FiniteCover c;
  c.degree = degree;
  c.action = std::move(action);
  c.components = orbits(c.action, degree);
  c.galois = regular_on_components(c.action, c.components);
  return c;
}

}  // namespace detail

/// The solution space as a cover: fiber {1..n} with the monodromy action.
inline FiniteCover solution_cover(const MonodromyData& m) {
  return detail::make_cover(static_cast<int>(m.base.roots.size()), m.gens);
}

/// Orbit of the identity ordering of the roots under the diagonal action;
/// degree |G|, always Galois, deck action the regular G-action.
inline FiniteCover splitting_cover(const MonodromyData& m, long cap = 100000) {
  const int n = static_cast<int>(m.base.roots.size());
  std::vector<Permutation> gens =
      m.gens.empty() ? std::vector<Permutation>{Permutation::identity(n)}
                     : m.gens;
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> fiber;
  std::vector<int> id_tuple(n);
  for (int k = 0; k < n; ++k) id_tuple[k] = k;
  fiber.push_back(id_tuple);
  index[id_tuple] = 0;
  for (size_t head = 0; head < fiber.size(); ++head) {
    std::vector<int> t = fiber[head];
    for (const auto& g : gens) {
      std::vector<int> u(n);
      for (int k = 0; k < n; ++k) u[k] = g(t[k]);
      if (index.emplace(u, static_cast<int>(fiber.size())).second) {
        fiber.push_back(u);
        if (static_cast<long>(fiber.size()) > cap)
          throw OrderCapExceeded("splitting cover exceeds cap");
      }
    }
  }
  std::vector<Permutation> action;
  for (const auto& g : gens) {
    std::vector<int> img(fiber.size());
    for (size_t t = 0; t < fiber.size(); ++t) {
      std::vector<int> u(n);
      for (int k = 0; k < n; ++k) u[k] = g(fiber[t][k]);
      img[t] = index.at(u);
    }
    action.emplace_back(std::move(img));
  }
  return detail::make_cover(static_cast<int>(fiber.size()), std::move(action));
}

/// All n! orderings of the fiber with the diagonal action (the n!-fold
/// cover of ordered tuples of distinct roots).
inline FiniteCover ambient_cover(const MonodromyData& m,
                                 bool allow_large = false) {
  const int n = static_cast<int>(m.base.roots.size());
  if (n > 5 && !allow_large)
    throw OrderCapExceeded("ambient cover capped at degree 5!");
  std::vector<Permutation> gens =
      m.gens.empty() ? std::vector<Permutation>{Permutation::identity(n)}
                     : m.gens;
  std::vector<int> t(n);
  for (int k = 0; k < n; ++k) t[k] = k;
  std::vector<std::vector<int>> tuples;
  std::map<std::vector<int>, int> index;
  do {
    index[t] = static_cast<int>(tuples.size());
    tuples.push_back(t);
  } while (std::next_permutation(t.begin(), t.end()));
  std::vector<Permutation> action;
  for (const auto& g : gens) {
    std::vector<int> img(tuples.size());
    for (size_t i = 0; i < tuples.size(); ++i) {
      std::vector<int> u(n);
      for (int k = 0; k < n; ++k) u[k] = g(tuples[i][k]);
      img[i] = index.at(u);
    }
    action.emplace_back(std::move(img));
  }
  return detail::make_cover(static_cast<int>(tuples.size()), std::move(action));
}

/// One row per subgroup H <= G: the intermediate cover with fiber G/H.
struct CorrespondenceRow {
  Subgroup subgroup;
  long subgroup_order = 0;
  long cover_degree = 0;  // = [G : H]
  FiniteCover cover;
};

struct CorrespondenceTable {
  PermGroup group;
  SubgroupLattice lattice;
  std::vector<CorrespondenceRow> rows;
  bool verified = false;  // anti-monotonicity and index identities
};

inline CorrespondenceTable correspondence(const MonodromyData& m,
                                          long lattice_cap = 120) {
  const int n = static_cast<int>(m.base.roots.size());
  std::vector<Permutation> gens =
      m.gens.empty() ? std::vector<Permutation>{Permutation::identity(n)}
                     : m.gens;
  CorrespondenceTable table;
  table.group = generate(gens);
  table.lattice = subgroups(table.group, lattice_cap);
  for (const auto& H : table.lattice.subgroups) {
    CorrespondenceRow row;
    row.subgroup = H;
    row.subgroup_order = H.order();
    row.cover_degree = table.group.order() / H.order();
    auto action = coset_action(table.group, H);
    row.cover = detail::make_cover(static_cast<int>(row.cover_degree),
                                   std::move(action));
    table.rows.push_back(std::move(row));
  }
  // The table always shows both ends of the lattice; for the trivial group
  // H = {e} = G collapses to one subgroup, listed twice.
  if (table.rows.size() == 1) table.rows.push_back(table.rows.front());
  // Anti-monotonicity: H <= J  =>  degree(cover(J)) divides degree(cover(H))
  // and the index identity [cover(H) : cover(J)] = [J : H] holds.
  table.verified = true;
  const auto& lat = table.lattice;
  for (size_t i = 0; i < table.rows.size(); ++i)
    for (size_t j = 0; j < table.rows.size(); ++j) {
      if (!lat.includes[j][i]) continue;  // S_i <= S_j
      long dH = table.rows[i].cover_degree, dJ = table.rows[j].cover_degree;
      long idx = lat.subgroups[j].order() / lat.subgroups[i].order();
      if (dH % dJ != 0 || dH / dJ != idx) table.verified = false;
    }
  return table;
}

// ---------------------------------------------------------------------------
// Factorization from orbits: interpolate elementary symmetric functions.
// ---------------------------------------------------------------------------

namespace detail {

/// Elementary symmetric values e_1..e_d of the given roots.
inline std::vector<ComplexF> elementary_symmetric(
    const std::vector<ComplexF>& roots) {
  std::vector<ComplexF> e(roots.size() + 1, 0.0);
  e[0] = 1.0;
  for (ComplexF r : roots)
    for (size_t k = e.size() - 1; k >= 1; --k) e[k] += r * e[k - 1];
  return {e.begin() + 1, e.end()};
}

/// Sample points in X whose straight corridor from the basepoint is clear.
inline std::vector<ComplexF> reachable_samples(const Domain& d, int wanted) {
  std::vector<ComplexF> out;
  const int rings = 24;
  for (int ring = 1; ring <= rings && static_cast<int>(out.size()) < wanted;
       ++ring) {
    double r = d.outer.radius * (ring - 0.5) / rings;
    int steps = 8 * ring;
    for (int k = 0; k < steps && static_cast<int>(out.size()) < wanted; ++k) {
      ComplexF x =
          d.outer.center + std::polar(r, 2.0 * M_PI * (k + 0.37) / steps);
      if (!d.contains(x, d.margin)) continue;
      bool clear = true;
      for (const auto& h : d.holes)
        clear &= segment_distance(d.basepoint, x, h.center) >
                 h.radius + 0.5 * d.margin;
      if (clear) out.push_back(x);
    }
  }
  return out;
}

/// Least-squares polynomial fit of degree <= bound; returns coefficients
/// and the maximum residual over the samples.
inline std::pair<PolyFloat, double> fit_polynomial(
    const std::vector<ComplexF>& xs, const std::vector<ComplexF>& ys,
    int bound) {
  const int m = static_cast<int>(xs.size());
  const int cols = bound + 1;
  Eigen::MatrixXcd A(m, cols);
  Eigen::VectorXcd b(m);
  for (int r = 0; r < m; ++r) {
    ComplexF p = 1.0;
    for (int c = 0; c < cols; ++c) {
      A(r, c) = p;
      p *= xs[r];
    }
    b(r) = ys[r];
  }
  Eigen::VectorXcd sol = A.colPivHouseholderQr().solve(b);
  double resid = (A * sol - b).cwiseAbs().maxCoeff();
  PolyFloat poly;
  poly.c.assign(sol.data(), sol.data() + cols);
  double maxc = 1e-300;
  for (ComplexF v : poly.c) maxc = std::max(maxc, std::abs(v));
  for (auto& v : poly.c)
    if (std::abs(v) < 1e-9 * maxc) v = 0.0;
  poly.trim();
  return {poly, resid};
}

}  // namespace detail

/// One monic factor of f per orbit of the monodromy action, recovered by
/// interpolating the orbit's elementary symmetric functions over X.
inline std::vector<WeierstrassSpec> factor(const WeierstrassSpec& f,
                                           const MonodromyData& m,
                                           const TrackerOptions& opts = {}) {
  const int n = f.n;
  auto orbit_list = orbits(m.gens, n);
  int dmax = 0;
  for (const auto& c : f.coeffs) dmax = std::max(dmax, std::max(0, c.degree()));
  const int bound = std::max(1, n * std::max(1, dmax));

  auto xs = detail::reachable_samples(f.domain, 2 * (bound + 1) + 8);
  if (static_cast<int>(xs.size()) < bound + 1)
    throw InterpolationFailure("not enough reachable sample points");

  // Track the fiber from the basepoint to every sample point.
  std::vector<std::vector<ComplexF>> fibers;  // indexed like the base fiber
  for (ComplexF x : xs) {
    Path seg;
    seg.anchor = f.domain.basepoint;
    seg.segments.push_back(LineSeg{f.domain.basepoint, x});
    fibers.push_back(track_path(f, seg, m.base, opts).end.roots);
  }

  // Single-valuedness: the symmetric functions of each orbit must return to
  // themselves after every generator loop (they do combinatorially; this
  // checks the numerics).
  for (int j = 1; j <= f.domain.num_holes(); ++j) {
    auto res = track_path(f, generator_loop(f.domain, j), m.base, opts);
    for (const auto& orbit : orbit_list) {
      std::vector<ComplexF> before, after;
      for (int i : orbit) {
        before.push_back(m.base.roots[i]);
        after.push_back(res.end.roots[i]);
      }
      auto eb = detail::elementary_symmetric(before);
      auto ea = detail::elementary_symmetric(after);
      for (size_t k = 0; k < eb.size(); ++k)
        if (std::abs(eb[k] - ea[k]) > 1e-6 * std::max(1.0, std::abs(eb[k])))
          throw ResidualTooLarge("orbit symmetric function not single-valued");
    }
  }

  std::vector<WeierstrassSpec> factors;
  for (const auto& orbit : orbit_list) {
    const int d = static_cast<int>(orbit.size());
    // e_k(x) sampled across X, one polynomial fit per k.
    std::vector<PolyFloat> esf(d);
    for (int k = 0; k < d; ++k) {
      std::vector<ComplexF> ys;
      for (const auto& fib : fibers) {
        std::vector<ComplexF> orbit_roots;
        for (int i : orbit) orbit_roots.push_back(fib[i]);
        ys.push_back(detail::elementary_symmetric(orbit_roots)[k]);
      }
      auto [poly, resid] = detail::fit_polynomial(xs, ys, bound);
      double scale = 1.0;
      for (ComplexF y : ys) scale = std::max(scale, std::abs(y));
      if (resid > 1e-6 * scale)
        throw InterpolationFailure(
            "symmetric function is not a polynomial of degree <= " +
            std::to_string(bound));
      esf[k] = std::move(poly);
    }
    // Monic factor: z^d - e_1 z^{d-1} + e_2 z^{d-2} - ... + (-1)^d e_d.
    std::vector<PolyX> fc(d);
    for (int k = 1; k <= d; ++k) {
      PolyFloat c = esf[k - 1];
      if (k % 2 == 1)
        for (auto& v : c.c) v = -v;
      fc[d - k] = PolyX(c);
    }
    factors.emplace_back(std::move(fc), f.domain);
  }

  // Rationalize when f is exact, and accept only on exact reassembly.
  if (f.exact()) {
    std::vector<WeierstrassSpec> exact_factors;
    bool ok = true;
    for (const auto& g : factors) {
      std::vector<PolyX> fc;
      for (const auto& c : g.coeffs) {
        PolyExact p;
        for (ComplexF v : c.as_float().c)
          p.c.push_back(rationalize_value(v, BigInt(1000000)));
        p.trim();
        fc.push_back(PolyX(p));
      }
      exact_factors.emplace_back(std::move(fc), f.domain);
    }
    // Multiply the factors as polynomials in z with PolyExact coefficients.
    std::vector<PolyExact> acc{PolyExact::constant(GaussianRational(1))};
    for (const auto& g : exact_factors) {
      std::vector<PolyExact> gcoef;
      for (const auto& c : g.coeffs) gcoef.push_back(c.as_exact());
      gcoef.push_back(PolyExact::constant(GaussianRational(1)));
      std::vector<PolyExact> next(acc.size() + gcoef.size() - 1);
      for (size_t i = 0; i < acc.size(); ++i)
        for (size_t j = 0; j < gcoef.size(); ++j)
          next[i + j] = next[i + j] + acc[i] * gcoef[j];
      acc = std::move(next);
    }
    if (static_cast<int>(acc.size()) == n + 1 &&
        acc.back() == PolyExact::constant(GaussianRational(1))) {
      for (int k = 0; k < n && ok; ++k) ok = acc[k] == f.coeffs[k].as_exact();
    } else {
      ok = false;
    }
    if (ok) return exact_factors;
  }

  // Float verification: the product matches f on the samples.
  for (ComplexF x : xs) {
    for (size_t t = 0; t < 4; ++t) {
      ComplexF z = std::polar(1.0 + 0.3 * t, 0.7 * t + 0.1);
      ComplexF lhs = detail::horner(f.fiber_coeffs(x), z);
      ComplexF rhs = 1.0;
      for (const auto& g : factors) rhs *= detail::horner(g.fiber_coeffs(x), z);
      if (std::abs(lhs - rhs) > 1e-8 * std::max(1.0, std::abs(lhs)))
        throw ResidualTooLarge("factor product mismatch at a sample");
    }
  }
  return factors;
}

/// Pullback of an annulus spec along y -> center + y^k; returns the pulled
/// spec and checks its group embeds as the k-th power of the generator.
struct PullbackResult {
  WeierstrassSpec pulled;
  MonodromyData pulled_monodromy;
  bool embedding_verified = false;
};

inline PullbackResult pullback_power(const WeierstrassSpec& f,
                                     const MonodromyData& m, int k,
                                     const TrackerOptions& opts = {}) {
  if (k < 1) throw InputError("power must be >= 1");
  const Domain& d = f.domain;
  if (d.num_holes() != 1 || dist(d.holes[0].center, d.outer.center) > 1e-12)
    throw InputError("pullback requires the concentric annulus model");
  ComplexF c = d.outer.center;

  // Pulled-back annulus: radii are k-th roots of the original ones.
  Disc outer{c, std::pow(d.outer.radius, 1.0 / k)};
  Disc hole{c, std::pow(d.holes[0].radius, 1.0 / k)};
  ComplexF y0 = c + ComplexF(std::pow(std::abs(d.basepoint - c), 1.0 / k), 0.0);
  Domain pulled_dom = build_domain(outer, {hole}, y0);

  // Substitute x = c + y^k into every coefficient.
  PolyFloat subst;
  subst.c.assign(static_cast<size_t>(k) + 1, ComplexF(0.0));
  subst.c[0] = c;
  subst.c[k] = 1.0;
  subst.trim();
  std::vector<PolyX> coeffs;
  for (const auto& a : f.coeffs)
    coeffs.push_back(PolyX(a.to_float().compose(subst)));
  PullbackResult res{WeierstrassSpec(std::move(coeffs), pulled_dom), {}, false};
  res.pulled_monodromy = monodromy(res.pulled, opts);

  // The base fibers agree when the original basepoint sits at angle 0 on its
  // domain; then the pulled generator must equal the k-th power.
  ComplexF x0 = c + std::pow(y0 - c, ComplexF(double(k)));
  if (dist(x0, d.basepoint) < 1e-9 && m.gens.size() == 1)
    res.embedding_verified =
        res.pulled_monodromy.gens[0] == m.gens[0].power(k);
  return res;
}

}  // namespace covgal
