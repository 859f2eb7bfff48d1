#pragma once

#include <random>
#include <string>
#include <vector>

#include "covgal/covering.hpp"
#include "covgal/errors.hpp"
#include "covgal/rationalize.hpp"
#include "covgal/tracking.hpp"

namespace covgal {

/// A produced Weierstrass spec together with its monodromy certificate.
struct RealizationSpec {
  std::string target_description;
  WeierstrassSpec spec;
  MonodromyData certificate;
  PermGroup achieved;
  std::string identification;
  bool isomorphism_verified = true;  // false: order/signature match only
  unsigned long seed = 0;
  int budget = 1;
  int candidates_tried = 1;
};

namespace detail {

/// Exact linear polynomial lambda * (x - c) when both values round-trip
/// through Q(i); float otherwise.
inline PolyX linear_coeff(ComplexF lambda, ComplexF c) {
  GaussianRational lq = rationalize_value(lambda, BigInt(1000000));
  GaussianRational cq = rationalize_value(c, BigInt(1000000));
  if (to_complex(lq) == lambda && to_complex(cq) == c) {
    PolyExact p;
    p.c = {-(lq * cq), lq};
    p.trim();
    return PolyX(p);
  }
  PolyFloat p;
  p.c = {-lambda * c, lambda};
  p.trim();
  return PolyX(p);
}

/// Domain with holes around clusters of branch points; basepoint angle is
/// retried until the spider routing is valid.
inline Domain domain_around(std::vector<ComplexF> branch_points) {
  if (branch_points.empty())
    return build_domain(Disc{ComplexF(0, 0), 2.0}, {});
  // Single-linkage clustering at a tolerance relative to the point spread.
  double scale = 1.0;
  for (size_t i = 0; i < branch_points.size(); ++i)
    for (size_t j = i + 1; j < branch_points.size(); ++j)
      scale = std::max(scale, dist(branch_points[i], branch_points[j]));
  std::vector<std::vector<ComplexF>> clusters;
  for (ComplexF p : branch_points) clusters.push_back({p});
  auto cluster_dist = [](const std::vector<ComplexF>& a,
                         const std::vector<ComplexF>& b) {
    double d = std::numeric_limits<double>::infinity();
    for (ComplexF x : a)
      for (ComplexF y : b) d = std::min(d, dist(x, y));
    return d;
  };
  const double tol = 0.15 * scale;
  bool merged = true;
  while (merged) {
    merged = false;
    for (size_t i = 0; i < clusters.size() && !merged; ++i)
      for (size_t j = i + 1; j < clusters.size() && !merged; ++j)
        if (cluster_dist(clusters[i], clusters[j]) < tol) {
          clusters[i].insert(clusters[i].end(), clusters[j].begin(),
                             clusters[j].end());
          clusters.erase(clusters.begin() + j);
          merged = true;
        }
  }
  std::vector<Disc> holes;
  for (const auto& cl : clusters) {
    ComplexF centroid = 0.0;
    for (ComplexF p : cl) centroid += p;
    centroid /= double(cl.size());
    double spread = 0.0;
    for (ComplexF p : cl) spread = std::max(spread, dist(p, centroid));
    double nearest = std::numeric_limits<double>::infinity();
    for (const auto& other : clusters) {
      if (&other == &cl) continue;
      for (ComplexF p : cl)
        for (ComplexF q : other) nearest = std::min(nearest, dist(p, q));
    }
    double radius = 1.3 * spread + 0.05 * scale;
    if (std::isfinite(nearest)) radius = std::min(radius + 0.1 * nearest, 0.35 * nearest);
    radius = std::max(radius, 1.3 * spread + 0.02 * scale);
    holes.push_back(Disc{centroid, radius});
  }
  ComplexF center = 0.0;
  for (const auto& h : holes) center += h.center;
  center /= double(holes.size());
  double outer_r = 1.0;
  for (const auto& h : holes)
    outer_r = std::max(outer_r, dist(h.center, center) + h.radius);
  outer_r = 1.7 * outer_r + 0.5;
  Disc outer{center, outer_r};
  // Holes may still overlap after the radius heuristics; merge-and-retry is
  // handled by the caller catching OverlappingHoles.
  for (int attempt = 0; attempt < 16; ++attempt) {
    double angle = 2.0 * M_PI * attempt / 16.0 + 0.13;
    ComplexF bp = center + std::polar(outer_r * 0.93, angle);
    try {
      Domain d = build_domain(outer, holes, bp);
      if (validate_spider(d).ok()) return d;
    } catch (const BasepointInHole&) {
    }
  }
  throw SpiderBlocked("no basepoint angle admits lassos to every hole");
}

inline std::vector<ComplexF> branch_points_of(const WeierstrassSpec& f,
                                              const TrackerOptions& opts) {
  PolyFloat disc = discriminant(f.float_coeffs());
  if (disc.degree() < 1) return {};
  std::vector<ComplexF> a(disc.c.begin(), disc.c.end() - 1);
  for (auto& v : a) v /= disc.c.back();
  return companion_roots(a, opts);
}

}  // namespace detail

/// z^n - (x - c) on a disc with one hole at c; group Z_n by construction,
/// certified by monodromy.
inline RealizationSpec realize_cyclic(int n, Disc hole = {ComplexF(0, 0), 0.3},
                                      const TrackerOptions& opts = {}) {
  if (n < 1) throw InputError("n must be >= 1");
  std::vector<PolyX> coeffs(n);
  coeffs[0] = detail::linear_coeff(ComplexF(-1.0), hole.center);
  for (int k = 1; k < n; ++k) coeffs[k] = PolyX(PolyExact{});
  Disc outer{hole.center, std::max(2.0, 6.0 * hole.radius)};
  WeierstrassSpec spec(std::move(coeffs), build_domain(outer, {hole}));
  RealizationSpec out;
  out.target_description = "cyclic " + std::to_string(n);
  out.spec = spec;
  out.certificate = monodromy(spec, opts);
  out.achieved = generate(out.certificate.gens.empty()
                              ? std::vector<Permutation>{Permutation::identity(n)}
                              : out.certificate.gens);
  out.identification = identify(out.achieved);
  if (out.achieved.order() != n)
    throw GroupMismatch("cyclic realization produced order " +
                        std::to_string(out.achieved.order()));
  return out;
}

/// Product of cyclic blocks: prod_j (z^{n_j} - lambda_j (x - c_j)) on a disc
/// with one hole per factor; lambdas are retried until the Weierstrass
/// condition holds on the whole domain.
inline RealizationSpec realize_abelian_product(const std::vector<int>& orders,
                                               const TrackerOptions& opts = {},
                                               unsigned long seed = 7,
                                               int retries = 40) {
  if (orders.empty()) throw InputError("need at least one order");
  const int m = static_cast<int>(orders.size());
  std::vector<Disc> holes;
  for (int j = 0; j < m; ++j)
    holes.push_back(Disc{ComplexF(2.0 * j, 0.0), 0.35});
  ComplexF center(double(m - 1), 0.0);
  Disc outer{center, 2.0 * m + 1.5};
  Domain dom = build_domain(outer, holes,
                            center + ComplexF(0.0, 0.6 * (2.0 * m + 1.5)));

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> sixteenths(8, 32);
  for (int attempt = 0; attempt < retries; ++attempt) {
    std::vector<ComplexF> lambdas(m);
    for (int j = 0; j < m; ++j)
      lambdas[j] = attempt == 0 ? ComplexF(1.0 + (j + 1) / 8.0, 0.0)
                                : ComplexF(sixteenths(rng) / 16.0, 0.0);
    // Assemble the product as a polynomial in z with PolyX coefficients.
    std::vector<PolyExact> acc{PolyExact::constant(GaussianRational(1))};
    bool exact_ok = true;
    for (int j = 0; j < m && exact_ok; ++j) {
      PolyX lin = detail::linear_coeff(-lambdas[j], holes[j].center);
      exact_ok = lin.exact();
      if (!exact_ok) break;
      std::vector<PolyExact> fac(orders[j] + 1);
      fac[0] = lin.as_exact();
      fac[orders[j]] = PolyExact::constant(GaussianRational(1));
      std::vector<PolyExact> next(acc.size() + fac.size() - 1);
      for (size_t a = 0; a < acc.size(); ++a)
        for (size_t b = 0; b < fac.size(); ++b)
          next[a + b] = next[a + b] + acc[a] * fac[b];
      acc = std::move(next);
    }
    if (!exact_ok) continue;
    std::vector<PolyX> coeffs(acc.size() - 1);
    for (size_t k = 0; k + 1 < acc.size(); ++k) coeffs[k] = PolyX(acc[k]);
    WeierstrassSpec spec(std::move(coeffs), dom);
    try {
      RealizationSpec out;
      out.seed = seed;
      out.candidates_tried = attempt + 1;
      out.target_description = [&] {
        std::string s = "abelian product";
        for (int o : orders) s += " " + std::to_string(o);
        return s;
      }();
      out.spec = spec;
      out.certificate = monodromy(spec, opts);
      out.achieved = generate(out.certificate.gens);
      out.identification = identify(out.achieved);
      long want = 1;
      for (int o : orders) want *= o;
      if (out.achieved.order() != want)
        throw GroupMismatch("order " + std::to_string(out.achieved.order()));
      return out;
    } catch (const WeierstrassViolation&) {
    } catch (const GroupMismatch&) {
    }
  }
  throw WeierstrassViolation("no lambda choice kept the product separable");
}

/// Specs of the shape z^n + p z + q(x), holes around the branch points,
/// searched until the full symmetric group appears. Deterministic first
/// attempt z^3 - 3z + 2x for n = 3.
inline RealizationSpec realize_symmetric(int n, const TrackerOptions& opts = {}) {
  if (n < 2) throw InputError("n must be >= 2");
  if (n == 2) {
    auto out = realize_cyclic(2);
    out.target_description = "symmetric 2";
    return out;
  }

  auto attempt = [&](ComplexF p, ComplexF qlin,
                     bool prefer_fixed_holes) -> RealizationSpec {
    std::vector<PolyX> coeffs(n);
    PolyExact pq;
    GaussianRational pr = rationalize_value(p, BigInt(1000));
    GaussianRational qr = rationalize_value(qlin, BigInt(1000));
    coeffs[0] = PolyX(PolyExact(std::vector<GaussianRational>{
        GaussianRational(0), qr}));
    coeffs[1] = PolyX(PolyExact(std::vector<GaussianRational>{pr}));
    for (int k = 2; k < n; ++k) coeffs[k] = PolyX(PolyExact{});
    WeierstrassSpec probe(coeffs, build_domain(Disc{ComplexF(0, 0), 1.0}, {}));
    Domain dom;
    if (prefer_fixed_holes && n == 3) {
      dom = build_domain(Disc{ComplexF(0, 0), 3.0},
                         {Disc{ComplexF(1, 0), 0.35}, Disc{ComplexF(-1, 0), 0.35}});
    } else {
      dom = detail::domain_around(detail::branch_points_of(probe, opts));
    }
    WeierstrassSpec spec(coeffs, dom);
    RealizationSpec out;
    out.target_description = "symmetric " + std::to_string(n);
    out.spec = spec;
    out.certificate = monodromy(spec, opts);
    out.achieved = generate(out.certificate.gens);
    out.identification = identify(out.achieved);
    long want = 1;
    for (int k = 2; k <= n; ++k) want *= k;
    if (out.achieved.order() != want) throw GroupMismatch("not symmetric");
    return out;
  };

  std::vector<std::pair<ComplexF, ComplexF>> candidates;
  if (n == 3) candidates.push_back({ComplexF(-3, 0), ComplexF(2, 0)});
  for (double p : {-1.0, -2.0, 1.0, -3.0, 2.0})
    for (double q : {1.0, 2.0}) candidates.push_back({ComplexF(p, 0), ComplexF(q, 0)});
  int tried = 0;
  for (const auto& [p, q] : candidates) {
    ++tried;
    try {
      auto out = attempt(p, q, tried == 1);
      out.candidates_tried = tried;
      out.budget = static_cast<int>(candidates.size());
      return out;
    } catch (const Error&) {
      if (tried == static_cast<int>(candidates.size())) throw;
    }
  }
  throw SearchBudgetExhausted("no candidate produced the symmetric group");
}

namespace detail {

struct GroupSignature {
  long order;
  bool abelian;
  std::vector<long> element_orders;  // sorted
  std::vector<long> orbit_sizes;     // sorted

  friend bool operator==(const GroupSignature&,
                         const GroupSignature&) = default;
};

inline GroupSignature signature_of(const PermGroup& G) {
  GroupSignature s;
  s.order = G.order();
  s.abelian = G.is_abelian();
  for (const auto& e : G.elements) s.element_orders.push_back(e.order());
  std::sort(s.element_orders.begin(), s.element_orders.end());
  for (const auto& orb : orbits(G)) s.orbit_sizes.push_back(orb.size());
  std::sort(s.orbit_sizes.begin(), s.orbit_sizes.end());
  return s;
}

}  // namespace detail

/// Randomized search for a spec whose monodromy group matches the target's
/// (order, abelianness, element-order statistics, orbit signature).
inline RealizationSpec realize_search(const std::vector<Permutation>& target_gens,
                                      int budget, unsigned long seed,
                                      const TrackerOptions& opts = {}) {
  if (target_gens.empty()) throw InputError("no target generators");
  PermGroup target = generate(target_gens);
  if (target.degree > 8) throw InputError("target degree capped at 8");
  auto want = detail::signature_of(target);
  const int n = target.degree;
  const int m = static_cast<int>(target_gens.size());

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-3, 3), den(1, 2), deg(0, 1);
  int tried = 0;
  for (int cand = 0; cand < budget; ++cand) {
    ++tried;
    std::vector<PolyX> coeffs(n);
    for (int k = 0; k < n; ++k) {
      PolyExact p;
      int d = k == 0 ? 1 : deg(rng);  // a_0 always gets x-dependence
      for (int e = 0; e <= d; ++e)
        p.c.push_back(GaussianRational(Rat(num(rng), den(rng)),
                                       Rat(num(rng), 2 * den(rng))));
      if (k == 0 && (p.degree() < 1 || p.c[1].is_zero()))
        p.c = {p.coeff(0), GaussianRational(1)};
      p.trim();
      coeffs[k] = PolyX(p);
    }
    try {
      WeierstrassSpec probe(coeffs,
                            build_domain(Disc{ComplexF(0, 0), 1.0}, {}));
      auto branch = detail::branch_points_of(probe, opts);
      Domain dom = detail::domain_around(branch);
      if (dom.num_holes() != m) continue;
      WeierstrassSpec spec(coeffs, dom);
      RealizationSpec out;
      out.target_description = "search";
      out.spec = spec;
      out.certificate = monodromy(spec, opts);
      out.achieved = generate(out.certificate.gens, 100000);
      if (!(detail::signature_of(out.achieved) == want)) continue;
      out.identification = identify(out.achieved);
      out.isomorphism_verified = false;  // signature heuristic only
      out.seed = seed;
      out.budget = budget;
      out.candidates_tried = tried;
      return out;
    } catch (const Error&) {
      continue;
    }
  }
  throw SearchBudgetExhausted("no candidate matched in " +
                              std::to_string(budget) + " tries");
}

/// Re-expresses any realization with coefficients in Q(i)[x], re-certifying
/// the group through the homotopy check.
inline RealizationSpec realize_rational(const RealizationSpec& r,
                                        BigInt den_bound = 64,
                                        const TrackerOptions& opts = {}) {
  RealizationSpec out = r;
  out.spec = approximate_coeffs(r.spec, den_bound, opts);
  out.certificate = monodromy(out.spec, opts);
  out.achieved = generate(out.certificate.gens.empty()
                              ? std::vector<Permutation>{Permutation::identity(
                                    out.spec.n)}
                              : out.certificate.gens);
  out.identification = identify(out.achieved);
  if (out.achieved.order() != r.achieved.order())
    throw GroupMismatch("group changed under rationalization");
  return out;
}

}  // namespace covgal
