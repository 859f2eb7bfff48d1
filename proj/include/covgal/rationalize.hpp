#pragma once

#include <string>
#include <vector>

#include "covgal/covering.hpp"
#include "covgal/errors.hpp"
#include "covgal/numerics.hpp"
#include "covgal/perm.hpp"
#include "covgal/tracking.hpp"

namespace covgal {

struct HomotopyReport {
  double min_disc = 0.0;        // min |disc| over the (x, t) sample grid
  std::vector<double> coeff_deviation;  // sup-norm per z-coefficient
  std::vector<Permutation> gens_start, gens_end;
  Permutation fiber_matching;   // base fiber of f0 -> base fiber of f1
  bool pass = false;
};

namespace detail {

inline std::vector<ComplexF> domain_samples(const Domain& d, int boundary,
                                            int rings) {
  std::vector<ComplexF> xs;
  auto circle = [&](ComplexF c, double r) {
    for (int k = 0; k < boundary; ++k)
      xs.push_back(c + std::polar(r, 2.0 * M_PI * k / boundary));
  };
  circle(d.outer.center, d.outer.radius);
  for (const auto& h : d.holes) circle(h.center, h.radius);
  for (int ring = 1; ring <= rings; ++ring) {
    double r = d.outer.radius * (ring - 0.5) / rings;
    int steps = 8 * ring;
    for (int k = 0; k < steps; ++k) {
      ComplexF x = d.outer.center + std::polar(r, 2.0 * M_PI * k / steps);
      if (d.contains(x, 0.0)) xs.push_back(x);
    }
  }
  return xs;
}

}  // namespace detail

/// Samples the linear coefficient homotopy H(x,t) = (1-t) f0 + t f1 on an
/// (x, t) grid, requiring the discriminant to stay away from zero, then
/// compares the two monodromy groups after matching base fibers.
inline HomotopyReport verify_homotopy(const WeierstrassSpec& f0,
                                      const WeierstrassSpec& f1,
                                      const TrackerOptions& opts = {},
                                      int t_steps = 64) {
  if (f0.n != f1.n) throw InputError("homotopy requires equal degrees");
  HomotopyReport rep;

  auto a0 = f0.float_coeffs(), a1 = f1.float_coeffs();
  auto xs = detail::domain_samples(f0.domain, opts.boundary_samples,
                                   opts.grid_rings);
  for (size_t k = 0; k < a0.size(); ++k) {
    double dev = 0.0;
    for (ComplexF x : xs)
      dev = std::max(dev, std::abs(a0[k].eval(x) - a1[k].eval(x)));
    rep.coeff_deviation.push_back(dev);
  }

  rep.min_disc = std::numeric_limits<double>::infinity();
  for (int ti = 0; ti <= t_steps; ++ti) {
    double t = double(ti) / t_steps;
    std::vector<PolyFloat> blend(a0.size());
    for (size_t k = 0; k < a0.size(); ++k)
      blend[k] = ComplexF(1.0 - t) * a0[k] + ComplexF(t) * a1[k];
    PolyFloat disc = discriminant(blend);
    for (ComplexF x : xs)
      rep.min_disc = std::min(rep.min_disc, std::abs(disc.eval(x)));
    if (rep.min_disc < opts.weierstrass_threshold)
      throw HomotopyLeavesB("|disc| fell to " + std::to_string(rep.min_disc) +
                            " at t = " + std::to_string(t));
    // The sampled minimum can miss a zero between grid points; a root of
    // the blended discriminant inside the domain is a hard rejection.
    if (disc.degree() >= 1) {
      std::vector<ComplexF> a(disc.c.begin(), disc.c.end() - 1);
      for (auto& v : a) v /= disc.c.back();
      for (ComplexF r : detail::companion_roots(a, opts))
        if (f0.domain.contains(r, 0.5 * f0.domain.margin))
          throw HomotopyLeavesB("discriminant root crosses the domain at x = " +
                                format_complex(r) + ", t = " +
                                std::to_string(t));
    }
  }

  MonodromyData m0 = monodromy(f0, opts);
  MonodromyData m1 = monodromy(f1, opts);
  rep.gens_start = m0.gens;
  rep.gens_end = m1.gens;

  // Match base fibers by nearest neighbor.
  const int n = f0.n;
  std::vector<int> img(n, -1);
  std::vector<bool> used(n, false);
  for (int i = 0; i < n; ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
      double d = std::abs(m0.base.roots[i] - m1.base.roots[j]);
      if (!used[j] && d < best) {
        best = d;
        img[i] = j;
      }
    }
    used[img[i]] = true;
  }
  rep.fiber_matching = Permutation(img);

  rep.pass = m0.gens.size() == m1.gens.size();
  for (size_t j = 0; j < m0.gens.size() && rep.pass; ++j)
    rep.pass = m1.gens[j] * rep.fiber_matching ==
               rep.fiber_matching * m0.gens[j];
  if (!rep.pass)
    throw GroupMismatch("matched generator permutations differ");
  return rep;
}

/// Rationalizes every coefficient into Q(i)[x] with denominators bounded by
/// den_bound, doubling the bound until the homotopy verification passes.
inline WeierstrassSpec approximate_coeffs(const WeierstrassSpec& f,
                                          BigInt den_bound,
                                          const TrackerOptions& opts = {},
                                          int max_doublings = 16) {
  if (f.exact()) return f;
  for (int attempt = 0; attempt <= max_doublings; ++attempt) {
    std::vector<PolyX> coeffs;
    for (const auto& c : f.coeffs) {
      PolyExact p;
      for (ComplexF v : c.to_float().c)
        p.c.push_back(rationalize_value(v, den_bound));
      p.trim();
      coeffs.push_back(PolyX(p));
    }
    WeierstrassSpec candidate(std::move(coeffs), f.domain);
    try {
      verify_homotopy(f, candidate, opts);
      return candidate;
    } catch (const HomotopyLeavesB&) {
    } catch (const GroupMismatch&) {
    } catch (const WeierstrassViolation&) {
    }
    den_bound *= 2;
  }
  throw BoundExhausted("no denominator bound gave an equivalent covering");
}

/// Pretty-prints the exact polynomial over Q(i)(x) together with its group.
inline std::string emit_function_field_poly(const WeierstrassSpec& f,
                                            const PermGroup& group,
                                            const std::string& group_name) {
  if (!f.exact()) throw InputError("emit requires exact coefficients");
  std::string poly = "z^" + std::to_string(f.n);
  for (int k = f.n - 1; k >= 0; --k) {
    const PolyExact& c = f.coeffs[k].as_exact();
    if (c.is_zero()) continue;
    std::string cs = poly_to_string(c, "x");
    poly += " + (" + cs + ")";
    if (k > 0) {
      poly += "*z";
      if (k > 1) poly += "^" + std::to_string(k);
    }
  }
  std::string out = "f(z) = " + poly + "   over Q(i)(x)\n";
  out += "Galois group of the splitting field of f over Q(i)(x): " +
         group_name + " (order " + std::to_string(group.order()) + ")\n";
  out +=
      "note: the subring hypothesis linking the function field to the "
      "topological model is assumed, not computed\n";
  return out;
}

}  // namespace covgal
