#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "covgal/covering.hpp"
#include "covgal/domain.hpp"
#include "covgal/numerics.hpp"
#include "covgal/rationalize.hpp"
#include "covgal/tracking.hpp"

namespace covgal {

using Json = nlohmann::ordered_json;

inline Json complex_to_json(ComplexF z) { return Json::array({z.real(), z.imag()}); }

inline ComplexF complex_from_json(const Json& j) {
  if (j.is_number()) return ComplexF(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2)
    return ComplexF(j[0].get<double>(), j[1].get<double>());
  throw InputError("expected number or [re, im], got " + j.dump());
}

inline Json domain_to_json(const Domain& d) {
  Json j;
  j["outer"] = {{"center", complex_to_json(d.outer.center)},
                {"radius", d.outer.radius}};
  j["holes"] = Json::array();
  for (const auto& h : d.holes)
    j["holes"].push_back(
        {{"center", complex_to_json(h.center)}, {"radius", h.radius}});
  j["basepoint"] = complex_to_json(d.basepoint);
  return j;
}

inline Domain domain_from_json(const Json& j) {
  try {
    Disc outer{complex_from_json(j.at("outer").at("center")),
               j.at("outer").at("radius").get<double>()};
    std::vector<Disc> holes;
    for (const auto& h : j.value("holes", Json::array()))
      holes.push_back(Disc{complex_from_json(h.at("center")),
                           h.at("radius").get<double>()});
    std::optional<ComplexF> bp;
    if (j.contains("basepoint")) bp = complex_from_json(j.at("basepoint"));
    return build_domain(outer, holes, bp);
  } catch (const Json::exception& e) {
    throw InputError(std::string("bad domain: ") + e.what());
  }
}

/// Coefficient entries: exact values as "p/q+r/s i" strings (or JSON
/// integers), float values as numbers or [re, im] pairs. A polynomial is
/// exact iff every entry is exact.
inline Json polyx_to_json(const PolyX& p) {
  Json arr = Json::array();
  if (p.exact()) {
    for (const auto& q : p.as_exact().c) arr.push_back(to_string(q));
  } else {
    for (const auto& z : p.as_float().c) arr.push_back(complex_to_json(z));
  }
  return arr;
}

inline PolyX polyx_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("coefficient list must be an array");
  bool exact = true;
  for (const auto& e : j)
    exact &= e.is_string() || e.is_number_integer();
  if (exact) {
    PolyExact p;
    for (const auto& e : j)
      p.c.push_back(e.is_string()
                        ? gaussian_rational_from_string(e.get<std::string>())
                        : GaussianRational(Rat(e.get<long>())));
    p.trim();
    return PolyX(p);
  }
  PolyFloat p;
  for (const auto& e : j) {
    if (e.is_string())
      p.c.push_back(to_complex(gaussian_rational_from_string(e.get<std::string>())));
    else
      p.c.push_back(complex_from_json(e));
  }
  p.trim();
  return PolyX(p);
}

inline Json tracker_to_json(const TrackerOptions& o) {
  Json j;
  j["residual_tol"] = o.residual_tol;
  j["collision_threshold"] = o.collision_threshold;
  j["initial_step_frac"] = o.initial_step_frac;
  j["min_step_frac"] = o.min_step_frac;
  j["max_newton"] = o.max_newton;
  j["boundary_samples"] = o.boundary_samples;
  j["grid_rings"] = o.grid_rings;
  j["weierstrass_threshold"] = o.weierstrass_threshold;
  return j;
}

inline TrackerOptions tracker_from_json(const Json& j) {
  TrackerOptions o;
  o.residual_tol = j.value("residual_tol", o.residual_tol);
  o.collision_threshold = j.value("collision_threshold", o.collision_threshold);
  o.initial_step_frac = j.value("initial_step_frac", o.initial_step_frac);
  o.min_step_frac = j.value("min_step_frac", o.min_step_frac);
  o.max_newton = j.value("max_newton", o.max_newton);
  o.boundary_samples = j.value("boundary_samples", o.boundary_samples);
  o.grid_rings = j.value("grid_rings", o.grid_rings);
  o.weierstrass_threshold =
      j.value("weierstrass_threshold", o.weierstrass_threshold);
  return o;
}

inline Json spec_to_json(const WeierstrassSpec& f) {
  Json j;
  j["domain"] = domain_to_json(f.domain);
  Json coeffs = Json::array();
  for (const auto& c : f.coeffs) coeffs.push_back(polyx_to_json(c));
  j["polynomial"] = {{"degree", f.n}, {"coefficients", coeffs}};
  return j;
}

inline WeierstrassSpec spec_from_json(const Json& j) {
  try {
    Domain dom = domain_from_json(j.at("domain"));
    const Json& poly = j.at("polynomial");
    std::vector<PolyX> coeffs;
    for (const auto& c : poly.at("coefficients"))
      coeffs.push_back(polyx_from_json(c));
    int degree = poly.value("degree", static_cast<int>(coeffs.size()));
    if (degree != static_cast<int>(coeffs.size()))
      throw InputError("degree does not match the coefficient count");
    return WeierstrassSpec(std::move(coeffs), std::move(dom));
  } catch (const Json::exception& e) {
    throw InputError(std::string("bad spec: ") + e.what());
  }
}

inline Json cover_to_json(const FiniteCover& c) {
  Json j;
  j["degree"] = c.degree;
  Json gens = Json::array();
  for (const auto& g : c.action) gens.push_back(g.to_cycle_string());
  j["generators"] = gens;
  Json comps = Json::array();
  for (const auto& comp : c.components) {
    Json one = Json::array();
    for (int p : comp) one.push_back(p + 1);
    comps.push_back(one);
  }
  j["components"] = comps;
  j["galois"] = c.galois;
  return j;
}

inline Json group_to_json(const PermGroup& G) {
  Json j;
  j["order"] = G.order();
  Json gens = Json::array();
  for (const auto& g : G.generators) gens.push_back(g.to_cycle_string());
  j["generators"] = gens;
  j["identification"] = identify(G);
  return j;
}

inline Json correspondence_to_json(const CorrespondenceTable& t) {
  Json j;
  j["group_order"] = t.group.order();
  j["verified"] = t.verified;
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json r;
    r["subgroup_order"] = row.subgroup_order;
    r["cover_degree"] = row.cover_degree;
    Json elems = Json::array();
    for (int idx : row.subgroup.members)
      elems.push_back(t.group.elements[idx].to_cycle_string());
    r["subgroup"] = elems;
    r["cover"] = cover_to_json(row.cover);
    rows.push_back(std::move(r));
  }
  j["rows"] = rows;
  return j;
}

inline Json homotopy_report_to_json(const HomotopyReport& rep) {
  Json j;
  j["min_disc"] = rep.min_disc;
  j["coeff_deviation"] = rep.coeff_deviation;
  Json g0 = Json::array(), g1 = Json::array();
  for (const auto& g : rep.gens_start) g0.push_back(g.to_cycle_string());
  for (const auto& g : rep.gens_end) g1.push_back(g.to_cycle_string());
  j["generators_start"] = g0;
  j["generators_end"] = g1;
  j["fiber_matching"] = rep.fiber_matching.to_cycle_string();
  j["verdict"] = rep.pass ? "pass" : "fail";
  return j;
}

}  // namespace covgal
