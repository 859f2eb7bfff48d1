// covgal: monodromy groups of Weierstrass polynomials over planar domains.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "covgal/covering.hpp"
#include "covgal/json_io.hpp"
#include "covgal/rationalize.hpp"
#include "covgal/realize.hpp"
#include "covgal/tracking.hpp"
#include "covgal/vandermonde.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

covgal::Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw covgal::InputError("cannot open " + path);
  try {
    return covgal::Json::parse(in);
  } catch (const covgal::Json::exception& e) {
    throw covgal::InputError(std::string("JSON parse error: ") + e.what());
  }
}

void emit(const covgal::Json& j, bool pretty, const std::string& out_path) {
  std::string text = pretty ? j.dump(2) : j.dump();
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(out_path);
    out << text << "\n";
  }
}

covgal::Json tool_header(unsigned long seed) {
  covgal::Json j;
  j["tool"] = {{"name", "covgal"}, {"version", kVersion}};
  j["seed"] = seed;
  return j;
}

struct SpecInput {
  covgal::WeierstrassSpec spec;
  covgal::TrackerOptions opts;
};

SpecInput load_spec(const std::string& path) {
  covgal::Json j = load_json(path);
  SpecInput in{covgal::spec_from_json(j), {}};
  if (j.contains("tracker")) in.opts = covgal::tracker_from_json(j["tracker"]);
  return in;
}

covgal::Json analyze_report(const SpecInput& in, bool with_correspond,
                            bool with_delta, unsigned long seed) {
  using namespace covgal;
  Json rep = tool_header(seed);
  MonodromyData m = monodromy(in.spec, in.opts);
  PermGroup G = generate(
      m.gens.empty() ? std::vector<Permutation>{Permutation::identity(in.spec.n)}
                     : m.gens);
  rep["group"] = group_to_json(G);
  Json orbs = Json::array();
  std::vector<long> degrees;
  for (const auto& orb : orbits(G)) {
    Json one = Json::array();
    for (int p : orb) one.push_back(p + 1);
    orbs.push_back(one);
    degrees.push_back(static_cast<long>(orb.size()));
  }
  rep["orbits"] = orbs;
  rep["irreducible"] = degrees.size() == 1;
  rep["factor_degrees"] = degrees;
  FiniteCover sol = solution_cover(m);
  FiniteCover split = splitting_cover(m);
  rep["solution_cover"] = cover_to_json(sol);
  rep["splitting_cover_degree"] = split.degree;
  rep["residuals"] = {{"max_residual", m.max_residual},
                      {"weierstrass_margin", m.weierstrass_margin}};
  if (with_correspond)
    rep["correspondence"] = correspondence_to_json(correspondence(m));
  if (with_delta) {
    Json d;
    ComplexF dv = delta(m.base.roots);
    d["delta_at_base"] = complex_to_json(dv);
    auto gs = galois_system(m.base.roots);
    d["galois_system_residual"] = gs.max_residual;
    rep["delta_checks"] = d;
  }
  return rep;
}

covgal::Json realization_to_json(const covgal::RealizationSpec& r) {
  using namespace covgal;
  Json j;
  j["target"] = r.target_description;
  j["spec"] = spec_to_json(r.spec);
  j["group"] = group_to_json(r.achieved);
  Json gens = Json::array();
  for (const auto& g : r.certificate.gens) gens.push_back(g.to_cycle_string());
  j["certificate"] = {{"generators", gens},
                      {"max_residual", r.certificate.max_residual},
                      {"weierstrass_margin", r.certificate.weierstrass_margin}};
  j["isomorphism_verified"] = r.isomorphism_verified;
  j["seed"] = r.seed;
  j["candidates_tried"] = r.candidates_tried;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace covgal;
  CLI::App app{"Monodromy and Galois-correspondence computations for "
               "Weierstrass polynomials over planar domains"};
  app.require_subcommand(1);
  bool pretty = false;
  std::string out_path;
  app.add_flag("--pretty", pretty, "indent the JSON output");
  app.add_option("-o,--output", out_path, "write the report to a file");

  std::string spec_path;
  bool with_correspond = false, with_delta = false;
  auto* analyze = app.add_subcommand("analyze", "monodromy group and covers");
  analyze->add_option("spec", spec_path, "problem spec JSON")->required();
  analyze->add_flag("--correspond", with_correspond,
                    "include the subgroup/cover correspondence table");
  analyze->add_flag("--delta", with_delta,
                    "include determinant checks at the base fiber");

  auto* factor_cmd = app.add_subcommand("factor", "monic factors per orbit");
  factor_cmd->add_option("spec", spec_path, "problem spec JSON")->required();

  auto* correspond_cmd =
      app.add_subcommand("correspond", "subgroup/cover correspondence table");
  correspond_cmd->add_option("spec", spec_path, "problem spec JSON")->required();

  int cyclic_n = 0, symmetric_n = 0, budget = 200;
  unsigned long seed = 1;
  std::string abelian_orders, gens_str;
  bool rational = false;
  auto* realize_cmd = app.add_subcommand("realize",
                                         "produce a spec with a target group");
  realize_cmd->add_option("--cyclic", cyclic_n, "cyclic group of order n");
  realize_cmd->add_option("--abelian", abelian_orders,
                          "product of cyclic orders, e.g. 2,2");
  realize_cmd->add_option("--symmetric", symmetric_n, "symmetric group S_n");
  realize_cmd->add_option("--gens", gens_str,
                          "target generators in cycle notation, e.g. "
                          "\"(1 2),(2 3)\"");
  realize_cmd->add_option("--budget", budget, "search candidate budget");
  realize_cmd->add_option("--seed", seed, "search seed");
  realize_cmd->add_flag("--rational", rational,
                        "rationalize coefficients into Q(i)[x]");

  std::string den_bound_str = "1000";
  auto* rationalize_cmd =
      app.add_subcommand("rationalize", "approximate coefficients in Q(i)[x]");
  rationalize_cmd->add_option("spec", spec_path, "problem spec JSON")
      ->required();
  rationalize_cmd->add_option("--den-bound", den_bound_str,
                              "denominator bound");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      emit(analyze_report(load_spec(spec_path), with_correspond, with_delta,
                          seed),
           pretty, out_path);
    } else if (*factor_cmd) {
      SpecInput in = load_spec(spec_path);
      MonodromyData m = monodromy(in.spec, in.opts);
      auto factors = factor(in.spec, m, in.opts);
      Json rep = tool_header(seed);
      Json arr = Json::array();
      for (const auto& g : factors) arr.push_back(spec_to_json(g));
      rep["factors"] = arr;
      rep["irreducible"] = factors.size() == 1;
      emit(rep, pretty, out_path);
    } else if (*correspond_cmd) {
      SpecInput in = load_spec(spec_path);
      MonodromyData m = monodromy(in.spec, in.opts);
      Json rep = tool_header(seed);
      rep["correspondence"] = correspondence_to_json(correspondence(m));
      emit(rep, pretty, out_path);
    } else if (*realize_cmd) {
      std::optional<RealizationSpec> r;
      if (cyclic_n > 0) {
        r = realize_cyclic(cyclic_n);
      } else if (!abelian_orders.empty()) {
        std::vector<int> orders;
        std::stringstream ss(abelian_orders);
        std::string tok;
        while (std::getline(ss, tok, ',')) orders.push_back(std::stoi(tok));
        r = realize_abelian_product(orders, {}, seed);
      } else if (symmetric_n > 0) {
        r = realize_symmetric(symmetric_n);
      } else if (!gens_str.empty()) {
        int degree = 0;
        for (char ch : gens_str)
          if (std::isdigit(ch)) degree = std::max(degree, ch - '0');
        std::vector<Permutation> target;
        std::stringstream ss(gens_str);
        std::string tok;
        while (std::getline(ss, tok, ','))
          target.push_back(Permutation::from_cycle_string(tok, degree));
        r = realize_search(target, budget, seed);
      } else {
        throw InputError("pass one of --cyclic/--abelian/--symmetric/--gens");
      }
      if (rational) r = realize_rational(*r);
      emit(realization_to_json(*r), pretty, out_path);
    } else if (*rationalize_cmd) {
      SpecInput in = load_spec(spec_path);
      BigInt bound(den_bound_str);
      WeierstrassSpec exact = approximate_coeffs(in.spec, bound, in.opts);
      HomotopyReport hrep = verify_homotopy(in.spec, exact, in.opts);
      MonodromyData m = monodromy(exact, in.opts);
      PermGroup G = generate(
          m.gens.empty()
              ? std::vector<Permutation>{Permutation::identity(exact.n)}
              : m.gens);
      Json rep = tool_header(seed);
      rep["spec"] = spec_to_json(exact);
      rep["homotopy"] = homotopy_report_to_json(hrep);
      rep["function_field"] = emit_function_field_poly(exact, G, identify(G));
      emit(rep, pretty, out_path);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
