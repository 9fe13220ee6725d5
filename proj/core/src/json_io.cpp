#include "mckay/json_io.hpp"

#include <cstdlib>
#include <string>

#include "mckay/error.hpp"
#include "mckay/parse.hpp"

namespace mckay {

namespace {

unsigned forced_order() {
  const char* env = std::getenv("MCKAY_CYCLO_ORDER");
  if (env == nullptr || *env == '\0') return 0;
  try {
    return static_cast<unsigned>(std::stoul(env));
  } catch (const std::exception&) {
    return 0;
  }
}

json cone_json(const Cone& c) { return json(c); }

}  // namespace

json to_json(const CycloNumber& c) {
  CycloNumber v = c.canonical();
  if (const unsigned m = forced_order(); m > 0 && m % v.order() == 0) v = v.embed(m);
  json coeffs = json::array();
  for (const auto& r : v.coeffs()) coeffs.push_back(r.str());
  return {{"order", v.order()}, {"coeffs", coeffs}};
}

CycloNumber cyclo_from_json(const json& j) {
  if (j.is_number_integer()) return CycloNumber(j.get<long>());
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
    throw Error(ErrorCode::parse_error, "cyclotomic value must be {order, coeffs}, a literal string or an integer");
  const auto order = j.at("order").get<unsigned>();
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(c.is_string() ? Rational::parse(c.get<std::string>()) : Rational(c.get<long>()));
  return CycloNumber(order, std::move(coeffs));
}

json to_json(const Fan& f) {
  json cones = json::array();
  for (const auto& c : f.max_cones) cones.push_back(cone_json(c));
  return {{"dim", f.dim}, {"rays", f.rays}, {"max_cones", cones}};
}

Fan fan_from_json(const json& j) {
  try {
    Fan f;
    f.dim = j.at("dim").get<std::size_t>();
    f.rays = j.at("rays").get<std::vector<IntVector>>();
    f.max_cones = j.at("max_cones").get<std::vector<Cone>>();
    for (auto& c : f.max_cones) std::sort(c.begin(), c.end());
    return f;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse_error, std::string("bad fan JSON: ") + e.what());
  }
}

std::vector<IntVector> recipe_from_json(const json& j) {
  try {
    return j.at("rays").get<std::vector<IntVector>>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse_error, std::string("bad ray recipe: ") + e.what());
  }
}

GeneratorMap map_from_json(const json& j) {
  try {
    GeneratorMap g;
    g.sources = j.at("generators").get<std::vector<std::string>>();
    if (j.contains("targets")) g.targets = j.at("targets").get<std::vector<std::string>>();
    std::vector<std::vector<CycloNumber>> rows;
    for (const auto& row : j.at("matrix")) {
      std::vector<CycloNumber> r;
      for (const auto& x : row) r.push_back(cyclo_from_json(x));
      rows.push_back(std::move(r));
    }
    g.matrix = ExactMatrix::from_rows(rows);
    if (g.matrix.rows() != g.sources.size()) throw Error(ErrorCode::parse_error, "one matrix row per generator");
    return g;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse_error, std::string("bad map file: ") + e.what());
  }
}

json to_json(const GeneratorMap& g) {
  json rows = json::array();
  for (std::size_t r = 0; r < g.matrix.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < g.matrix.cols(); ++c) row.push_back(g.matrix(r, c).str());
    rows.push_back(row);
  }
  return {{"generators", g.sources}, {"targets", g.targets}, {"matrix", rows}};
}

json to_json(const Vec& v, const GradedAlgebra& a) {
  // ordered list of [label, value] keeps basis order in the output
  json out = json::array();
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) out.push_back({a.labels[k], v[k].str()});
  return out;
}

json to_json(const GradedAlgebra& a) {
  json basis = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    basis.push_back({{"label", a.labels[i]}, {"degree", a.degrees[i]}, {"integral", a.functional[i].str()}});
  json products = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j) {
      if (is_zero(a.constants[i][j])) continue;
      products.push_back({{"left", a.labels[i]}, {"right", a.labels[j]}, {"product", to_json(a.constants[i][j], a)}});
    }
  const ExactMatrix g = a.gram();
  json gram = json::array();
  for (std::size_t i = 0; i < g.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < g.cols(); ++j) row.push_back(g(i, j).str());
    gram.push_back(row);
  }
  return {{"generators", a.generator_names},
          {"basis", basis},
          {"graded_dims", a.graded_dims()},
          {"field_order", a.field_order()},
          {"products", products},
          {"gram", gram}};
}

json to_json(const Sector& s) {
  return {{"gamma", s.gamma.str()}, {"fixed_indices", s.fixed_indices}, {"age", s.age.str()}, {"sector_weights", s.sector_weights}};
}

json to_json(const CRBettiTable& t) {
  json degrees = json::array();
  for (std::size_t d = 0; d < t.dims.size(); ++d) {
    json contrib = json::array();
    for (const auto& c : t.contributions[d]) contrib.push_back({{"gamma", c.gamma.str()}, {"local_degree", c.local_degree}});
    degrees.push_back({{"degree", 2 * d}, {"dim", t.dims[d]}, {"sectors", contrib}});
  }
  return {{"degrees", degrees}, {"total", t.total()}};
}

json to_json(const ChainConfig& c) {
  auto names = [](const std::vector<std::size_t>& v) {
    json out = json::array();
    for (auto l : v) out.push_back("Gamma" + std::to_string(l + 1));
    return out;
  };
  json cartan = json::array();
  for (const auto& row : c.cartan) {
    json r = json::array();
    for (const auto& x : row) r.push_back(x.str());
    cartan.push_back(r);
  }
  json dual = json::array();
  for (auto j : c.dual_divisor) dual.push_back(j);
  return {{"chain", names(c.chain)}, {"isolated", names(c.isolated)}, {"dual_divisor", dual}, {"cartan", cartan}};
}

json to_json(const QuantumCoefficient& c, const ChainConfig& cfg) {
  json terms = json::array();
  for (const auto& [s, v] : c.terms) {
    json classes = json::array();
    for (std::size_t p = s.first; p <= s.second; ++p) classes.push_back("Gamma" + std::to_string(cfg.chain[p] + 1));
    terms.push_back({{"sub_chain", classes}, {"coefficient", v.str()}});
  }
  return {{"constant", c.constant.str()}, {"terms", terms}, {"text", c.str(cfg)}};
}

json to_json(const IsoReport& r, const GradedAlgebra& dst) {
  json v = json::array();
  for (const auto& x : r.violations)
    v.push_back({{"pair", x.pair}, {"image_of_product", to_json(x.lhs, dst)}, {"product_of_images", to_json(x.rhs, dst)}});
  return {{"pass", r.pass()},
          {"multiplicative", r.multiplicative},
          {"unit", r.unit},
          {"invertible", r.invertible},
          {"degree_preserving", r.degree_preserving},
          {"violation_count", r.violation_count},
          {"violations", v}};
}

json to_json(const IsometryReport& r, const GradedAlgebra& src) {
  json m = json::array();
  for (const auto& [i, j] : r.mismatches) m.push_back({src.labels[i], src.labels[j]});
  return {{"pass", r.pass}, {"mismatches", m}};
}

json to_json(const ScanResult& r) {
  return {{"q", r.q.str()}, {"status", std::string(scan_status_name(r.status))}, {"reason", r.reason}};
}

json cohomology_json(const ToricCohomology& tc) {
  const auto& p = tc.presentation;
  const auto& ord = p.quotient.order;
  json divisors = json::array();
  for (std::size_t r = 0; r < p.divisors.size(); ++r)
    divisors.push_back({{"ray", tc.resolution.refined.rays[r]}, {"class", p.divisors[r].str(p.ring, ord)}});
  json gens = json::array(), gb = json::array();
  for (const auto& g : p.quotient.generators) gens.push_back(g.str(p.ring, ord));
  for (const auto& g : p.quotient.groebner) gb.push_back(g.str(p.ring, ord));
  json curves = json::array();
  for (std::size_t l = 0; l < tc.curves.size(); ++l) {
    json walls = json::array();
    for (const auto& w : tc.curves[l].walls) walls.push_back(cone_json(w));
    curves.push_back({{"name", "Gamma" + std::to_string(l + 1)}, {"pd_class", tc.curves[l].pd_poly.str(p.ring, ord)}, {"walls", walls}});
  }
  return {{"weights", tc.weights.values()},
          {"variables", p.ring.names},
          {"divisor_classes", divisors},
          {"ideal", gens},
          {"groebner_basis", gb},
          {"top_integral", {{"monomial", p.ring.monomial_str(p.quotient.staircase[tc.calibration.top])}, {"value", tc.calibration.top_value.str()}}},
          {"algebra", to_json(tc.algebra)},
          {"curve_classes", curves}};
}

}  // namespace mckay
