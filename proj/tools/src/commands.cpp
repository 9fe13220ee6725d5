#include "commands.hpp"

#include <fstream>
#include <sstream>

#include "mckay/chen_ruan.hpp"
#include "mckay/error.hpp"
#include "mckay/isocheck.hpp"
#include "mckay/json_io.hpp"
#include "mckay/parse.hpp"
#include "mckay/quantum.hpp"
#include "mckay/toric_ring.hpp"
#include "mckay/weights.hpp"

namespace mckay::cli {

namespace {

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::parse_error, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse_error, path + ": " + e.what());
  }
}

Weights weights_of(const RunConfig& c) {
  if (c.weights.empty()) throw Error(ErrorCode::invalid_weights, "--weights is required");
  return Weights::parse(c.weights);
}

Resolution resolution_of(const RunConfig& c, const Weights& w) {
  if (c.rays_file) return resolve_with_rays(w, recipe_from_json(load_json(*c.rays_file)));
  return builtin_resolution(w);
}

ToricCohomology toric_of(const RunConfig& c) {
  const Weights w = weights_of(c);
  return ToricCohomology::build(w, resolution_of(c, w));
}

QEvaluation q_of(const RunConfig& c, std::size_t m) {
  if (!c.q) return QEvaluation::zero(m);
  return QEvaluation::parse(*c.q);
}

CRAlgebra cr_of(const RunConfig& c, const Weights& w) {
  if (!c.presentation_file) return cr_algebra(w);
  const json j = load_json(*c.presentation_file);
  try {
    CRPresentationInput in;
    in.generators = j.at("generators").get<std::vector<std::string>>();
    in.degrees = j.at("degrees").get<std::vector<int>>();
    in.relations = j.at("relations").get<std::vector<std::string>>();
    in.top_monomial = j.at("top_monomial").get<std::string>();
    in.top_value = Rational::parse(j.at("top_value").get<std::string>());
    return cr_algebra(w, in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse_error, std::string("bad presentation file: ") + e.what());
  }
}

GeneratorMap map_of(const RunConfig& c, const GradedAlgebra& z, const GradedAlgebra& cr, bool& from_z) {
  if (!c.map_file) throw Error(ErrorCode::parse_error, "--map is required");
  GeneratorMap g = map_from_json(load_json(*c.map_file));
  if (map_starts_at(g, z)) {
    from_z = true;
  } else if (map_starts_at(g, cr)) {
    from_z = false;
  } else {
    throw Error(ErrorCode::dimension_mismatch, "map generators match neither the resolution nor the Chen-Ruan ring");
  }
  if (g.targets.empty()) g.targets = from_z ? cr.generator_names : z.generator_names;
  if (g.matrix.cols() != g.targets.size()) throw Error(ErrorCode::dimension_mismatch, "one matrix column per target generator");
  return g;
}

json curves_json(const ToricCohomology& tc) {
  json out = json::array();
  const auto& p = tc.presentation;
  for (std::size_t l = 0; l < tc.curves.size(); ++l) {
    json ints = json::array();
    for (std::size_t j = 0; j < tc.exceptional_count(); ++j)
      ints.push_back(intersect(tc.curves[l], tc.exceptional(j), tc.algebra).str());
    json walls = json::array();
    for (const auto& w : tc.curves[l].walls) walls.push_back(w);
    out.push_back({{"name", "Gamma" + std::to_string(l + 1)},
                   {"pd_class", tc.curves[l].pd_poly.str(p.ring, p.quotient.order)},
                   {"h_degree", intersect(tc.curves[l], tc.h(), tc.algebra).str()},
                   {"exceptional_degrees", ints},
                   {"walls", walls}});
  }
  return out;
}

}  // namespace

Outcome gorenstein_check(const RunConfig& c) {
  const Weights w = weights_of(c);
  const bool g = is_gorenstein(w);
  return {{{"weights", w.values()}, {"gorenstein", g}}, g};
}

Outcome gorenstein_enumerate(const RunConfig& c) {
  if (c.dim < 1) throw Error(ErrorCode::invalid_weights, "--dim must be positive");
  json list = json::array();
  for (const auto& w : enumerate_gorenstein(c.dim)) list.push_back(w.values());
  return {{{"dim", c.dim}, {"count", list.size()}, {"weights", list}}, true};
}

Outcome sectors(const RunConfig& c) {
  const Weights w = weights_of(c);
  json s = json::array();
  for (const auto& sec : twisted_sectors(w)) s.push_back(to_json(sec));
  return {{{"weights", w.values()}, {"gorenstein", is_gorenstein(w)}, {"sectors", s}}, true};
}

Outcome resolve(const RunConfig& c) {
  const Weights w = weights_of(c);
  const Resolution r = resolution_of(c, w);
  const ResolutionReport rep = validate_resolution(r.original, r.refined, w);
  json added = json::array();
  for (std::size_t i = w.size(); i < r.refined.rays.size(); ++i) added.push_back(r.refined.rays[i]);
  return {{{"weights", w.values()},
           {"original", to_json(r.original)},
           {"refined", to_json(r.refined)},
           {"added_rays", added},
           {"smooth", rep.smooth},
           {"crepant", rep.crepant}},
          rep.smooth && rep.crepant};
}

Outcome cohomology(const RunConfig& c) { return {cohomology_json(toric_of(c)), true}; }

Outcome chenruan(const RunConfig& c) {
  const Weights w = weights_of(c);
  json out{{"weights", w.values()}};
  json s = json::array();
  for (const auto& sec : twisted_sectors(w)) s.push_back(to_json(sec));
  out["sectors"] = s;
  out["betti"] = to_json(cr_betti(w));
  try {
    const CRAlgebra cr = cr_of(c, w);
    json rels = json::array(), gb = json::array();
    const auto& p = cr.presentation;
    for (const auto& g : p.generators) rels.push_back(g.str(p.ring, p.order));
    for (const auto& g : p.groebner) gb.push_back(g.str(p.ring, p.order));
    out["relations"] = rels;
    out["groebner_basis"] = gb;
    out["algebra"] = to_json(cr.algebra);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::unsupported_family) throw;
    out["algebra"] = nullptr;
    out["note"] = e.what();
  }
  return {out, true};
}

Outcome quantum(const RunConfig& c) {
  const ToricCohomology tc = toric_of(c);
  const QuantumCohomology qc(tc);
  json out{{"weights", tc.weights.values()}, {"chain", to_json(qc.chain())}};
  if (c.q) {
    const QEvaluation q = q_of(c, tc.curves.size());
    out["q"] = q.str();
    out["algebra"] = to_json(qc.evaluate(q));
    return {out, true};
  }
  // symbolic: products of degree-2 basis elements
  const auto& a = tc.algebra;
  json products = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j) {
      if (a.degrees[i] != 2 || a.degrees[j] != 2) continue;
      const auto prod = qc.symbolic_product(a.basis_vector(i), a.basis_vector(j));
      json coords = json::array();
      for (std::size_t k = 0; k < prod.size(); ++k)
        if (!prod[k].constant.is_zero() || !prod[k].terms.empty())
          coords.push_back({{"basis", a.labels[k]}, {"coefficient", to_json(prod[k], qc.chain())}});
      products.push_back({{"left", a.labels[i]}, {"right", a.labels[j]}, {"product", coords}});
    }
  out["products"] = products;
  return {out, true};
}

Outcome mrho(const RunConfig& c) {
  const ToricCohomology tc = toric_of(c);
  json out{{"weights", tc.weights.values()}, {"curve_classes", curves_json(tc)}};
  out["chain"] = to_json(validate_chain(tc));
  return {out, true};
}

Outcome verify_iso(const RunConfig& c) {
  const ToricCohomology tc = toric_of(c);
  const QuantumCohomology qc(tc);
  const CRAlgebra cr = cr_of(c, tc.weights);
  bool from_z = true;
  const GeneratorMap g = map_of(c, tc.algebra, cr.algebra, from_z);
  const QEvaluation q = q_of(c, tc.curves.size());
  const GradedAlgebra zq = qc.evaluate(q);
  const GradedAlgebra& src = from_z ? zq : cr.algebra;
  const GradedAlgebra& dst = from_z ? cr.algebra : zq;

  json out{{"weights", tc.weights.values()},
           {"q", q.str()},
           {"direction", from_z ? "resolution -> chen-ruan" : "chen-ruan -> resolution"}};
  ExactMatrix m;
  try {
    m = extend_map(src, dst, g);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::relation_violation) throw;
    out["pass"] = false;
    out["reason"] = e.what();
    return {out, false};
  }
  const IsoReport iso = mckay::verify_iso(src, dst, m);
  const IsometryReport isom = verify_isometry(src, dst, m);
  json images = json::array();
  for (std::size_t j = 0; j < src.dim(); ++j) images.push_back({{"basis", src.labels[j]}, {"image", to_json(m.column(j), dst)}});
  out["images"] = images;
  out["iso"] = to_json(iso, dst);
  out["isometry"] = to_json(isom, src);
  const bool pass = iso.pass() && (!c.isometry || isom.pass);
  out["pass"] = pass;
  return {out, pass};
}

Outcome scan(const RunConfig& c) {
  const ToricCohomology tc = toric_of(c);
  const QuantumCohomology qc(tc);
  const CRAlgebra cr = cr_of(c, tc.weights);
  bool from_z = true;
  const GeneratorMap g = map_of(c, tc.algebra, cr.algebra, from_z);
  std::vector<QEvaluation> cands;
  if (c.candidates)
    for (const auto& piece : split_top_level(*c.candidates, ';'))
      if (piece.find_first_not_of(' ') != std::string::npos) cands.push_back(QEvaluation::parse(piece));
  json results = json::array(), passing = json::array();
  for (const auto& r : scan_evaluations(cr.algebra, qc, cands, g)) {
    results.push_back(to_json(r));
    if (r.status == ScanStatus::pass) passing.push_back(r.q.str());
  }
  const bool found = cands.empty() || !passing.empty();
  return {{{"weights", tc.weights.values()}, {"results", results}, {"passing", passing}}, found};
}

}  // namespace mckay::cli
