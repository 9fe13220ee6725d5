#include "mckay/isocheck.hpp"

#include <algorithm>
#include <set>

#include "mckay/error.hpp"
#include "mckay/matrix.hpp"

namespace mckay {

namespace {

Vec column(const ExactMatrix& m, std::size_t j) { return m.column(j); }

std::string vec_str(const GradedAlgebra& a, const Vec& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + v[k].str() + ")*" + a.labels[k];
  }
  return s.empty() ? "0" : s;
}

bool homogeneous_of(const GradedAlgebra& a, const Vec& v, int degree) {
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero() && a.degrees[k] != degree) return false;
  return true;
}

}  // namespace

GeneratorMap GeneratorMap::identity(const GradedAlgebra& a) {
  return {a.generator_names, a.generator_names, ExactMatrix::identity(a.generator_names.size())};
}

bool map_starts_at(const GeneratorMap& g, const GradedAlgebra& a) {
  return std::set<std::string>(g.sources.begin(), g.sources.end()) ==
         std::set<std::string>(a.generator_names.begin(), a.generator_names.end());
}

ExactMatrix extend_map(const GradedAlgebra& src, const GradedAlgebra& dst, const GeneratorMap& g) {
  if (g.matrix.rows() != g.sources.size() || g.matrix.cols() != g.targets.size())
    throw Error(ErrorCode::dimension_mismatch, "generator map matrix has the wrong shape");
  if (!map_starts_at(g, src) || g.sources.size() != src.generator_names.size())
    throw Error(ErrorCode::dimension_mismatch, "map sources do not match the generators of the source algebra");

  std::vector<Vec> gen_image(src.generator_names.size());
  for (std::size_t r = 0; r < g.sources.size(); ++r) {
    const auto pos = static_cast<std::size_t>(
        std::find(src.generator_names.begin(), src.generator_names.end(), g.sources[r]) - src.generator_names.begin());
    Vec img = dst.zero();
    for (std::size_t c = 0; c < g.targets.size(); ++c) {
      if (g.matrix(r, c).is_zero()) continue;
      const std::size_t t = dst.generator(g.targets[c]);
      img[t] += g.matrix(r, c);
    }
    if (!homogeneous_of(dst, img, src.degrees[src.generator_index[pos]]))
      throw Error(ErrorCode::inconsistent_degree, "image of " + g.sources[r] + " has the wrong degree");
    gen_image[pos] = img;
  }

  ExactMatrix m(dst.dim(), src.dim());
  for (std::size_t j = 0; j < src.dim(); ++j) {
    Vec img = dst.basis_vector(dst.unit);
    for (std::size_t v = 0; v < src.words[j].size(); ++v)
      for (int e = 0; e < src.words[j][v]; ++e) img = dst.multiply(img, gen_image[v]);
    m.set_column(j, img);
  }
  // ring map iff compatible with multiplication by each generator
  for (std::size_t v = 0; v < gen_image.size(); ++v) {
    const std::size_t gi = src.generator_index[v];
    for (std::size_t j = 0; j < src.dim(); ++j) {
      const Vec lhs = m.apply(src.constants[gi][j]);
      const Vec rhs = dst.multiply(gen_image[v], column(m, j));
      if (lhs != rhs)
        throw Error(ErrorCode::relation_violation, "relation broken at " + src.generator_names[v] + "*" + src.labels[j] + ": " +
                                                        vec_str(dst, lhs) + " != " + vec_str(dst, rhs));
    }
  }
  return m;
}

IsoReport verify_iso(const GradedAlgebra& src, const GradedAlgebra& dst, const ExactMatrix& m) {
  IsoReport r;
  if (m.rows() != dst.dim() || m.cols() != src.dim()) throw Error(ErrorCode::dimension_mismatch, "map matrix does not fit the algebras");
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < src.dim(); ++j) cols.push_back(column(m, j));

  r.degree_preserving = true;
  for (std::size_t j = 0; j < src.dim(); ++j) r.degree_preserving = r.degree_preserving && homogeneous_of(dst, cols[j], src.degrees[j]);
  r.unit = cols[src.unit] == dst.basis_vector(dst.unit);
  r.invertible = m.square() && rank(m) == m.rows();

  r.multiplicative = true;
  for (std::size_t i = 0; i < src.dim(); ++i)
    for (std::size_t j = i; j < src.dim(); ++j) {
      Vec lhs = m.apply(src.constants[i][j]);
      Vec rhs = dst.multiply(cols[i], cols[j]);
      if (lhs == rhs) continue;
      r.multiplicative = false;
      ++r.violation_count;
      if (r.violations.size() < 10) r.violations.push_back({i, j, src.labels[i] + "*" + src.labels[j], std::move(lhs), std::move(rhs)});
    }
  return r;
}

IsometryReport verify_isometry(const GradedAlgebra& src, const GradedAlgebra& dst, const ExactMatrix& m) {
  IsometryReport r;
  const ExactMatrix pulled = m.transpose() * dst.gram() * m;
  const ExactMatrix gs = src.gram();
  for (std::size_t i = 0; i < gs.rows(); ++i)
    for (std::size_t j = 0; j < gs.cols(); ++j)
      if (!(pulled(i, j) == gs(i, j)) && r.mismatches.size() < 10) r.mismatches.emplace_back(i, j);
  r.pass = r.mismatches.empty();
  return r;
}

std::string_view scan_status_name(ScanStatus s) {
  switch (s) {
    case ScanStatus::pass: return "pass";
    case ScanStatus::fail: return "fail";
    case ScanStatus::pole: return "pole";
    case ScanStatus::unsupported: return "unsupported";
  }
  return "fail";
}

std::vector<ScanResult> scan_evaluations(const GradedAlgebra& cr, const QuantumCohomology& z,
                                         const std::vector<QEvaluation>& candidates, const GeneratorMap& g) {
  const bool from_z = map_starts_at(g, z.classical());
  std::vector<ScanResult> out;
  for (const auto& q : candidates) {
    ScanResult res{q, ScanStatus::fail, {}};
    try {
      const GradedAlgebra zq = z.evaluate(q);
      const GradedAlgebra& src = from_z ? zq : cr;
      const GradedAlgebra& dst = from_z ? cr : zq;
      const ExactMatrix m = extend_map(src, dst, g);
      const IsoReport rep = verify_iso(src, dst, m);
      res.status = rep.pass() ? ScanStatus::pass : ScanStatus::fail;
      if (!rep.pass()) res.reason = rep.invertible ? "not multiplicative" : "not invertible";
    } catch (const Error& e) {
      switch (e.code()) {
        case ErrorCode::pole: res.status = ScanStatus::pole; break;
        case ErrorCode::unsupported_parameter: res.status = ScanStatus::unsupported; break;
        case ErrorCode::relation_violation: res.status = ScanStatus::fail; break;
        default: throw;
      }
      res.reason = e.what();
    }
    out.push_back(std::move(res));
  }
  return out;
}

}  // namespace mckay
