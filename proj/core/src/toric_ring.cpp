#include "mckay/toric_ring.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mckay/error.hpp"
#include "mckay/matrix.hpp"

namespace mckay {

namespace {

using RPoly = Polynomial<Rational>;

std::vector<Cone> faces_of(const std::vector<Cone>& cones, std::size_t size) {
  std::set<Cone> out;
  for (const auto& c : cones) {
    std::vector<bool> pick(c.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(size), true);
    do {
      Cone f;
      for (std::size_t k = 0; k < c.size(); ++k)
        if (pick[k]) f.push_back(c[k]);
      out.insert(f);
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return {out.begin(), out.end()};
}

}  // namespace

ToricPresentation toric_presentation(const Fan& refined, const Weights& w) {
  refined.validate();
  const std::size_t n = refined.dim;
  const std::size_t orig = w.size();
  if (n != w.dim() || refined.rays.size() < orig)
    throw Error(ErrorCode::dimension_mismatch, "fan does not match the weights");
  for (const auto& c : refined.max_cones) {
    Matrix<Rational> m(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < n; ++r) m(r, j) = Rational(refined.rays[c[j]][r]);
    // unimodular iff the inverse is integral and det = +-1; rank-n integer
    // matrix with integral inverse suffices
    const auto inv = inverse(m);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t k = 0; k < n; ++k)
        if (!inv(r, k).is_integer()) throw Error(ErrorCode::not_smooth, "fan has a non-unimodular cone");
  }

  const std::size_t d = refined.rays.size() - orig;
  ToricPresentation p;
  p.original_rays = orig;
  std::vector<std::string> names{"h"};
  if (d == 1) {
    names.push_back("e");
  } else {
    for (std::size_t j = 1; j <= d; ++j) names.push_back("e" + std::to_string(j));
  }
  p.ring = PolyRing(names);
  const std::size_t nv = p.ring.size();
  auto var = [&](std::size_t v) { return RPoly::variable(nv, v); };

  // n linear relations sum_rho <m_k, u_rho> D_rho = 0 plus the definition of
  // h, solved for b_0..b_n in terms of h and the e_j.
  Matrix<Rational> a(orig, orig);
  std::vector<RPoly> rhs(orig, RPoly(nv));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < orig; ++i) a(k, i) = Rational(refined.rays[i][k]);
    for (std::size_t j = 0; j < d; ++j)
      rhs[k] -= var(1 + j).scaled(Rational(refined.rays[orig + j][k]));
  }
  for (std::size_t i = 0; i < orig; ++i) a(n, i) = Rational(1);
  rhs[n] = var(0).scaled(Rational(w.sum()));
  for (std::size_t j = 0; j < d; ++j) rhs[n] -= var(1 + j);
  Matrix<Rational> a_inv;
  try {
    a_inv = inverse(a);
  } catch (const Error&) {
    throw Error(ErrorCode::invalid_fan, "linear relations cannot be solved for the original divisor classes");
  }
  for (std::size_t i = 0; i < orig; ++i) {
    RPoly b(nv);
    for (std::size_t r = 0; r < orig; ++r) b += rhs[r].scaled(a_inv(i, r));
    p.divisors.push_back(b);
  }
  for (std::size_t j = 0; j < d; ++j) p.divisors.push_back(var(1 + j));

  // minimal non-faces of the simplicial complex
  std::set<Cone> faces;
  for (std::size_t s = 0; s <= n; ++s)
    for (auto& f : faces_of(refined.max_cones, s)) faces.insert(f);
  const std::size_t nr = refined.rays.size();
  std::vector<RPoly> gens;
  for (std::size_t size = 2; size <= n + 1; ++size) {
    std::vector<bool> pick(nr, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(size), true);
    do {
      Cone s;
      for (std::size_t k = 0; k < nr; ++k)
        if (pick[k]) s.push_back(k);
      if (faces.count(s)) continue;
      bool minimal = true;
      for (std::size_t drop = 0; drop < s.size() && minimal; ++drop) {
        Cone sub;
        for (std::size_t k = 0; k < s.size(); ++k)
          if (k != drop) sub.push_back(s[k]);
        minimal = faces.count(sub) > 0;
      }
      if (!minimal) continue;
      p.non_faces.push_back(s);
      RPoly prod = RPoly::constant(nv, Rational(1));
      for (auto r : s) prod = prod * p.divisors[r];
      gens.push_back(prod);
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  p.quotient = make_presentation(p.ring, gens, MonomialOrder::grevlex(p.ring));
  return p;
}

DegreeCalibration degree_functional(const ToricPresentation& p, const Fan& refined) {
  DegreeCalibration cal;
  cal.top = top_index(p.quotient);
  const Monomial& top = p.quotient.staircase[cal.top];
  bool first = true;
  for (const auto& c : refined.max_cones) {
    RPoly prod = RPoly::constant(p.ring.size(), Rational(1));
    for (auto r : c) prod = prod * p.divisors[r];
    const RPoly nf = p.quotient.reduce(prod);
    const Rational coeff = nf.coefficient(top);
    if (nf.size() != (coeff.is_zero() ? 0u : 1u) || coeff.is_zero())
      throw Error(ErrorCode::inconsistent_degree, "cone product does not reduce to a nonzero multiple of the top class");
    const Rational value = coeff.inverse();
    if (first) {
      cal.top_value = value;
      first = false;
    } else if (value != cal.top_value) {
      throw Error(ErrorCode::inconsistent_degree,
                  "degree calibration disagrees across cones: " + value.str() + " vs " + cal.top_value.str());
    }
  }
  return cal;
}

GradedAlgebra toric_algebra(const ToricPresentation& p, const DegreeCalibration& cal) {
  GradedAlgebra a = algebra_from_presentation(p.quotient, cal.top_value);
  a.check_invariants();
  return a;
}

std::vector<CurveClass> curve_classes_and_mrho(const Fan& original, const Fan& refined, const ToricPresentation& p,
                                               const GradedAlgebra& alg) {
  const std::size_t n = refined.dim;
  const auto old_walls = faces_of(original.max_cones, n - 1);
  const std::set<Cone> old(old_walls.begin(), old_walls.end());
  const Vec h = alg.basis_vector(alg.generator("h"));
  std::vector<CurveClass> out;
  for (const auto& wall : faces_of(refined.max_cones, n - 1)) {
    if (old.count(wall)) continue;
    RPoly prod = RPoly::constant(p.ring.size(), Rational(1));
    for (auto r : wall) prod = prod * p.divisors[r];
    CurveClass c;
    c.pd_poly = p.quotient.reduce(prod);
    c.pd_class = to_vec(p.quotient.coordinates(prod));
    if (!alg.pairing(h, c.pd_class).is_zero()) continue;
    auto same = std::find_if(out.begin(), out.end(), [&](const CurveClass& o) { return o.pd_class == c.pd_class; });
    if (same != out.end()) {
      same->walls.push_back(wall);
      continue;
    }
    c.walls.push_back(wall);
    out.push_back(std::move(c));
  }
  auto first_nonzero = [](const Vec& v) {
    return static_cast<std::size_t>(std::find_if(v.begin(), v.end(), [](const CycloNumber& x) { return !x.is_zero(); }) - v.begin());
  };
  std::stable_sort(out.begin(), out.end(), [&](const CurveClass& a, const CurveClass& b) {
    return first_nonzero(a.pd_class) < first_nonzero(b.pd_class);
  });
  return out;
}

Rational intersect(const CurveClass& c, const Vec& d, const GradedAlgebra& alg) {
  return alg.pairing(c.pd_class, d).to_rational();
}

ToricCohomology ToricCohomology::build(const Weights& w, const Resolution& res) {
  ToricCohomology tc{w, res, {}, {}, {}, {}, {}};
  const auto report = validate_resolution(res.original, res.refined, w);
  if (!report.smooth) throw Error(ErrorCode::not_smooth, "resolution of P(" + w.str() + ") is not smooth");
  tc.presentation = toric_presentation(res.refined, w);
  tc.calibration = degree_functional(tc.presentation, res.refined);
  tc.algebra = toric_algebra(tc.presentation, tc.calibration);
  tc.curves = curve_classes_and_mrho(res.original, res.refined, tc.presentation, tc.algebra);
  for (std::size_t r = tc.presentation.original_rays; r < res.refined.rays.size(); ++r) {
    std::size_t best = res.original.dim + 1;
    for (const auto& c : res.original.max_cones) {
      const auto a = cone_coordinates(res.original, c, res.refined.rays[r]);
      if (std::any_of(a.begin(), a.end(), [](const Rational& x) { return x.sign() < 0; })) continue;
      const auto support = static_cast<std::size_t>(
          std::count_if(a.begin(), a.end(), [](const Rational& x) { return !x.is_zero(); }));
      best = std::min(best, support);
    }
    tc.exceptional_support_dim.push_back(best);
  }
  return tc;
}

Vec ToricCohomology::h() const { return algebra.basis_vector(algebra.generator("h")); }

Vec ToricCohomology::exceptional(std::size_t j) const {
  return algebra.basis_vector(algebra.generator_index.at(1 + j));
}

}  // namespace mckay
