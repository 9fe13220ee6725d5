#include "mckay/chen_ruan.hpp"

#include <algorithm>

#include "mckay/error.hpp"
#include "mckay/parse.hpp"

namespace mckay {

std::size_t CRBettiTable::total() const {
  std::size_t t = 0;
  for (auto d : dims) t += d;
  return t;
}

CRBettiTable cr_betti(const Weights& w) {
  if (!is_gorenstein(w)) throw Error(ErrorCode::non_gorenstein, "P(" + w.str() + ") is not Gorenstein");
  const std::size_t n = w.dim();
  CRBettiTable t;
  t.contributions.resize(n + 1);
  t.dims.assign(n + 1, 0);
  for (const auto& s : twisted_sectors(w)) {
    if (!s.age.is_integer()) throw Error(ErrorCode::non_gorenstein, "fractional age at gamma = " + s.gamma.str());
    const long shift = s.age.numerator().get_si();
    // a weighted projective space of dimension k has one class in each degree 0..2k
    for (std::size_t k = 0; k < s.fixed_indices.size(); ++k) {
      const auto deg = static_cast<std::size_t>(shift) + k;
      if (deg > n) throw Error(ErrorCode::inconsistent_degree, "sector exceeds top degree");
      t.contributions[deg].push_back({s.gamma, static_cast<int>(2 * k)});
      ++t.dims[deg];
    }
  }
  return t;
}

CRPresentationInput builtin_cr_presentation(const Weights& w) {
  const auto& v = w.values();
  if (v == std::vector<long>{1, 1, 2, 2})
    return {{"H", "E"}, {2, 2}, {"H^2-E^2", "H^2*E"}, "H^3", Rational(1, 4)};
  if (v == std::vector<long>{1, 3, 4, 4})
    return {{"H", "E1", "E2", "E3", "E4"},
            {2, 2, 2, 2, 2},
            {"H*E4", "E1*E1-3*H*E2", "E1*E2-3*H*E3", "E1*E3-3*H^2", "E2*E2-3*H^2", "E2*E3-H*E1", "E3*E3-H*E2",
             "16*H^3-E4^3", "H^2*E1", "H^2*E2", "H^2*E3", "E1*E4", "E2*E4", "E3*E4"},
            "H^3",
            Rational(1, 48)};
  const long n = static_cast<long>(w.dim());
  if (n >= 2 && w == Weights::ones_then(n)) {
    const std::string e = std::to_string(n);
    return {{"H", "E1"}, {2, 2}, {"H^" + e + "-E1^" + e, "H*E1"}, "H^" + e, Rational(1, n)};
  }
  throw Error(ErrorCode::unsupported_family, "no built-in Chen-Ruan ring for P(" + w.str() + ")");
}

CRAlgebra cr_algebra(const Weights& w, const CRPresentationInput& input) {
  if (input.degrees.size() != input.generators.size())
    throw Error(ErrorCode::dimension_mismatch, "one degree per generator");
  std::vector<int> half;
  for (int d : input.degrees) {
    if (d <= 0 || d % 2 != 0) throw Error(ErrorCode::inconsistent_degree, "generator degrees must be positive and even");
    half.push_back(d / 2);
  }
  PolyRing ring(input.generators, half);
  std::vector<Polynomial<Rational>> rels;
  for (const auto& text : input.relations) {
    const auto p = parse_polynomial(text, ring);
    Polynomial<Rational> r(ring.size());
    for (const auto& [m, c] : p.terms()) {
      if (!c.is_rational()) throw Error(ErrorCode::parse_error, "relation '" + text + "' has a non-rational coefficient");
      r.add_term(m, c.to_rational());
    }
    rels.push_back(r);
  }

  CRAlgebra out{w, twisted_sectors(w), cr_betti(w), {}, {}};
  out.presentation = make_presentation(ring, rels, MonomialOrder::grevlex(ring));
  const auto top = parse_polynomial(input.top_monomial, ring);
  if (top.size() != 1 || !top.terms().begin()->second.is_one())
    throw Error(ErrorCode::parse_error, "top class must be a single monomial");
  const std::size_t ti = top_index(out.presentation);
  const auto coords = out.presentation.coordinates(Polynomial<Rational>::monomial(top.terms().begin()->first, Rational(1)));
  // the named top monomial may reduce to a multiple of the staircase element
  if (coords[ti].is_zero()) throw Error(ErrorCode::inconsistent_degree, "top monomial vanishes in the quotient");
  out.algebra = algebra_from_presentation(out.presentation, input.top_value / coords[ti]);
  out.algebra.check_invariants();

  const auto dims = out.algebra.graded_dims();
  if (dims != out.betti.dims)
    throw Error(ErrorCode::inconsistent_degree, "presentation does not match the Chen-Ruan Betti numbers of P(" + w.str() + ")");
  return out;
}

CycloNumber cr_pairing(const CRAlgebra& alg, const Vec& a, const Vec& b) { return alg.algebra.pairing(a, b); }

}  // namespace mckay
