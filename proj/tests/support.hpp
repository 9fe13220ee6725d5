#pragma once

#include <string>
#include <vector>

#include "mckay/algebra.hpp"
#include "mckay/error.hpp"
#include "mckay/isocheck.hpp"
#include "mckay/parse.hpp"

namespace mckay::test {

inline Polynomial<Rational> rational_poly(const std::string& text, const PolyRing& ring) {
  const auto p = parse_polynomial(text, ring);
  Polynomial<Rational> r(ring.size());
  for (const auto& [m, c] : p.terms()) r.add_term(m, c.to_rational());
  return r;
}

/// Coordinates of a rational polynomial expression in a presentation's basis.
inline Vec class_of(const QuotientPresentation<Rational>& q, const std::string& text) {
  return to_vec(q.coordinates(rational_poly(text, q.ring)));
}

/// Basis coordinates of a linear combination written with basis labels,
/// e.g. {{"h^2", "-24"}, {"h*e1", "-2+6*i"}}.
inline Vec combo(const GradedAlgebra& a, const std::vector<std::pair<std::string, std::string>>& terms) {
  Vec v = a.zero();
  for (const auto& [label, coeff] : terms) v[a.index_of(label)] += parse_scalar(coeff);
  return v;
}

inline GeneratorMap generator_map(std::vector<std::string> sources, std::vector<std::string> targets,
                                  const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<CycloNumber>> m;
  for (const auto& row : rows) {
    std::vector<CycloNumber> r;
    for (const auto& x : row) r.push_back(parse_scalar(x));
    m.push_back(std::move(r));
  }
  return {std::move(sources), std::move(targets), ExactMatrix::from_rows(m)};
}

inline const std::string kSqrt2 = "(zeta(8,1)+zeta(8,7))";

/// P(1,3,4,4) generator map from the resolution to the Chen-Ruan ring;
/// sign = +1 pairs with q = (i,i,i,0), sign = -1 with (-i,-i,-i,0).
inline GeneratorMap resolution_to_cr_map(int sign) {
  const std::string s = kSqrt2;
  const std::string ti = sign > 0 ? "(2*i)" : "(-2*i)";
  const std::string is2 = sign > 0 ? "(i*" + s + ")" : "(-i*" + s + ")";
  return generator_map({"h", "e1", "e2", "e3", "e4"}, {"H", "E1", "E2", "E3", "E4"},
                       {{"1", "0", "0", "0", "0"},
                        {"0", "-" + s, "-" + ti, s, "0"},
                        {"0", "-" + is2, ti, "-" + is2, "0"},
                        {"0", s, "-" + ti, "-" + s, "0"},
                        {"0", "0", "0", "0", "3*zeta(3,1)"}});
}

inline GeneratorMap p11n_map(long n) {
  return generator_map({"H", "E1"}, {"h", "e"}, {{"1", "0"}, {"0", "-zeta(" + std::to_string(2 * n) + ",1)/" + std::to_string(n)}});
}

template <class F>
ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  throw std::runtime_error("expected an mckay::Error");
}

}  // namespace mckay::test
