#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mckay/cyclo.hpp"
#include "mckay/groebner.hpp"
#include "mckay/rational.hpp"

namespace mckay {

using Vec = std::vector<CycloNumber>;

/// Finite-dimensional commutative graded algebra given by a basis, its
/// structure constants and a degree functional (integration) on the top
/// degree. Basis elements are words in a set of generators.
struct GradedAlgebra {
  std::vector<std::string> generator_names;
  std::vector<std::size_t> generator_index;  // basis position of each generator
  std::vector<std::string> labels;
  std::vector<int> degrees;                  // cohomological degree
  std::vector<Monomial> words;               // exponents over the generators
  std::vector<std::vector<Vec>> constants;   // constants[i][j] = b_i * b_j
  Vec functional;                            // integral of each basis element
  std::size_t unit = 0;

  std::size_t dim() const { return labels.size(); }
  int top_degree() const;
  Vec basis_vector(std::size_t i) const;
  Vec zero() const { return Vec(dim(), CycloNumber(0)); }
  std::size_t index_of(const std::string& label) const;
  std::size_t generator(const std::string& name) const;

  Vec multiply(const Vec& a, const Vec& b) const;
  CycloNumber integrate(const Vec& a) const;
  CycloNumber pairing(const Vec& a, const Vec& b) const { return integrate(multiply(a, b)); }
  ExactMatrix gram() const;
  /// Dimensions of degree 0, 2, 4, ... components.
  std::vector<std::size_t> graded_dims() const;
  /// lcm of the cyclotomic orders of all stored constants.
  unsigned field_order() const;

  /// Throws ErrorCode::inconsistent_degree when products break the grading,
  /// the unit is not a unit, or the pairing is degenerate.
  void check_invariants() const;
};

/// Algebra on the staircase basis of a presentation; generators are the
/// ring variables (each must be a basis element). The functional takes
/// `top_value` on the unique top-degree basis element.
GradedAlgebra algebra_from_presentation(const QuotientPresentation<Rational>& q, const Rational& top_value);

/// Index of the unique basis element of maximal degree; throws when the top
/// degree is not one-dimensional.
std::size_t top_index(const QuotientPresentation<Rational>& q);

Vec to_vec(const std::vector<Rational>& v);
bool is_zero(const Vec& v);

}  // namespace mckay
