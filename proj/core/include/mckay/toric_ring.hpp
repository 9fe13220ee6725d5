#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mckay/algebra.hpp"
#include "mckay/fan.hpp"
#include "mckay/groebner.hpp"
#include "mckay/weights.hpp"

namespace mckay {

/// Cohomology presentation of a smooth complete toric resolution over the
/// variables h, e_1..e_d (a single added ray is called "e").
struct ToricPresentation {
  PolyRing ring;
  std::size_t original_rays = 0;
  /// Class of the divisor of every ray of the refined fan, as a linear form
  /// in h and the e_j (original rays first, then added rays).
  std::vector<Polynomial<Rational>> divisors;
  /// Stanley-Reisner generators (minimal non-faces), rewritten in h, e.
  std::vector<Cone> non_faces;
  QuotientPresentation<Rational> quotient;
};

/// Stanley-Reisner ideal plus linear relations, with b_0..b_n eliminated
/// through h = (sum b_i + sum e_j) / sum w_i. Throws ErrorCode::not_smooth
/// for a singular fan and ErrorCode::invalid_fan for an incomplete one.
ToricPresentation toric_presentation(const Fan& refined, const Weights& w);

struct DegreeCalibration {
  std::size_t top = 0;   // staircase index of the top-degree monomial
  Rational top_value;    // integral of that monomial
};

/// Fixes the integral by requiring the product of the divisors of any
/// smooth maximal cone to integrate to 1, and checks every cone agrees
/// (ErrorCode::inconsistent_degree otherwise).
DegreeCalibration degree_functional(const ToricPresentation& p, const Fan& refined);

GradedAlgebra toric_algebra(const ToricPresentation& p, const DegreeCalibration& cal);

/// Class of an invariant curve V(wall), with the walls realising it.
struct CurveClass {
  std::vector<Cone> walls;
  Polynomial<Rational> pd_poly;   // normal form of the product of wall divisors
  Vec pd_class;                   // coordinates in the algebra basis
};

/// Generators of the cone of curves contracted by the resolution: new walls
/// whose curve has zero intersection with h, deduplicated by class and
/// ordered by the first basis element they involve.
std::vector<CurveClass> curve_classes_and_mrho(const Fan& original, const Fan& refined, const ToricPresentation& p,
                                               const GradedAlgebra& alg);

/// Intersection number of a curve class with a class of complementary
/// degree (typically a divisor).
Rational intersect(const CurveClass& c, const Vec& d, const GradedAlgebra& alg);

/// Everything above for one resolution of P(w).
struct ToricCohomology {
  Weights weights;
  Resolution resolution;
  ToricPresentation presentation;
  DegreeCalibration calibration;
  GradedAlgebra algebra;
  std::vector<CurveClass> curves;
  /// For each added ray: dimension of the smallest original cone containing it.
  std::vector<std::size_t> exceptional_support_dim;

  static ToricCohomology build(const Weights& w, const Resolution& res);
  static ToricCohomology builtin(const Weights& w) { return build(w, builtin_resolution(w)); }

  /// Basis vector of h or of the divisor of an added ray (0-based).
  Vec h() const;
  Vec exceptional(std::size_t j) const;
  std::size_t exceptional_count() const { return resolution.refined.rays.size() - presentation.original_rays; }
};

}  // namespace mckay
