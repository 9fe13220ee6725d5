#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mckay/rational.hpp"
#include "mckay/weights.hpp"

namespace mckay {

using IntVector = std::vector<long>;
using Cone = std::vector<std::size_t>;

/// Complete simplicial fan in Z^dim given by primitive rays and maximal
/// cones (sorted ray-index sets of size dim).
struct Fan {
  std::size_t dim = 0;
  std::vector<IntVector> rays;
  std::vector<Cone> max_cones;

  /// Throws ErrorCode::invalid_fan unless rays are primitive, cones are
  /// full-dimensional simplicial, every wall is shared by exactly two cones
  /// on opposite sides, and a test point is covered exactly once.
  void validate() const;

  /// Index of an existing ray equal to `ray`.
  std::optional<std::size_t> find_ray(const IntVector& ray) const;
};

bool is_primitive(const IntVector& v);

/// Coefficients of `v` in the (linearly independent) generators of `cone`.
std::vector<Rational> cone_coordinates(const Fan& fan, const Cone& cone, const IntVector& v);

/// Fan of P(w): rays with sum w_i g_i = 0, max cones all n-subsets.
/// For w_0 = 1 uses g_0 = -(w_1, ..., w_n), g_i = e_i; otherwise reduces
/// the relation vector w to e_0 by unimodular row operations.
Fan build_wps_fan(const Weights& w);

/// Replaces every max cone containing `ray` by its stellar subdivision.
/// Subdividing at an existing ray returns the fan unchanged.
Fan stellar_subdivide(const Fan& fan, const IntVector& ray);

struct ResolutionReport {
  bool smooth = false;
  bool crepant = false;
};

/// Checks that `refined` refines `original` (ErrorCode::not_refinement
/// otherwise) and reports unimodularity of its cones and whether every ray
/// sits at height one in the original cone containing it.
ResolutionReport validate_resolution(const Fan& original, const Fan& refined, const Weights& w);

struct Resolution {
  Fan original;
  Fan refined;
};

/// Rays inserted by the built-in crepant resolutions, in insertion order.
/// Throws ErrorCode::unsupported_family outside (1,1,2,2), (1,3,4,4) and
/// (1,...,1,n).
std::vector<IntVector> builtin_resolution_rays(const Weights& w);

Resolution builtin_resolution(const Weights& w);

/// Applies `rays` in order to the fan of P(w).
Resolution resolve_with_rays(const Weights& w, const std::vector<IntVector>& rays);

}  // namespace mckay
