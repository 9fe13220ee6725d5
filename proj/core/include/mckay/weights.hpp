#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "mckay/rational.hpp"

namespace mckay {

/// Weight vector of a weighted projective space P(w), stored ascending.
/// Construction enforces positivity and gcd(w) = 1 (the orbifold condition).
class Weights {
 public:
  Weights(std::initializer_list<long> w) : Weights(std::vector<long>(w)) {}
  explicit Weights(std::vector<long> w);

  /// Parses a comma-separated list such as "1,3,4,4".
  static Weights parse(const std::string& text);
  /// (1, ..., 1, n) with n ones, the n-dimensional family.
  static Weights ones_then(long n);

  const std::vector<long>& values() const { return w_; }
  std::size_t size() const { return w_.size(); }
  /// Dimension n of P(w) (number of weights minus one).
  std::size_t dim() const { return w_.size() - 1; }
  long operator[](std::size_t i) const { return w_[i]; }
  long sum() const;
  Rational product() const;

  std::string str() const;

  friend bool operator==(const Weights&, const Weights&) = default;
  friend auto operator<=>(const Weights&, const Weights&) = default;

 private:
  std::vector<long> w_;
};

/// Every w_i divides the sum of the weights.
bool is_gorenstein(const Weights& w);

/// All Gorenstein weight systems of the given dimension, via Egyptian
/// fractions 1 = sum 1/x_i; sorted lexicographically.
std::vector<Weights> enumerate_gorenstein(int dim);

/// Sum of fractional parts of gamma * w_j; requires 0 <= gamma < 1.
Rational age(const Rational& gamma, const Weights& w);

struct Sector {
  Rational gamma;
  std::vector<std::size_t> fixed_indices;
  Rational age;
  std::vector<long> sector_weights;
};

/// Components of the inertia stack, indexed by gamma in [0, 1) with
/// gamma * w_i integral for some i, sorted by gamma. gamma = 0 is the
/// untwisted sector.
std::vector<Sector> twisted_sectors(const Weights& w);

}  // namespace mckay
