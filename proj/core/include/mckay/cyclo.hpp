#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mckay/matrix.hpp"
#include "mckay/rational.hpp"

namespace mckay {

unsigned euler_phi(unsigned n);

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
std::vector<Rational> cyclotomic_polynomial(unsigned n);

/// Element of the cyclotomic field Q(zeta_N), stored in the power basis
/// zeta^0 .. zeta^(phi(N)-1) modulo the N-th cyclotomic polynomial.
///
/// Binary operations run at the lcm of the operand orders. Results that
/// happen to be rational drop back to order 1; otherwise the order is not
/// minimised (see `canonical()`).
class CycloNumber {
 public:
  CycloNumber() : order_(1), coeffs_{Rational(0)} {}
  CycloNumber(int value) : order_(1), coeffs_{Rational(value)} {}  // NOLINT
  CycloNumber(long value) : order_(1), coeffs_{Rational(value)} {}  // NOLINT
  CycloNumber(Rational value) : order_(1), coeffs_{std::move(value)} {}  // NOLINT

  /// Takes ownership of a power-basis coefficient vector of length phi(order).
  CycloNumber(unsigned order, std::vector<Rational> coeffs);

  /// zeta_N^k for any integer k.
  static CycloNumber root_of_unity(long k, unsigned n);
  static CycloNumber imaginary_unit() { return root_of_unity(1, 4); }
  /// sqrt(2) realised as zeta_8 + zeta_8^-1.
  static CycloNumber sqrt2();

  unsigned order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const { return is_rational() && coeffs_[0].is_one(); }
  bool is_rational() const;
  /// Throws when the value is not rational.
  Rational to_rational() const;

  /// Same value written over Q(zeta_m); `order()` must divide m.
  CycloNumber embed(unsigned m) const;
  /// Same value at the smallest order whose field contains it.
  CycloNumber canonical() const;

  CycloNumber inverse() const;
  CycloNumber pow(long e) const;
  /// Complex conjugate (zeta -> zeta^-1).
  CycloNumber conj() const;

  /// Readable literal understood by the polynomial parser, e.g. "-2+6*i" or
  /// "3*zeta(3,1)".
  std::string str() const;

  CycloNumber operator-() const;
  CycloNumber& operator+=(const CycloNumber& o);
  CycloNumber& operator-=(const CycloNumber& o);
  CycloNumber& operator*=(const CycloNumber& o);
  CycloNumber& operator/=(const CycloNumber& o) { return *this *= o.inverse(); }

  friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
  friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
  friend CycloNumber operator*(CycloNumber a, const CycloNumber& b) { return a *= b; }
  friend CycloNumber operator/(CycloNumber a, const CycloNumber& b) { return a /= b; }

  friend bool operator==(const CycloNumber& a, const CycloNumber& b);

 private:
  void drop_if_rational();

  unsigned order_;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycloNumber& c);

using ExactMatrix = Matrix<CycloNumber>;

/// Exact solution of A x = b; throws ErrorCode::singular_matrix.
std::vector<CycloNumber> solve_linear(const ExactMatrix& a, const std::vector<CycloNumber>& b);

/// Least common multiple of the orders of a collection of values.
unsigned common_order(const std::vector<CycloNumber>& values);

}  // namespace mckay
