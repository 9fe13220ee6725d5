#include "mckay/rational.hpp"

#include <ostream>

#include "mckay/error.hpp"

namespace mckay {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::division_by_zero: return "division_by_zero";
    case ErrorCode::singular_matrix: return "singular_matrix";
    case ErrorCode::dimension_mismatch: return "dimension_mismatch";
    case ErrorCode::invalid_weights: return "invalid_weights";
    case ErrorCode::non_gorenstein: return "non_gorenstein";
    case ErrorCode::invalid_fan: return "invalid_fan";
    case ErrorCode::non_primitive_ray: return "non_primitive_ray";
    case ErrorCode::outside_support: return "outside_support";
    case ErrorCode::not_refinement: return "not_refinement";
    case ErrorCode::not_smooth: return "not_smooth";
    case ErrorCode::unsupported_family: return "unsupported_family";
    case ErrorCode::non_artinian: return "non_artinian";
    case ErrorCode::inconsistent_degree: return "inconsistent_degree";
    case ErrorCode::chain_mismatch: return "chain_mismatch";
    case ErrorCode::pole: return "pole";
    case ErrorCode::unsupported_parameter: return "unsupported_parameter";
    case ErrorCode::relation_violation: return "relation_violation";
    case ErrorCode::parse_error: return "parse_error";
  }
  return "unknown";
}

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::division_by_zero, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw Error(ErrorCode::parse_error, "empty rational literal");
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw Error(ErrorCode::parse_error, "malformed rational literal '" + s + "'");
  mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw Error(ErrorCode::division_by_zero, "rational literal '" + s + "' has zero denominator");
  return Rational(mpq_class(n, d));
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::division_by_zero, "inverse of zero rational");
  mpq_class inv;
  mpq_inv(inv.get_mpq_t(), v_.get_mpq_t());
  return Rational(std::move(inv));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::division_by_zero, "rational division by zero");
  v_ /= o.v_;
  return *this;
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

mpz_class Rational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

Rational Rational::frac() const { return *this - Rational(mpq_class(floor())); }

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace mckay
