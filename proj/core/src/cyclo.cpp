#include "mckay/cyclo.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "mckay/error.hpp"

namespace mckay {

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

using Poly = std::vector<Rational>;

// Exact division of polynomials whose divisor is monic.
Poly divide_monic(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  Poly quot(num.size() - dn, Rational(0));
  for (std::size_t i = num.size(); i-- > dn;) {
    const Rational c = num[i];
    if (c.is_zero()) continue;
    quot[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return quot;
}

// Field data for Q(zeta_N): the reduction of every power zeta^j, j < N.
struct FieldTable {
  unsigned order;
  unsigned phi;
  std::vector<std::vector<Rational>> powers;
};

const FieldTable& field_table(unsigned n) {
  static std::mutex mutex;
  static std::map<unsigned, std::unique_ptr<const FieldTable>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  auto table = std::make_unique<FieldTable>();
  table->order = n;
  const Poly phi_poly = cyclotomic_polynomial(n);
  table->phi = static_cast<unsigned>(phi_poly.size() - 1);
  const unsigned phi = table->phi;
  std::vector<Rational> cur(phi, Rational(0));
  cur[0] = 1;
  table->powers.reserve(n);
  for (unsigned j = 0; j < n; ++j) {
    table->powers.push_back(cur);
    // multiply by zeta and reduce x^phi = -sum c_k x^k
    std::vector<Rational> next(phi, Rational(0));
    const Rational top = cur[phi - 1];
    for (unsigned k = phi - 1; k > 0; --k) next[k] = cur[k - 1];
    if (phi > 0) next[0] = Rational(0);
    if (!top.is_zero())
      for (unsigned k = 0; k < phi; ++k) next[k] -= top * phi_poly[k];
    cur = std::move(next);
  }
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(n, std::move(table));
  return *it->second;
}

unsigned lcm_u(unsigned a, unsigned b) { return std::lcm(a, b); }

}  // namespace

std::vector<Rational> cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw Error(ErrorCode::invalid_weights, "cyclotomic order must be positive");
  Poly num(n + 1, Rational(0));
  num[0] = -1;
  num[n] = 1;
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) num = divide_monic(num, cyclotomic_polynomial(d));
  return num;
}

CycloNumber::CycloNumber(unsigned order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  if (order_ == 0) throw Error(ErrorCode::dimension_mismatch, "cyclotomic order must be positive");
  if (coeffs_.size() != euler_phi(order_))
    throw Error(ErrorCode::dimension_mismatch, "expected " + std::to_string(euler_phi(order_)) +
                                                   " coefficients for order " + std::to_string(order_));
  drop_if_rational();
}

CycloNumber CycloNumber::root_of_unity(long k, unsigned n) {
  if (n == 0) throw Error(ErrorCode::dimension_mismatch, "root of unity order must be positive");
  const auto& t = field_table(n);
  const long r = ((k % static_cast<long>(n)) + n) % n;
  return CycloNumber(n, t.powers[static_cast<std::size_t>(r)]);
}

CycloNumber CycloNumber::sqrt2() { return root_of_unity(1, 8) + root_of_unity(7, 8); }

void CycloNumber::drop_if_rational() {
  if (order_ == 1) return;
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    if (!coeffs_[k].is_zero()) return;
  // phi(N) >= 1 always; a lone constant term is rational at any order
  Rational c = coeffs_[0];
  order_ = 1;
  coeffs_.assign(1, std::move(c));
}

bool CycloNumber::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool CycloNumber::is_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    if (!coeffs_[k].is_zero()) return false;
  return true;
}

Rational CycloNumber::to_rational() const {
  if (!is_rational()) throw Error(ErrorCode::dimension_mismatch, "value " + str() + " is not rational");
  return coeffs_[0];
}

CycloNumber CycloNumber::embed(unsigned m) const {
  if (m == 0 || m % order_ != 0)
    throw Error(ErrorCode::dimension_mismatch,
                "cannot embed order " + std::to_string(order_) + " into order " + std::to_string(m));
  if (m == order_) return *this;
  const auto& t = field_table(m);
  const unsigned step = m / order_;
  std::vector<Rational> out(t.phi, Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    const auto& p = t.powers[(k * step) % m];
    for (unsigned j = 0; j < t.phi; ++j)
      if (!p[j].is_zero()) out[j] += coeffs_[k] * p[j];
  }
  CycloNumber r;
  r.order_ = m;
  r.coeffs_ = std::move(out);
  return r;  // not dropped: callers asked for order m explicitly
}

CycloNumber CycloNumber::canonical() const {
  CycloNumber self = *this;
  self.drop_if_rational();
  if (self.order_ == 1) return self;
  for (unsigned d = 3; d < order_; ++d) {
    if (order_ % d != 0 || d % 4 == 2) continue;
    const unsigned pd = euler_phi(d);
    Matrix<Rational> basis(coeffs_.size(), pd);
    for (unsigned j = 0; j < pd; ++j) {
      const auto col = root_of_unity(j, d).embed(order_);
      for (std::size_t r = 0; r < coeffs_.size(); ++r) basis(r, j) = col.coeffs_[r];
    }
    if (auto sol = solve_consistent(basis, std::span<const Rational>(coeffs_))) {
      CycloNumber r;
      r.order_ = d;
      r.coeffs_ = std::move(*sol);
      return r;
    }
  }
  return self;
}

CycloNumber CycloNumber::operator-() const {
  CycloNumber r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& o) {
  if (o.order_ != order_) {
    const unsigned m = lcm_u(order_, o.order_);
    if (m != order_) *this = embed(m);
    if (m != o.order_) return *this += o.embed(m);
  }
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  drop_if_rational();
  return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& o) { return *this += -o; }

CycloNumber& CycloNumber::operator*=(const CycloNumber& o) {
  if (o.order_ == 1) {
    for (auto& c : coeffs_) c *= o.coeffs_[0];
    drop_if_rational();
    return *this;
  }
  if (order_ == 1) {
    const Rational s = coeffs_[0];
    *this = o;
    for (auto& c : coeffs_) c *= s;
    drop_if_rational();
    return *this;
  }
  const unsigned m = lcm_u(order_, o.order_);
  const CycloNumber a = embed(m);
  const CycloNumber b = o.embed(m);
  const auto& t = field_table(m);
  std::vector<Rational> conv(2 * t.phi - 1, Rational(0));
  for (unsigned i = 0; i < t.phi; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (unsigned j = 0; j < t.phi; ++j)
      if (!b.coeffs_[j].is_zero()) conv[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  std::vector<Rational> out(t.phi, Rational(0));
  for (std::size_t k = 0; k < conv.size(); ++k) {
    if (conv[k].is_zero()) continue;
    const auto& p = t.powers[k % m];
    for (unsigned j = 0; j < t.phi; ++j)
      if (!p[j].is_zero()) out[j] += conv[k] * p[j];
  }
  order_ = m;
  coeffs_ = std::move(out);
  drop_if_rational();
  return *this;
}

CycloNumber CycloNumber::inverse() const {
  if (is_zero()) throw Error(ErrorCode::division_by_zero, "inverse of zero in Q(zeta_" + std::to_string(order_) + ")");
  if (order_ == 1) return CycloNumber(coeffs_[0].inverse());
  const auto& t = field_table(order_);
  // multiplication-by-this matrix in the power basis
  Matrix<Rational> mul(t.phi, t.phi);
  for (unsigned j = 0; j < t.phi; ++j) {
    const CycloNumber col = *this * CycloNumber(order_, t.powers[j]);
    const CycloNumber full = col.embed(order_);
    for (unsigned r = 0; r < t.phi; ++r) mul(r, j) = full.coeffs_[r];
  }
  std::vector<Rational> e0(t.phi, Rational(0));
  e0[0] = 1;
  return CycloNumber(order_, solve(mul, std::span<const Rational>(e0)));
}

CycloNumber CycloNumber::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloNumber result(1);
  CycloNumber base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

CycloNumber CycloNumber::conj() const {
  CycloNumber acc(0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (!coeffs_[k].is_zero())
      acc += CycloNumber(coeffs_[k]) * root_of_unity(-static_cast<long>(k), order_);
  return acc;
}

bool operator==(const CycloNumber& a, const CycloNumber& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  const unsigned m = std::lcm(a.order_, b.order_);
  return a.embed(m).coeffs_ == b.embed(m).coeffs_;
}

std::string CycloNumber::str() const {
  const CycloNumber c = canonical();
  if (c.order_ == 1) return c.coeffs_[0].str();
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Rational& coeff, const std::string& unit) {
    if (coeff.is_zero()) return;
    Rational mag = coeff;
    if (coeff.sign() < 0) {
      os << (first ? "-" : "-");
      mag = -coeff;
    } else if (!first) {
      os << "+";
    }
    if (unit.empty()) {
      os << mag.str();
    } else if (mag.is_one()) {
      os << unit;
    } else {
      os << mag.str() << "*" << unit;
    }
    first = false;
  };
  for (std::size_t k = 0; k < c.coeffs_.size(); ++k) {
    std::string unit;
    if (k > 0) unit = c.order_ == 4 ? std::string("i") : "zeta(" + std::to_string(c.order_) + "," + std::to_string(k) + ")";
    emit(c.coeffs_[k], unit);
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycloNumber& c) { return os << c.str(); }

std::vector<CycloNumber> solve_linear(const ExactMatrix& a, const std::vector<CycloNumber>& b) {
  return solve(a, std::span<const CycloNumber>(b));
}

unsigned common_order(const std::vector<CycloNumber>& values) {
  unsigned m = 1;
  for (const auto& v : values) m = std::lcm(m, v.order());
  return m;
}

}  // namespace mckay
