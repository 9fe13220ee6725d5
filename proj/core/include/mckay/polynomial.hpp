#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mckay/error.hpp"

namespace mckay {

using Monomial = std::vector<int>;

/// Variable names and their grading weights (cohomological degree / 2).
/// Index 0 is the smallest variable in every order below.
struct PolyRing {
  std::vector<std::string> names;
  std::vector<int> weights;

  PolyRing() = default;
  explicit PolyRing(std::vector<std::string> n) : names(std::move(n)), weights(names.size(), 1) {}
  PolyRing(std::vector<std::string> n, std::vector<int> w) : names(std::move(n)), weights(std::move(w)) {
    if (weights.size() != names.size()) throw Error(ErrorCode::dimension_mismatch, "one weight per variable");
  }

  std::size_t size() const { return names.size(); }
  int degree(const Monomial& m) const {
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * weights[i];
    return d;
  }
  /// "1", "h", "h*e1", "e4^2", ...
  std::string monomial_str(const Monomial& m) const {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += names[i];
      if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
  }
};

enum class OrderKind { grevlex, grlex, lex };

/// Admissible monomial order. Graded orders use the ring weights.
struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;
  std::vector<int> weights;

  static MonomialOrder grevlex(const PolyRing& r) { return {OrderKind::grevlex, r.weights}; }
  static MonomialOrder grlex(const PolyRing& r) { return {OrderKind::grlex, r.weights}; }
  static MonomialOrder lex(const PolyRing& r) { return {OrderKind::lex, r.weights}; }

  /// <0, 0, >0 as a is smaller, equal, larger than b.
  int compare(const Monomial& a, const Monomial& b) const {
    if (kind != OrderKind::lex) {
      int da = 0, db = 0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        da += a[i] * weights[i];
        db += b[i] * weights[i];
      }
      if (da != db) return da < db ? -1 : 1;
    }
    if (kind == OrderKind::grevlex) {
      // smallest variable first; fewer of it means larger
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
      return 0;
    }
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
};

inline bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
  return m;
}

inline Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = a[i] + b[i];
  return m;
}

inline Monomial monomial_div(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = a[i] - b[i];
  return m;
}

/// Sparse polynomial with exact coefficients; zero coefficients are never
/// stored.
template <class K>
class Polynomial {
 public:
  using Terms = std::map<Monomial, K>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const K& c) {
    Polynomial p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
  }
  static Polynomial variable(std::size_t nvars, std::size_t index) {
    Monomial m(nvars, 0);
    m.at(index) = 1;
    Polynomial p(nvars);
    p.add_term(m, K(1));
    return p;
  }
  static Polynomial monomial(const Monomial& m, const K& c) {
    Polynomial p(m.size());
    p.add_term(m, c);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  K coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? K(0) : it->second;
  }

  void add_term(const Monomial& m, const K& c) {
    if (m.size() != nvars_) throw Error(ErrorCode::dimension_mismatch, "monomial has wrong number of variables");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Leading monomial; polynomial must be nonzero.
  const Monomial& leading_monomial(const MonomialOrder& ord) const {
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
      if (ord.less(best->first, it->first)) best = it;
    return best->first;
  }
  const K& leading_coefficient(const MonomialOrder& ord) const { return terms_.at(leading_monomial(ord)); }

  Polynomial monic(const MonomialOrder& ord) const {
    if (is_zero()) return *this;
    return scaled(leading_coefficient(ord).inverse());
  }

  Polynomial scaled(const K& c) const {
    Polynomial out(nvars_);
    if (c.is_zero()) return out;
    for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
    return out;
  }

  Polynomial shifted(const Monomial& by, const K& c) const {
    Polynomial out(nvars_);
    if (c.is_zero()) return out;
    for (const auto& [m, v] : terms_) out.terms_.emplace(monomial_mul(m, by), v * c);
    return out;
  }

  /// Maximal weighted degree of a term; -1 for the zero polynomial.
  int degree(const std::vector<int>& weights) const {
    int d = -1;
    for (const auto& [m, v] : terms_) {
      int dm = 0;
      for (std::size_t i = 0; i < m.size(); ++i) dm += m[i] * weights[i];
      d = std::max(d, dm);
    }
    return d;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check(o);
    for (const auto& [m, v] : o.terms_) add_term(m, v);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check(o);
    for (const auto& [m, v] : o.terms_) add_term(m, -v);
    return *this;
  }
  Polynomial operator-() const { return scaled(K(-1)); }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check(b);
    Polynomial out(a.nvars_);
    for (const auto& [ma, va] : a.terms_)
      for (const auto& [mb, vb] : b.terms_) out.add_term(monomial_mul(ma, mb), va * vb);
    return out;
  }

  Polynomial pow(int e) const {
    Polynomial out = constant(nvars_, K(1));
    for (int i = 0; i < e; ++i) out = out * *this;
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Terms in decreasing order, e.g. "h^2+1/4*e^2-h*e".
  std::string str(const PolyRing& ring, const MonomialOrder& ord) const {
    if (is_zero()) return "0";
    std::vector<std::pair<Monomial, K>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(),
              [&](const auto& x, const auto& y) { return ord.less(y.first, x.first); });
    std::string s;
    for (const auto& [m, c] : sorted) {
      const std::string mono = ring.monomial_str(m);
      std::string cs = c.str();
      const bool compound = cs.find_first_of("+-", 1) != std::string::npos;
      if (compound) cs = "(" + cs + ")";
      std::string term;
      if (mono == "1") {
        term = cs;
      } else if (cs == "1") {
        term = mono;
      } else if (cs == "-1") {
        term = "-" + mono;
      } else {
        term = cs + "*" + mono;
      }
      if (!s.empty() && term[0] != '-') s += "+";
      s += term;
    }
    return s;
  }

 private:
  void check(const Polynomial& o) const {
    if (o.nvars_ != nvars_) throw Error(ErrorCode::dimension_mismatch, "polynomials over different variable sets");
  }

  std::size_t nvars_ = 0;
  Terms terms_;
};

/// Coefficient-wise conversion between fields (e.g. Rational -> CycloNumber).
template <class To, class From>
Polynomial<To> convert(const Polynomial<From>& p) {
  Polynomial<To> out(p.nvars());
  for (const auto& [m, c] : p.terms()) out.add_term(m, To(c));
  return out;
}

}  // namespace mckay
