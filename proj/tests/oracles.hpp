#pragma once

#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "mckay/quantum.hpp"

// Reference data for the P(1,3,4,4) resolution, entered by hand and
// independent of the library's own computations.
namespace mckay::test {

struct Term {
  int mu, nu;  // 1-based sub-chain Gamma_{mu..nu}
  long coeff;
};
struct Entry {
  std::string basis;
  long constant;
  std::vector<Term> terms;
};

inline QuantumCoefficient coefficient(long constant, const std::vector<Term>& terms) {
  QuantumCoefficient c;
  c.constant = CycloNumber(constant);
  for (const auto& t : terms)
    c.terms[{static_cast<std::size_t>(t.mu - 1), static_cast<std::size_t>(t.nu - 1)}] = CycloNumber(t.coeff);
  return c;
}

// e_i * e_j, coefficient lists per basis element
inline const std::vector<std::tuple<int, int, std::vector<Entry>>> kSymbolicTable{
    {1, 1, {{"h^2", -24, {}},
            {"h*e1", 10, {{1, 1, 16}, {1, 2, 4}, {1, 3, 4}}},
            {"h*e2", 4, {{2, 2, 4}, {1, 2, 4}, {2, 3, 4}, {1, 3, 4}}},
            {"h*e3", 2, {{2, 3, 4}, {1, 3, 4}}}}},
    {1, 2, {{"h^2", 12, {}},
            {"h*e1", -3, {{1, 1, -8}, {1, 2, 4}}},
            {"h*e2", -2, {{2, 2, -8}, {1, 2, 4}, {2, 3, -4}}},
            {"h*e3", -1, {{2, 3, -4}}}}},
    {1, 3, {{"h*e1", 0, {{1, 2, -4}, {1, 3, 4}}},
            {"h*e2", 0, {{2, 2, 4}, {1, 2, -4}, {2, 3, -4}, {1, 3, 4}}},
            {"h*e3", 0, {{2, 3, -4}, {1, 3, 4}}}}},
    {2, 2, {{"h^2", -24, {}},
            {"h*e1", 6, {{1, 1, 4}, {1, 2, 4}}},
            {"h*e2", 12, {{2, 2, 16}, {1, 2, 4}, {2, 3, 4}}},
            {"h*e3", 2, {{3, 3, 4}, {2, 3, 4}}}}},
    {2, 3, {{"h^2", 12, {}},
            {"h*e1", -3, {{1, 2, -4}}},
            {"h*e2", -6, {{2, 2, -8}, {1, 2, -4}, {2, 3, 4}}},
            {"h*e3", -1, {{3, 3, -8}, {2, 3, 4}}}}},
    {3, 3, {{"h^2", -24, {}},
            {"h*e1", 6, {{1, 2, 4}, {1, 3, 4}}},
            {"h*e2", 12, {{2, 2, 4}, {1, 2, 4}, {2, 3, 4}, {1, 3, 4}}},
            {"h*e3", 14, {{3, 3, 16}, {2, 3, 4}, {1, 3, 4}}}}},
};

// the same products at q = (i, i, i, 0)
inline const std::vector<std::tuple<int, int, std::vector<std::pair<std::string, std::string>>>> kAtI{
    {1, 1, {{"h^2", "-24"}, {"h*e1", "-2+6*i"}, {"h*e2", "-4"}, {"h*e3", "-2-2*i"}}},
    {1, 2, {{"h^2", "12"}, {"h*e1", "-1-4*i"}, {"h*e2", "2-4*i"}, {"h*e3", "1"}}},
    {1, 3, {{"h*e1", "-2*i"}, {"h*e3", "-2*i"}}},
    {2, 2, {{"h^2", "-24"}, {"h*e1", "2+2*i"}, {"h*e2", "8*i"}, {"h*e3", "-2+2*i"}}},
    {2, 3, {{"h^2", "12"}, {"h*e1", "-1"}, {"h*e2", "-2-4*i"}, {"h*e3", "1-4*i"}}},
    {3, 3, {{"h^2", "-24"}, {"h*e1", "2-2*i"}, {"h*e2", "4"}, {"h*e3", "2+6*i"}}},
};

/// Three-point function <e_a, e_b, e_c> summed over curve degrees d with
/// every d_l <= D, all q_l = x. Multiples k of a connected sub-chain carry
/// invariant 1/k^3, everything else 0.
inline Rational a3_series(int a, int b, int c, const Rational& x, int D) {
  const long cartan[3][3] = {{-2, 1, 0}, {1, -2, 1}, {0, 1, -2}};
  Rational series(0);
  for (int d1 = 0; d1 <= D; ++d1)
    for (int d2 = 0; d2 <= D; ++d2)
      for (int d3 = 0; d3 <= D; ++d3) {
        const int d[3] = {d1, d2, d3};
        int lo = -1, hi = -1, k = 0;
        bool ok = true;
        for (int l = 0; l < 3; ++l) {
          if (d[l] == 0) continue;
          if (lo < 0) {
            lo = l;
            k = d[l];
          } else if (hi != l - 1 || d[l] != k) {
            ok = false;
          }
          hi = l;
        }
        if (lo < 0 || !ok) continue;
        auto integral = [&](int j) {
          long s = 0;
          for (int l = 0; l < 3; ++l) s += d[l] * cartan[l][j];
          return Rational(s);
        };
        Rational term = integral(a) * integral(b) * integral(c) / Rational(static_cast<long>(k) * k * k);
        for (int l = 0; l < 3; ++l)
          for (int r = 0; r < d[l]; ++r) term *= x;
        series += term;
      }
  return series;
}

/// Exact sum of the closed form's terms beyond degree D: each sub-chain
/// contributes coeff * y^(D+1) / (1 - y) with y = x^length.
inline Rational geometric_tail(const QuantumCoefficient& tp, const Rational& x, int D) {
  Rational tail(0);
  for (const auto& [s, v] : tp.terms) {
    Rational y(1);
    for (std::size_t p = s.first; p <= s.second; ++p) y *= x;
    Rational yd(1);
    for (int r = 0; r <= D; ++r) yd *= y;
    tail += v.to_rational() * yd / (Rational(1) - y);
  }
  return tail;
}

inline CycloNumber random_parameter(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-7, 7), den(1, 6);
  switch (rng() % 3) {
    case 0: return CycloNumber(Rational(num(rng), den(rng)));
    case 1:
      return CycloNumber(Rational(num(rng), den(rng))) +
             CycloNumber::imaginary_unit() * CycloNumber(Rational(num(rng), den(rng)));
    default: return CycloNumber::root_of_unity(static_cast<long>(rng() % 12), 12) * CycloNumber(Rational(num(rng), den(rng)));
  }
}

/// Random evaluations of the chain parameters (isolated ones at 0) off
/// the pole locus q^G = 1.
inline std::vector<QEvaluation> random_evaluations(const QuantumCohomology& qc, std::size_t count, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<QEvaluation> out;
  while (out.size() < count) {
    QEvaluation q = QEvaluation::zero(qc.curves().size());
    for (auto l : qc.chain().chain) q.q[l] = random_parameter(rng);
    bool pole = false;
    for (const auto& s : qc.sub_chains()) pole = pole || (CycloNumber(1) - qc.monomial(s, q)).is_zero();
    if (!pole) out.push_back(std::move(q));
  }
  return out;
}

}  // namespace mckay::test
