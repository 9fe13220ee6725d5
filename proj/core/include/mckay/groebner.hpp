#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mckay/error.hpp"
#include "mckay/polynomial.hpp"

namespace mckay {

/// Remainder of `p` on division by `basis`: supported on monomials not
/// divisible by any leading monomial of `basis`.
template <class K>
Polynomial<K> normal_form(Polynomial<K> p, const std::vector<Polynomial<K>>& basis, const MonomialOrder& ord) {
  std::vector<Monomial> leads;
  std::vector<K> lead_inv;
  leads.reserve(basis.size());
  for (const auto& g : basis) {
    leads.push_back(g.leading_monomial(ord));
    lead_inv.push_back(g.leading_coefficient(ord).inverse());
  }
  Polynomial<K> rem(p.nvars());
  while (!p.is_zero()) {
    const Monomial lm = p.leading_monomial(ord);
    const K lc = p.coefficient(lm);
    std::size_t k = 0;
    while (k < leads.size() && !divides(leads[k], lm)) ++k;
    if (k == leads.size()) {
      rem.add_term(lm, lc);
      p.add_term(lm, -lc);
      continue;
    }
    p -= basis[k].shifted(monomial_div(lm, leads[k]), lc * lead_inv[k]);
  }
  return rem;
}

template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g, const MonomialOrder& ord) {
  const Monomial& lf = f.leading_monomial(ord);
  const Monomial& lg = g.leading_monomial(ord);
  const Monomial l = monomial_lcm(lf, lg);
  return f.shifted(monomial_div(l, lf), f.leading_coefficient(ord).inverse()) -
         g.shifted(monomial_div(l, lg), g.leading_coefficient(ord).inverse());
}

/// Reduced Groebner basis by Buchberger's algorithm with the coprime and
/// chain criteria. Output is monic and sorted by decreasing leading monomial.
template <class K>
std::vector<Polynomial<K>> groebner_basis(const std::vector<Polynomial<K>>& gens, const MonomialOrder& ord) {
  std::vector<Polynomial<K>> g;
  for (const auto& p : gens)
    if (!p.is_zero()) g.push_back(p.monic(ord));
  if (g.empty()) return g;

  std::vector<Monomial> lead;
  for (const auto& p : g) lead.push_back(p.leading_monomial(ord));

  std::set<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t j = 1; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pending.emplace(i, j);

  auto is_pending = [&](std::size_t a, std::size_t b) { return pending.count({std::min(a, b), std::max(a, b)}) > 0; };

  while (!pending.empty()) {
    // normal strategy: smallest lcm first, ties by index for determinism
    auto best = pending.begin();
    Monomial best_lcm = monomial_lcm(lead[best->first], lead[best->second]);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Monomial l = monomial_lcm(lead[it->first], lead[it->second]);
      if (ord.less(l, best_lcm)) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    const auto [i, j] = *best;
    pending.erase(best);

    if (monomial_mul(lead[i], lead[j]) == best_lcm) continue;  // coprime leading monomials
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k)
      chain = k != i && k != j && divides(lead[k], best_lcm) && !is_pending(i, k) && !is_pending(j, k);
    if (chain) continue;

    Polynomial<K> r = normal_form(s_polynomial(g[i], g[j], ord), g, ord);
    if (r.is_zero()) continue;
    const std::size_t n = g.size();
    g.push_back(r.monic(ord));
    lead.push_back(g.back().leading_monomial(ord));
    for (std::size_t k = 0; k < n; ++k) pending.emplace(k, n);
  }

  // minimise: drop elements whose leading monomial is divisible by another's
  std::vector<Polynomial<K>> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j || !divides(lead[j], lead[i])) continue;
      redundant = lead[j] != lead[i] || j < i;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  // inter-reduce tails
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial<K>> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const Monomial lm = minimal[i].leading_monomial(ord);
    Polynomial<K> tail = minimal[i];
    tail.add_term(lm, -tail.coefficient(lm));
    Polynomial<K> reduced = normal_form(tail, others, ord);
    reduced.add_term(lm, K(1));
    minimal[i] = reduced;
  }
  std::sort(minimal.begin(), minimal.end(), [&](const auto& a, const auto& b) {
    return ord.less(b.leading_monomial(ord), a.leading_monomial(ord));
  });
  return minimal;
}

/// Certifies that every S-polynomial of `basis` reduces to zero.
template <class K>
bool is_groebner_basis(const std::vector<Polynomial<K>>& basis, const MonomialOrder& ord) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!normal_form(s_polynomial(basis[i], basis[j], ord), basis, ord).is_zero()) return false;
  return true;
}

/// Graded ordering used for staircase bases: by weighted degree, then
/// larger exponent of the lowest-index variable first (h^2, h*e1, ..., e4^2).
inline bool basis_order_less(const PolyRing& ring, const Monomial& a, const Monomial& b) {
  const int da = ring.degree(a), db = ring.degree(b);
  if (da != db) return da < db;
  return a > b;
}

/// Monomials outside the leading-term ideal; throws ErrorCode::non_artinian
/// when the quotient is infinite-dimensional.
template <class K>
std::vector<Monomial> staircase(const PolyRing& ring, const std::vector<Polynomial<K>>& basis, const MonomialOrder& ord) {
  const std::size_t n = ring.size();
  std::vector<Monomial> leads;
  for (const auto& g : basis) leads.push_back(g.leading_monomial(ord));
  if (std::any_of(leads.begin(), leads.end(), [](const Monomial& m) {
        return std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
      }))
    return {};  // unit ideal
  std::vector<int> bound(n, -1);
  for (const auto& m : leads) {
    std::size_t nz = 0, idx = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (m[i] > 0) {
        ++nz;
        idx = i;
      }
    if (nz == 1 && (bound[idx] < 0 || m[idx] < bound[idx])) bound[idx] = m[idx];
  }
  for (std::size_t i = 0; i < n; ++i)
    if (bound[i] < 0)
      throw Error(ErrorCode::non_artinian, "quotient is not Artinian: no pure power of " + ring.names[i] + " is a leading term");
  std::vector<Monomial> out;
  Monomial cur(n, 0);
  // odometer over the box [0, bound)
  while (true) {
    if (std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return divides(l, cur); })) out.push_back(cur);
    std::size_t i = 0;
    while (i < n && ++cur[i] == bound[i]) cur[i++] = 0;
    if (i == n) break;
  }
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return basis_order_less(ring, a, b); });
  return out;
}

/// Ideal generators together with their reduced Groebner basis and
/// staircase monomial basis.
template <class K>
struct QuotientPresentation {
  PolyRing ring;
  MonomialOrder order;
  std::vector<Polynomial<K>> generators;
  std::vector<Polynomial<K>> groebner;
  std::vector<Monomial> staircase;

  Polynomial<K> reduce(const Polynomial<K>& p) const { return normal_form(p, groebner, order); }

  std::size_t index_of(const Monomial& m) const {
    auto it = std::find(staircase.begin(), staircase.end(), m);
    if (it == staircase.end()) throw Error(ErrorCode::dimension_mismatch, "monomial " + ring.monomial_str(m) + " is not a basis element");
    return static_cast<std::size_t>(it - staircase.begin());
  }

  /// Coordinates of the normal form of `p` in the staircase basis.
  std::vector<K> coordinates(const Polynomial<K>& p) const {
    const Polynomial<K> r = reduce(p);
    std::vector<K> v(staircase.size(), K(0));
    for (const auto& [m, c] : r.terms()) v[index_of(m)] = c;
    return v;
  }
};

template <class K>
QuotientPresentation<K> make_presentation(PolyRing ring, std::vector<Polynomial<K>> gens, MonomialOrder order) {
  QuotientPresentation<K> q;
  q.groebner = groebner_basis(gens, order);
  q.staircase = staircase(ring, q.groebner, order);
  q.ring = std::move(ring);
  q.order = std::move(order);
  q.generators = std::move(gens);
  return q;
}

/// table[i][j] = coordinates of staircase[i] * staircase[j].
template <class K>
std::vector<std::vector<std::vector<K>>> structure_constants(const QuotientPresentation<K>& q) {
  const std::size_t n = q.staircase.size();
  std::vector<std::vector<std::vector<K>>> table(n, std::vector<std::vector<K>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      table[i][j] = q.coordinates(Polynomial<K>::monomial(monomial_mul(q.staircase[i], q.staircase[j]), K(1)));
      table[j][i] = table[i][j];
    }
  return table;
}

}  // namespace mckay
