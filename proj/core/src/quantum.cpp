#include "mckay/quantum.hpp"

#include <algorithm>
#include <numeric>

#include "mckay/error.hpp"
#include "mckay/matrix.hpp"
#include "mckay/parse.hpp"

namespace mckay {

ChainConfig validate_chain(const GradedAlgebra& alg, const std::vector<CurveClass>& curves, const std::vector<Vec>& divisors,
                           const std::vector<bool>& chain_candidate) {
  if (chain_candidate.size() != curves.size()) throw Error(ErrorCode::dimension_mismatch, "one flag per curve class");
  ChainConfig cfg;
  std::vector<std::size_t> cand, host;
  for (std::size_t l = 0; l < curves.size(); ++l) {
    if (!chain_candidate[l]) {
      cfg.isolated.push_back(l);
      continue;
    }
    std::vector<std::size_t> negative;
    for (std::size_t j = 0; j < divisors.size(); ++j)
      if (alg.pairing(curves[l].pd_class, divisors[j]).to_rational().sign() < 0) negative.push_back(j);
    if (negative.size() != 1)
      throw Error(ErrorCode::chain_mismatch, "curve class " + std::to_string(l + 1) + " does not lie on a single exceptional divisor");
    cand.push_back(l);
    host.push_back(negative.front());
  }
  const std::size_t k = cand.size();
  if (k == 0) return cfg;
  std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) m[a][b] = alg.pairing(curves[cand[a]].pd_class, divisors[host[b]]).to_rational();

  // adjacency from off-diagonal entries; the pattern must be a path
  std::vector<std::vector<std::size_t>> nbr(k);
  for (std::size_t a = 0; a < k; ++a) {
    if (m[a][a] != Rational(-2)) throw Error(ErrorCode::chain_mismatch, "self-intersection of chain class is not -2");
    for (std::size_t b = 0; b < k; ++b) {
      if (a == b || m[a][b].is_zero()) continue;
      if (m[a][b] != Rational(1)) throw Error(ErrorCode::chain_mismatch, "chain classes meet with multiplicity other than 1");
      nbr[a].push_back(b);
    }
  }
  std::size_t start = k;
  for (std::size_t a = 0; a < k && start == k; ++a)
    if (nbr[a].size() <= 1) start = a;
  if (start == k) throw Error(ErrorCode::chain_mismatch, "chain classes form a cycle");
  std::vector<std::size_t> order{start};
  std::vector<bool> seen(k, false);
  seen[start] = true;
  while (true) {
    const auto& ns = nbr[order.back()];
    auto next = std::find_if(ns.begin(), ns.end(), [&](std::size_t b) { return !seen[b]; });
    if (next == ns.end()) break;
    if (std::count_if(ns.begin(), ns.end(), [&](std::size_t b) { return !seen[b]; }) > 1)
      throw Error(ErrorCode::chain_mismatch, "chain classes branch");
    seen[*next] = true;
    order.push_back(*next);
  }
  if (order.size() != k) throw Error(ErrorCode::chain_mismatch, "chain classes are not connected");
  // orient so the lowest curve index comes first
  if (cand[order.back()] < cand[order.front()]) std::reverse(order.begin(), order.end());
  for (std::size_t a : order) {
    cfg.chain.push_back(cand[a]);
    cfg.dual_divisor.push_back(host[a]);
  }
  cfg.cartan.assign(k, std::vector<Rational>(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) cfg.cartan[a][b] = m[order[a]][order[b]];
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      const long d = static_cast<long>(a) - static_cast<long>(b);
      const Rational want = d == 0 ? Rational(-2) : (d == 1 || d == -1 ? Rational(1) : Rational(0));
      if (cfg.cartan[a][b] != want) throw Error(ErrorCode::chain_mismatch, "intersection matrix is not of type A");
    }
  return cfg;
}

ChainConfig validate_chain(const ToricCohomology& tc) {
  std::vector<Vec> divisors;
  for (std::size_t j = 0; j < tc.exceptional_count(); ++j) divisors.push_back(tc.exceptional(j));
  std::vector<bool> candidate(tc.curves.size(), false);
  if (tc.resolution.refined.dim == 3) {
    for (std::size_t l = 0; l < tc.curves.size(); ++l) {
      std::vector<std::size_t> negative;
      for (std::size_t j = 0; j < divisors.size(); ++j)
        if (tc.algebra.pairing(tc.curves[l].pd_class, divisors[j]).to_rational().sign() < 0) negative.push_back(j);
      candidate[l] = negative.size() == 1 && tc.exceptional_support_dim[negative.front()] == 2;
    }
  }
  return validate_chain(tc.algebra, tc.curves, divisors, candidate);
}

std::string QuantumCoefficient::str(const ChainConfig& cfg) const {
  std::string s = constant.str();
  for (const auto& [sc, c] : terms) {
    std::string q;
    for (std::size_t p = sc.first; p <= sc.second; ++p) q += (q.empty() ? "" : "*") + std::string("q") + std::to_string(cfg.chain[p] + 1);
    s += " + (" + c.str() + ")*" + q + "/(1-" + q + ")";
  }
  return s;
}

QEvaluation QEvaluation::parse(const std::string& text) { return {parse_scalar_list(text, ',')}; }

std::string QEvaluation::str() const {
  std::string s;
  for (std::size_t i = 0; i < q.size(); ++i) s += (i ? "," : "") + q[i].str();
  return s;
}

QuantumCohomology::QuantumCohomology(GradedAlgebra classical, std::vector<CurveClass> curves, ChainConfig cfg)
    : classical_(std::move(classical)), curves_(std::move(curves)), cfg_(std::move(cfg)) {
  const auto ginv = inverse(classical_.gram());
  for (const auto& s : sub_chains()) {
    Vec pd = classical_.zero();
    for (std::size_t p = s.first; p <= s.second; ++p)
      for (std::size_t k = 0; k < pd.size(); ++k) pd[k] += curves_.at(cfg_.chain[p]).pd_class[k];
    Vec values;
    for (std::size_t k = 0; k < classical_.dim(); ++k) values.push_back(classical_.pairing(pd, classical_.basis_vector(k)));
    curve_values_[s] = values;
    dual_class_[s] = ginv.apply(values);
  }
}

QuantumCohomology::QuantumCohomology(const ToricCohomology& tc) : QuantumCohomology(tc.algebra, tc.curves, validate_chain(tc)) {}

std::vector<SubChain> QuantumCohomology::sub_chains() const {
  std::vector<SubChain> out;
  for (std::size_t a = 0; a < cfg_.chain.size(); ++a)
    for (std::size_t b = a; b < cfg_.chain.size(); ++b) out.emplace_back(a, b);
  return out;
}

CycloNumber QuantumCohomology::curve_integral(const SubChain& s, const Vec& a) const {
  const Vec& v = curve_values_.at(s);
  CycloNumber r(0);
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!a[k].is_zero() && !v[k].is_zero()) r += a[k] * v[k];
  return r;
}

const Vec& QuantumCohomology::sub_chain_class(const SubChain& s) const { return dual_class_.at(s); }

QuantumCoefficient QuantumCohomology::three_point(const Vec& a1, const Vec& a2, const Vec& a3) const {
  QuantumCoefficient c;
  for (const auto& s : sub_chains()) {
    // divisor axiom: sum_d (prod d*int a_i) / d^3 q^{dG} = prod int a_i * q^G/(1-q^G)
    const CycloNumber v = curve_integral(s, a1) * curve_integral(s, a2) * curve_integral(s, a3);
    if (!v.is_zero()) c.terms[s] = v;
  }
  return c;
}

std::vector<QuantumCoefficient> QuantumCohomology::symbolic_product(const Vec& a1, const Vec& a2) const {
  const Vec classical = classical_.multiply(a1, a2);
  std::vector<QuantumCoefficient> out(classical_.dim());
  for (std::size_t k = 0; k < out.size(); ++k) out[k].constant = classical[k];
  for (const auto& s : sub_chains()) {
    const CycloNumber f = curve_integral(s, a1) * curve_integral(s, a2);
    if (f.is_zero()) continue;
    const Vec& pd = dual_class_.at(s);
    for (std::size_t k = 0; k < out.size(); ++k)
      if (!pd[k].is_zero()) out[k].terms[s] += f * pd[k];
  }
  for (auto& c : out)
    std::erase_if(c.terms, [](const auto& t) { return t.second.is_zero(); });
  return out;
}

CycloNumber QuantumCohomology::monomial(const SubChain& s, const QEvaluation& q) const {
  CycloNumber m(1);
  for (std::size_t p = s.first; p <= s.second; ++p) m *= q.q.at(cfg_.chain[p]);
  return m;
}

GradedAlgebra QuantumCohomology::evaluate(const QEvaluation& q) const {
  if (q.q.size() != curves_.size())
    throw Error(ErrorCode::dimension_mismatch,
                "expected " + std::to_string(curves_.size()) + " quantum parameters, got " + std::to_string(q.q.size()));
  for (std::size_t l : cfg_.isolated)
    if (!q.q[l].is_zero())
      throw Error(ErrorCode::unsupported_parameter,
                  "q" + std::to_string(l + 1) + " belongs to an isolated class; only 0 is supported");
  std::map<SubChain, CycloNumber> factor;
  for (const auto& s : sub_chains()) {
    const CycloNumber m = monomial(s, q);
    if ((CycloNumber(1) - m).is_zero()) throw Error(ErrorCode::pole, "q^G = 1 on a sub-chain; the quantum product has a pole");
    if (!m.is_zero()) factor[s] = m / (CycloNumber(1) - m);
  }
  GradedAlgebra out = classical_;
  const std::size_t n = out.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Vec bi = out.basis_vector(i), bj = out.basis_vector(j);
      Vec c = out.constants[i][j];
      for (const auto& [s, f] : factor) {
        const CycloNumber w = curve_integral(s, bi) * curve_integral(s, bj);
        if (w.is_zero()) continue;
        const Vec& pd = dual_class_.at(s);
        for (std::size_t k = 0; k < n; ++k)
          if (!pd[k].is_zero()) c[k] += w * f * pd[k];
      }
      out.constants[i][j] = c;
      out.constants[j][i] = c;
    }
  return out;
}

CycloNumber evaluate(const QuantumCoefficient& c, const QuantumCohomology& qc, const QEvaluation& q) {
  CycloNumber r = c.constant;
  for (const auto& [s, v] : c.terms) {
    const CycloNumber m = qc.monomial(s, q);
    if ((CycloNumber(1) - m).is_zero()) throw Error(ErrorCode::pole, "q^G = 1 on a sub-chain");
    r += v * m / (CycloNumber(1) - m);
  }
  return r;
}

}  // namespace mckay
