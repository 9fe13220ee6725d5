#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mckay/algebra.hpp"
#include "mckay/toric_ring.hpp"

namespace mckay {

/// Split of the contracted curve generators into one transversal A_k chain
/// and isolated classes. Indices refer to the curve list (and therefore to
/// the quantum parameters q_1..q_m in that order).
struct ChainConfig {
  std::vector<std::size_t> chain;
  std::vector<std::size_t> isolated;
  /// Exceptional divisor (0-based e index) dual to each chain class.
  std::vector<std::size_t> dual_divisor;
  /// cartan[a][b] = integral of e_{dual_divisor[b]} over chain class a.
  std::vector<std::vector<Rational>> cartan;
};

/// `divisors[j]` is the class of the j-th exceptional divisor and
/// `chain_candidate[l]` says whether curve l may sit in a chain. Candidates
/// must have a unique exceptional divisor of negative degree and their
/// matrix must be the negated A_k Cartan matrix in some order
/// (ErrorCode::chain_mismatch otherwise).
ChainConfig validate_chain(const GradedAlgebra& alg, const std::vector<CurveClass>& curves, const std::vector<Vec>& divisors,
                           const std::vector<bool>& chain_candidate);

/// Candidates are the classes living over a transversal surface singularity:
/// threefolds whose negative divisor comes from a ray over a 2-dimensional
/// original cone.
ChainConfig validate_chain(const ToricCohomology& tc);

/// Connected sub-chain Gamma_{first..last}, positions in ChainConfig::chain.
using SubChain = std::pair<std::size_t, std::size_t>;

/// constant + sum over sub-chains of terms[G] * q^G / (1 - q^G).
struct QuantumCoefficient {
  CycloNumber constant;
  std::map<SubChain, CycloNumber> terms;

  bool operator==(const QuantumCoefficient&) const = default;
  std::string str(const ChainConfig& cfg) const;
};

/// Values of q_1..q_m, one per curve generator.
struct QEvaluation {
  std::vector<CycloNumber> q;

  static QEvaluation parse(const std::string& text);
  static QEvaluation zero(std::size_t m) { return {std::vector<CycloNumber>(m, CycloNumber(0))}; }
  std::string str() const;
};

/// Small quantum product of a crepant resolution under the A_k chain rule
/// (GW invariant 1/d^3 on multiples of connected sub-chains, 0 otherwise).
class QuantumCohomology {
 public:
  QuantumCohomology(GradedAlgebra classical, std::vector<CurveClass> curves, ChainConfig cfg);
  explicit QuantumCohomology(const ToricCohomology& tc);

  const GradedAlgebra& classical() const { return classical_; }
  const ChainConfig& chain() const { return cfg_; }
  const std::vector<CurveClass>& curves() const { return curves_; }
  std::vector<SubChain> sub_chains() const;

  /// Integral of a class over a sub-chain.
  CycloNumber curve_integral(const SubChain& s, const Vec& a) const;
  /// Poincare dual of a sub-chain recovered from the inverse Gram matrix.
  const Vec& sub_chain_class(const SubChain& s) const;

  /// Quantum part of <a1, a2, a3>; the constant is always zero.
  QuantumCoefficient three_point(const Vec& a1, const Vec& a2, const Vec& a3) const;
  /// a1 * a2 coordinate by coordinate, classical part as constants.
  std::vector<QuantumCoefficient> symbolic_product(const Vec& a1, const Vec& a2) const;

  /// q^G for one sub-chain.
  CycloNumber monomial(const SubChain& s, const QEvaluation& q) const;
  /// Corrected algebra at q. ErrorCode::pole when q^G = 1 for a sub-chain,
  /// ErrorCode::unsupported_parameter when an isolated parameter is nonzero.
  GradedAlgebra evaluate(const QEvaluation& q) const;

 private:
  GradedAlgebra classical_;
  std::vector<CurveClass> curves_;
  ChainConfig cfg_;
  std::map<SubChain, Vec> curve_values_;  // integrals of basis elements
  std::map<SubChain, Vec> dual_class_;
};

CycloNumber evaluate(const QuantumCoefficient& c, const QuantumCohomology& qc, const QEvaluation& q);

}  // namespace mckay
