#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mckay/algebra.hpp"
#include "mckay/quantum.hpp"

namespace mckay {

/// sources[r] maps to sum_c matrix(r, c) * targets[c].
struct GeneratorMap {
  std::vector<std::string> sources;
  std::vector<std::string> targets;
  ExactMatrix matrix;

  static GeneratorMap identity(const GradedAlgebra& a);
};

/// Basis-to-basis matrix (column j = image of source basis element j in
/// target coordinates) obtained multiplicatively from the generator images.
/// Throws ErrorCode::relation_violation if the result is not a ring map,
/// ErrorCode::inconsistent_degree if a generator image is not homogeneous of
/// the right degree.
ExactMatrix extend_map(const GradedAlgebra& src, const GradedAlgebra& dst, const GeneratorMap& g);

struct Violation {
  std::size_t i = 0, j = 0;
  std::string pair;  // "e1*e2"
  Vec lhs;           // M(b_i b_j)
  Vec rhs;           // M(b_i) M(b_j)
};

struct IsoReport {
  bool multiplicative = false;
  bool unit = false;
  bool invertible = false;
  bool degree_preserving = false;
  std::size_t violation_count = 0;
  std::vector<Violation> violations;  // first 10
  bool pass() const { return multiplicative && unit && invertible && degree_preserving; }
};

IsoReport verify_iso(const GradedAlgebra& src, const GradedAlgebra& dst, const ExactMatrix& m);

struct IsometryReport {
  bool pass = false;
  std::vector<std::pair<std::size_t, std::size_t>> mismatches;  // first 10 Gram entries
};

/// Checks M^T G_dst M = G_src.
IsometryReport verify_isometry(const GradedAlgebra& src, const GradedAlgebra& dst, const ExactMatrix& m);

enum class ScanStatus { pass, fail, pole, unsupported };
std::string_view scan_status_name(ScanStatus s);

struct ScanResult {
  QEvaluation q;
  ScanStatus status = ScanStatus::fail;
  std::string reason;
};

/// For each candidate, builds the quantum algebra and checks the map. The
/// map direction follows its source generator names: quantum-to-CR when they
/// are the resolution's generators, CR-to-quantum otherwise.
std::vector<ScanResult> scan_evaluations(const GradedAlgebra& cr, const QuantumCohomology& z,
                                         const std::vector<QEvaluation>& candidates, const GeneratorMap& g);

/// True when the map's sources are the generators of `a` (in any order).
bool map_starts_at(const GeneratorMap& g, const GradedAlgebra& a);

}  // namespace mckay
