#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mckay/algebra.hpp"
#include "mckay/groebner.hpp"
#include "mckay/weights.hpp"

namespace mckay {

struct CRBettiEntry {
  Rational gamma;
  int local_degree = 0;  // degree inside the sector before the age shift
};

/// Additive Chen-Ruan cohomology: for each even degree 0, 2, ..., 2n the
/// sector contributions and their total.
struct CRBettiTable {
  std::vector<std::vector<CRBettiEntry>> contributions;
  std::vector<std::size_t> dims;
  std::size_t total() const;
};

/// Throws ErrorCode::non_gorenstein when some age is fractional.
CRBettiTable cr_betti(const Weights& w);

/// User-supplied ring presentation in the text format of parse_polynomial.
struct CRPresentationInput {
  std::vector<std::string> generators;
  std::vector<int> degrees;  // cohomological degree of each generator
  std::vector<std::string> relations;
  std::string top_monomial;  // e.g. "H^3"
  Rational top_value;
};

struct CRAlgebra {
  Weights weights;
  std::vector<Sector> sectors;
  CRBettiTable betti;
  QuotientPresentation<Rational> presentation;
  GradedAlgebra algebra;
};

/// Built-in presentations for (1,1,2,2), (1,3,4,4) and (1,...,1,n);
/// ErrorCode::unsupported_family otherwise.
CRPresentationInput builtin_cr_presentation(const Weights& w);

/// Builds the algebra and checks its graded dimensions against cr_betti
/// (ErrorCode::inconsistent_degree on mismatch).
CRAlgebra cr_algebra(const Weights& w, const CRPresentationInput& input);
inline CRAlgebra cr_algebra(const Weights& w) { return cr_algebra(w, builtin_cr_presentation(w)); }

CycloNumber cr_pairing(const CRAlgebra& alg, const Vec& a, const Vec& b);

}  // namespace mckay
