#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mckay/cyclo.hpp"
#include "mckay/polynomial.hpp"

namespace mckay {

/// Parses sums of products such as "h^2+1/4*e^2-h*e" or
/// "(-2+6*i)*h*e1". Coefficient literals: integers, "p/q" via division by a
/// constant, `i`, and `zeta(N,k)`. Variables come from `ring`.
Polynomial<CycloNumber> parse_polynomial(std::string_view text, const PolyRing& ring);

/// A constant expression, e.g. "-i", "1/2", "3*zeta(3,1)".
CycloNumber parse_scalar(std::string_view text);

/// Splits on `sep` outside parentheses and parses each piece as a scalar.
std::vector<CycloNumber> parse_scalar_list(std::string_view text, char sep = ',');

/// Splits on `sep` outside parentheses.
std::vector<std::string> split_top_level(std::string_view text, char sep);

}  // namespace mckay
