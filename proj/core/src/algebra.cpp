#include "mckay/algebra.hpp"

#include <algorithm>
#include <numeric>

#include "mckay/error.hpp"

namespace mckay {

int GradedAlgebra::top_degree() const { return degrees.empty() ? 0 : *std::max_element(degrees.begin(), degrees.end()); }

Vec GradedAlgebra::basis_vector(std::size_t i) const {
  Vec v = zero();
  v.at(i) = CycloNumber(1);
  return v;
}

std::size_t GradedAlgebra::index_of(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw Error(ErrorCode::dimension_mismatch, "no basis element '" + label + "'");
  return static_cast<std::size_t>(it - labels.begin());
}

std::size_t GradedAlgebra::generator(const std::string& name) const {
  auto it = std::find(generator_names.begin(), generator_names.end(), name);
  if (it == generator_names.end()) throw Error(ErrorCode::dimension_mismatch, "no generator '" + name + "'");
  return generator_index[static_cast<std::size_t>(it - generator_names.begin())];
}

Vec GradedAlgebra::multiply(const Vec& a, const Vec& b) const {
  Vec out = zero();
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (b[j].is_zero()) continue;
      const CycloNumber s = a[i] * b[j];
      const Vec& c = constants[i][j];
      for (std::size_t k = 0; k < dim(); ++k)
        if (!c[k].is_zero()) out[k] += s * c[k];
    }
  }
  return out;
}

CycloNumber GradedAlgebra::integrate(const Vec& a) const {
  CycloNumber s(0);
  for (std::size_t i = 0; i < dim(); ++i)
    if (!a[i].is_zero() && !functional[i].is_zero()) s += a[i] * functional[i];
  return s;
}

ExactMatrix GradedAlgebra::gram() const {
  ExactMatrix g(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) g(i, j) = integrate(constants[i][j]);
  return g;
}

std::vector<std::size_t> GradedAlgebra::graded_dims() const {
  std::vector<std::size_t> d(static_cast<std::size_t>(top_degree() / 2) + 1, 0);
  for (int deg : degrees) ++d[static_cast<std::size_t>(deg / 2)];
  return d;
}

unsigned GradedAlgebra::field_order() const {
  unsigned m = 1;
  for (const auto& row : constants)
    for (const auto& v : row)
      for (const auto& c : v) m = std::lcm(m, c.order());
  for (const auto& c : functional) m = std::lcm(m, c.order());
  return m;
}

void GradedAlgebra::check_invariants() const {
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!constants[i][j][k].is_zero() && degrees[k] != degrees[i] + degrees[j])
          throw Error(ErrorCode::inconsistent_degree, "product " + labels[i] + "*" + labels[j] + " is not homogeneous");
  for (std::size_t i = 0; i < n; ++i)
    if (constants[unit][i] != basis_vector(i))
      throw Error(ErrorCode::inconsistent_degree, "unit does not act as identity on " + labels[i]);
  if (rank(gram()) != n) throw Error(ErrorCode::inconsistent_degree, "pairing is degenerate (Poincare duality fails)");
}

std::size_t top_index(const QuotientPresentation<Rational>& q) {
  if (q.staircase.empty()) throw Error(ErrorCode::inconsistent_degree, "quotient is zero");
  int top = -1;
  for (const auto& m : q.staircase) top = std::max(top, q.ring.degree(m));
  std::size_t idx = 0, count = 0;
  for (std::size_t i = 0; i < q.staircase.size(); ++i)
    if (q.ring.degree(q.staircase[i]) == top) {
      idx = i;
      ++count;
    }
  if (count != 1) throw Error(ErrorCode::inconsistent_degree, "top degree is not one-dimensional");
  return idx;
}

GradedAlgebra algebra_from_presentation(const QuotientPresentation<Rational>& q, const Rational& top_value) {
  GradedAlgebra a;
  const std::size_t n = q.staircase.size();
  a.generator_names = q.ring.names;
  for (std::size_t v = 0; v < q.ring.size(); ++v) {
    Monomial m(q.ring.size(), 0);
    m[v] = 1;
    a.generator_index.push_back(q.index_of(m));
  }
  for (const auto& m : q.staircase) {
    a.labels.push_back(q.ring.monomial_str(m));
    a.degrees.push_back(2 * q.ring.degree(m));
    a.words.push_back(m);
  }
  const auto table = structure_constants(q);
  a.constants.assign(n, std::vector<Vec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a.constants[i][j] = to_vec(table[i][j]);
  a.functional.assign(n, CycloNumber(0));
  a.functional[top_index(q)] = CycloNumber(top_value);
  a.unit = q.index_of(Monomial(q.ring.size(), 0));
  return a;
}

Vec to_vec(const std::vector<Rational>& v) {
  Vec out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const CycloNumber& c) { return c.is_zero(); });
}

}  // namespace mckay
