#include "mckay/weights.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "mckay/error.hpp"

namespace mckay {

Weights::Weights(std::vector<long> w) : w_(std::move(w)) {
  if (w_.size() < 2) throw Error(ErrorCode::invalid_weights, "need at least two weights");
  long g = 0;
  for (long x : w_) {
    if (x <= 0) throw Error(ErrorCode::invalid_weights, "weights must be positive");
    g = std::gcd(g, x);
  }
  std::sort(w_.begin(), w_.end());
  if (g != 1)
    throw Error(ErrorCode::invalid_weights, "P(" + str() + ") is not an orbifold: gcd of the weights is " + std::to_string(g));
}

Weights Weights::parse(const std::string& text) {
  std::vector<long> w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(item, &pos);
    } catch (const std::exception&) {
      throw Error(ErrorCode::parse_error, "malformed weight '" + item + "'");
    }
    while (pos < item.size() && item[pos] == ' ') ++pos;
    if (pos != item.size()) throw Error(ErrorCode::parse_error, "malformed weight '" + item + "'");
    w.push_back(v);
  }
  return Weights(std::move(w));
}

Weights Weights::ones_then(long n) {
  if (n < 1) throw Error(ErrorCode::invalid_weights, "family (1,...,1,n) needs n >= 1");
  std::vector<long> w(static_cast<std::size_t>(n), 1);
  w.push_back(n);
  return Weights(std::move(w));
}

long Weights::sum() const { return std::accumulate(w_.begin(), w_.end(), 0L); }

Rational Weights::product() const {
  Rational p(1);
  for (long x : w_) p *= Rational(x);
  return p;
}

std::string Weights::str() const {
  std::string s;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w_[i]);
  }
  return s;
}

bool is_gorenstein(const Weights& w) {
  const long s = w.sum();
  return std::all_of(w.values().begin(), w.values().end(), [s](long x) { return s % x == 0; });
}

std::vector<Weights> enumerate_gorenstein(int dim) {
  if (dim < 1) throw Error(ErrorCode::invalid_weights, "dimension must be positive");
  const std::size_t terms = static_cast<std::size_t>(dim) + 1;
  std::set<std::vector<long>> found;
  std::vector<long> xs;

  // x_i ranges over max(x_{i-1}, ceil(1/r)) .. floor(m/r) for remainder r
  // and m terms still to place.
  std::function<void(const Rational&, std::size_t)> search = [&](const Rational& r, std::size_t left) {
    if (left == 1) {
      const Rational inv = r.inverse();
      if (!inv.is_integer()) return;
      const long x = inv.numerator().get_si();
      if (!xs.empty() && x < xs.back()) return;
      xs.push_back(x);
      long lcm = 1;
      for (long v : xs) lcm = std::lcm(lcm, v);
      std::vector<long> w;
      long g = 0;
      for (long v : xs) {
        w.push_back(lcm / v);
        g = std::gcd(g, lcm / v);
      }
      for (auto& v : w) v /= g;
      std::sort(w.begin(), w.end());
      found.insert(w);
      xs.pop_back();
      return;
    }
    long lo = r.inverse().ceil().get_si();
    if (!xs.empty()) lo = std::max(lo, xs.back());
    const long hi = (Rational(static_cast<long>(left)) / r).floor().get_si();
    for (long x = lo; x <= hi; ++x) {
      const Rational rest = r - Rational(1, x);
      if (rest.sign() <= 0) continue;
      xs.push_back(x);
      search(rest, left - 1);
      xs.pop_back();
    }
  };
  search(Rational(1), terms);

  std::vector<Weights> out;
  out.reserve(found.size());
  for (const auto& w : found) out.emplace_back(w);
  return out;
}

Rational age(const Rational& gamma, const Weights& w) {
  if (gamma.sign() < 0 || gamma >= Rational(1))
    throw Error(ErrorCode::invalid_weights, "age expects 0 <= gamma < 1, got " + gamma.str());
  Rational a(0);
  for (long x : w.values()) a += (gamma * Rational(x)).frac();
  return a;
}

std::vector<Sector> twisted_sectors(const Weights& w) {
  std::set<Rational> gammas;
  for (long x : w.values())
    for (long k = 0; k < x; ++k) gammas.insert(Rational(k, x));
  std::vector<Sector> out;
  for (const auto& g : gammas) {
    Sector s;
    s.gamma = g;
    for (std::size_t i = 0; i < w.size(); ++i)
      if ((g * Rational(w[i])).is_integer()) {
        s.fixed_indices.push_back(i);
        s.sector_weights.push_back(w[i]);
      }
    s.age = age(g, w);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace mckay
