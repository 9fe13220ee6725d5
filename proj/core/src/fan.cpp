#include "mckay/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "mckay/error.hpp"
#include "mckay/matrix.hpp"

namespace mckay {

namespace {

Matrix<Rational> cone_matrix(const Fan& fan, const Cone& cone) {
  Matrix<Rational> m(fan.dim, cone.size());
  for (std::size_t j = 0; j < cone.size(); ++j)
    for (std::size_t r = 0; r < fan.dim; ++r) m(r, j) = Rational(fan.rays[cone[j]][r]);
  return m;
}

Rational determinant(Matrix<Rational> m) {
  const std::size_t n = m.rows();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    const Rational inv = m(c, c).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      const Rational f = m(r, c) * inv;
      for (std::size_t k = c; k < n; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

Rational cone_det(const Fan& fan, const Cone& cone) { return determinant(cone_matrix(fan, cone)); }

bool contains(const Fan& fan, const Cone& cone, const IntVector& v, std::vector<Rational>* coords) {
  auto a = cone_coordinates(fan, cone, v);
  for (const auto& x : a)
    if (x.sign() < 0) return false;
  if (coords) *coords = std::move(a);
  return true;
}

// Sign of the determinant obtained by replacing the ray at position `slot`
// of `cone` with `v`: which side of the wall opposite `slot` v lies on.
int side_of_wall(const Fan& fan, const Cone& cone, std::size_t slot, const IntVector& v) {
  Matrix<Rational> m = cone_matrix(fan, cone);
  for (std::size_t r = 0; r < fan.dim; ++r) m(r, slot) = Rational(v[r]);
  return determinant(m).sign();
}

}  // namespace

bool is_primitive(const IntVector& v) {
  long g = 0;
  for (long x : v) g = std::gcd(g, x);
  return g == 1;
}

std::vector<Rational> cone_coordinates(const Fan& fan, const Cone& cone, const IntVector& v) {
  if (v.size() != fan.dim) throw Error(ErrorCode::dimension_mismatch, "vector has wrong dimension");
  std::vector<Rational> b;
  b.reserve(v.size());
  for (long x : v) b.emplace_back(x);
  return solve(cone_matrix(fan, cone), std::span<const Rational>(b));
}

std::optional<std::size_t> Fan::find_ray(const IntVector& ray) const {
  for (std::size_t i = 0; i < rays.size(); ++i)
    if (rays[i] == ray) return i;
  return std::nullopt;
}

void Fan::validate() const {
  if (dim == 0) throw Error(ErrorCode::invalid_fan, "fan dimension must be positive");
  for (const auto& r : rays) {
    if (r.size() != dim) throw Error(ErrorCode::invalid_fan, "ray of wrong dimension");
    if (!is_primitive(r)) throw Error(ErrorCode::invalid_fan, "fan contains a non-primitive ray");
  }
  if (max_cones.empty()) throw Error(ErrorCode::invalid_fan, "fan has no maximal cones");
  for (const auto& c : max_cones) {
    if (c.size() != dim) throw Error(ErrorCode::invalid_fan, "maximal cone is not full-dimensional simplicial");
    for (auto i : c)
      if (i >= rays.size()) throw Error(ErrorCode::invalid_fan, "cone references an unknown ray");
    if (cone_det(*this, c).is_zero()) throw Error(ErrorCode::invalid_fan, "maximal cone generators are dependent");
  }
  // walls: (n-1)-faces, each shared by exactly two cones on opposite sides
  std::map<Cone, std::vector<std::pair<std::size_t, std::size_t>>> walls;
  for (std::size_t ci = 0; ci < max_cones.size(); ++ci) {
    const auto& c = max_cones[ci];
    for (std::size_t slot = 0; slot < c.size(); ++slot) {
      Cone wall;
      for (std::size_t k = 0; k < c.size(); ++k)
        if (k != slot) wall.push_back(c[k]);
      std::sort(wall.begin(), wall.end());
      walls[wall].emplace_back(ci, slot);
    }
  }
  for (const auto& [wall, users] : walls) {
    if (users.size() != 2) throw Error(ErrorCode::invalid_fan, "fan is not complete or cones overlap along a wall");
    const auto& [c0, s0] = users[0];
    const auto& [c1, s1] = users[1];
    const IntVector& apex0 = rays[max_cones[c0][s0]];
    const IntVector& apex1 = rays[max_cones[c1][s1]];
    // apex1 must lie strictly on the other side of the wall than apex0
    if (side_of_wall(*this, max_cones[c0], s0, apex1) * side_of_wall(*this, max_cones[c0], s0, apex0) >= 0)
      throw Error(ErrorCode::invalid_fan, "adjacent cones overlap");
  }
  // degree-one covering: an interior point of the first cone lies in no other
  IntVector probe(dim, 0);
  for (std::size_t k = 0; k < dim; ++k) {
    const long weight = static_cast<long>(k) + 2;  // generic positive combination
    for (std::size_t r = 0; r < dim; ++r) probe[r] += weight * rays[max_cones[0][k]][r];
  }
  std::size_t hits = 0;
  for (const auto& c : max_cones)
    if (contains(*this, c, probe, nullptr)) ++hits;
  if (hits != 1) throw Error(ErrorCode::invalid_fan, "cones overlap (multiple covering)");
}

Fan build_wps_fan(const Weights& w) {
  const std::size_t n = w.dim();
  Fan fan;
  fan.dim = n;
  if (w[0] == 1) {
    IntVector g0(n);
    for (std::size_t i = 0; i < n; ++i) g0[i] = -w[i + 1];
    fan.rays.push_back(g0);
    for (std::size_t i = 0; i < n; ++i) {
      IntVector e(n, 0);
      e[i] = 1;
      fan.rays.push_back(e);
    }
  } else {
    // unimodular U with U w = e_0; rows 1..n of U give the images of v_i
    const std::size_t m = n + 1;
    std::vector<std::vector<long>> u(m, std::vector<long>(m, 0));
    for (std::size_t i = 0; i < m; ++i) u[i][i] = 1;
    std::vector<long> v = w.values();
    auto row_sub = [&](std::size_t dst, std::size_t src, long q) {
      v[dst] -= q * v[src];
      for (std::size_t k = 0; k < m; ++k) u[dst][k] -= q * u[src][k];
    };
    while (true) {
      std::size_t piv = m;
      for (std::size_t i = 0; i < m; ++i)
        if (v[i] != 0 && (piv == m || std::labs(v[i]) < std::labs(v[piv]))) piv = i;
      bool done = true;
      for (std::size_t i = 0; i < m; ++i) {
        if (i == piv || v[i] == 0) continue;
        row_sub(i, piv, v[i] / v[piv]);
        if (v[i] != 0) done = false;
      }
      if (done) {
        std::swap(v[0], v[piv]);
        std::swap(u[0], u[piv]);
        if (v[0] < 0) {
          v[0] = -v[0];
          for (auto& x : u[0]) x = -x;
        }
        break;
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      IntVector g(n);
      long g_gcd = 0;
      for (std::size_t r = 0; r < n; ++r) {
        g[r] = u[r + 1][i];
        g_gcd = std::gcd(g_gcd, g[r]);
      }
      for (auto& x : g) x /= g_gcd;
      fan.rays.push_back(g);
    }
  }
  if (w[0] == 1)
    for (auto& r : fan.rays) {
      long g = 0;
      for (long x : r) g = std::gcd(g, x);
      for (auto& x : r) x /= g;
    }
  for (std::size_t omit = 0; omit <= n; ++omit) {
    Cone c;
    for (std::size_t i = 0; i <= n; ++i)
      if (i != omit) c.push_back(i);
    fan.max_cones.push_back(c);
  }
  fan.validate();
  return fan;
}

Fan stellar_subdivide(const Fan& fan, const IntVector& ray) {
  if (ray.size() != fan.dim) throw Error(ErrorCode::dimension_mismatch, "ray has wrong dimension");
  if (!is_primitive(ray)) throw Error(ErrorCode::non_primitive_ray, "subdivision ray is not primitive");
  if (fan.find_ray(ray)) return fan;
  Fan out;
  out.dim = fan.dim;
  out.rays = fan.rays;
  out.rays.push_back(ray);
  const std::size_t idx = out.rays.size() - 1;
  bool hit = false;
  for (const auto& c : fan.max_cones) {
    std::vector<Rational> a;
    if (!contains(fan, c, ray, &a)) {
      out.max_cones.push_back(c);
      continue;
    }
    hit = true;
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (a[j].is_zero()) continue;
      Cone nc = c;
      nc[j] = idx;
      std::sort(nc.begin(), nc.end());
      out.max_cones.push_back(nc);
    }
  }
  if (!hit) throw Error(ErrorCode::outside_support, "ray lies outside the support of the fan");
  return out;
}

ResolutionReport validate_resolution(const Fan& original, const Fan& refined, const Weights& w) {
  if (original.dim != refined.dim || original.dim != w.dim())
    throw Error(ErrorCode::not_refinement, "fans and weights have different dimensions");
  if (original.rays.size() != w.size())
    throw Error(ErrorCode::not_refinement, "original fan does not have one ray per weight");
  refined.validate();
  // every refined cone inside one original cone; cache containing cones per ray
  std::vector<std::vector<std::pair<std::size_t, std::vector<Rational>>>> holders(refined.rays.size());
  for (std::size_t r = 0; r < refined.rays.size(); ++r)
    for (std::size_t c = 0; c < original.max_cones.size(); ++c) {
      std::vector<Rational> a;
      if (contains(original, original.max_cones[c], refined.rays[r], &a)) holders[r].emplace_back(c, std::move(a));
    }
  for (const auto& cone : refined.max_cones) {
    bool inside = false;
    for (std::size_t c = 0; c < original.max_cones.size() && !inside; ++c)
      inside = std::all_of(cone.begin(), cone.end(), [&](std::size_t r) {
        return std::any_of(holders[r].begin(), holders[r].end(), [c](const auto& h) { return h.first == c; });
      });
    if (!inside) throw Error(ErrorCode::not_refinement, "a refined cone is not contained in any original cone");
  }
  ResolutionReport rep;
  rep.smooth = std::all_of(refined.max_cones.begin(), refined.max_cones.end(), [&](const Cone& c) {
    const Rational d = cone_det(refined, c);
    return d == Rational(1) || d == Rational(-1);
  });
  rep.crepant = std::all_of(holders.begin(), holders.end(), [](const auto& hs) {
    const auto& a = hs.front().second;
    Rational s(0);
    for (const auto& x : a) s += x;
    return s.is_one();
  });
  return rep;
}

std::vector<IntVector> builtin_resolution_rays(const Weights& w) {
  const auto& v = w.values();
  if (v == std::vector<long>{1, 1, 2, 2}) return {{0, -1, -1}};
  if (v == std::vector<long>{1, 3, 4, 4}) return {{0, -1, -1}, {-1, -2, -2}, {-2, -3, -3}, {-1, -1, -1}};
  const long n = static_cast<long>(w.dim());
  if (n >= 2 && v.back() == n &&
      std::all_of(v.begin(), v.end() - 1, [](long x) { return x == 1; })) {
    IntVector p(static_cast<std::size_t>(n), 0);
    p.back() = -1;
    return {p};
  }
  throw Error(ErrorCode::unsupported_family,
              "no built-in resolution for P(" + w.str() + "); supply subdivision rays explicitly");
}

Resolution resolve_with_rays(const Weights& w, const std::vector<IntVector>& rays) {
  Resolution res;
  res.original = build_wps_fan(w);
  res.refined = res.original;
  for (const auto& r : rays) res.refined = stellar_subdivide(res.refined, r);
  return res;
}

Resolution builtin_resolution(const Weights& w) { return resolve_with_rays(w, builtin_resolution_rays(w)); }

}  // namespace mckay
