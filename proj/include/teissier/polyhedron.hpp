/*
   Copyright 2026 The Teissier Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/*
 * Orthant polyhedra conv(S) + R_{>=0}^d with exact rational vertices, and
 * the (weighted) projected polyhedra of polynomials.
 */
#pragma once

#include "teissier/poly_io.hpp"
#include "teissier/relations.hpp"
#include "teissier/simplex.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace teissier {

inline constexpr std::size_t kMaxDimension = 8;

struct QPoint {
  std::vector<Rational> coords;

  std::size_t dim() const { return coords.size(); }
  const Rational& operator[](std::size_t i) const { return coords[i]; }

  friend bool operator==(const QPoint&, const QPoint&) = default;
  friend bool operator<(const QPoint& a, const QPoint& b) { return a.coords < b.coords; }
};

inline QPoint operator+(const QPoint& a, const QPoint& b) {
  QPoint r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}

inline QPoint scale(const QPoint& a, const Rational& s) {
  QPoint r = a;
  for (auto& c : r.coords) c *= s;
  return r;
}

/// Componentwise a >= b.
inline bool dominates(const QPoint& a, const QPoint& b) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}

/// Strictly larger in the product order: >= everywhere and not equal.
inline bool strictly_heavier(const QPoint& a, const QPoint& b) { return dominates(a, b) && !(a == b); }

inline std::string format_point(const QPoint& p) {
  if (p.dim() == 1) return p[0].str();
  std::string out = "(";
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i) out += ",";
    out += p[i].str();
  }
  return out + ")";
}

/// p in conv(S) + R_{>=0}^d, decided by exact LP feasibility of
/// lambda >= 0, sum lambda = 1, sum lambda_i s_i <= p.
inline bool member(const QPoint& p, const std::vector<QPoint>& s) {
  if (s.empty()) return false;
  for (const auto& q : s)
    if (dominates(p, q)) return true;
  const std::size_t d = p.dim();
  const std::size_t m = s.size();
  RationalMatrix a(d + 1, std::vector<Rational>(m + d, Rational(0)));
  std::vector<Rational> b(d + 1);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < m; ++i) a[j][i] = s[i][j];
    a[j][m + j] = 1;
    b[j] = p[j];
  }
  for (std::size_t i = 0; i < m; ++i) a[d][i] = 1;
  b[d] = 1;
  return lp_feasible(a, b);
}

class OrthantPolyhedron {
 public:
  explicit OrthantPolyhedron(std::size_t d = 0) : d_(d) {}

  std::size_t dim() const { return d_; }
  bool empty() const { return vertices_.empty(); }
  /// Vertices in lexicographic order.
  const std::vector<QPoint>& vertices() const { return vertices_; }
  bool contains(const QPoint& p) const { return member(p, vertices_); }

  friend bool operator==(const OrthantPolyhedron&, const OrthantPolyhedron&) = default;

  friend OrthantPolyhedron hull_vertices(std::vector<QPoint> points, std::size_t d);

 private:
  std::size_t d_;
  std::vector<QPoint> vertices_;
};

/// The minimal V with conv(V) + orthant = conv(points) + orthant.
inline OrthantPolyhedron hull_vertices(std::vector<QPoint> points, std::size_t d) {
  if (d > kMaxDimension) throw ConfigError("dimension exceeds the supported bound");
  for (const auto& p : points)
    if (p.dim() != d) throw ConfigError("point dimension does not match the polyhedron");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<QPoint> kept = points;
  for (std::size_t i = 0; i < kept.size();) {
    std::vector<QPoint> others;
    others.reserve(kept.size() - 1);
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    if (member(kept[i], others)) {
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  OrthantPolyhedron out(d);
  out.vertices_ = std::move(kept);
  return out;
}

inline QPoint lex_min_vertex(const OrthantPolyhedron& p) {
  if (p.empty()) throw ConfigError("lex_min_vertex of the empty polyhedron");
  return p.vertices().front();
}

/// P subset of Q.
inline bool polyhedron_leq(const OrthantPolyhedron& p, const OrthantPolyhedron& q) {
  for (const auto& v : p.vertices())
    if (!q.contains(v)) return false;
  return true;
}

inline std::string format_polyhedron(const OrthantPolyhedron& p) {
  std::string out = "{";
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    if (i) out += ", ";
    out += format_point(p.vertices()[i]);
  }
  return out + "}";
}

/// Weight vectors of the auxiliary variables, keyed by variable index.  The
/// x variables implicitly carry the unit vectors.
using WeightMap = std::map<std::size_t, QPoint>;

/// Weight of a monomial, ignoring the variable at `skip`.
inline QPoint monomial_weight(const Monomial& m, std::size_t nx, const WeightMap& weights,
                              std::optional<std::size_t> skip = std::nullopt) {
  QPoint w{std::vector<Rational>(nx, Rational(0))};
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0 || (skip && *skip == i)) continue;
    if (i < nx) {
      w.coords[i] += m[i];
      continue;
    }
    auto it = weights.find(i);
    if (it == weights.end())
      throw ConfigError("no weight assigned to variable " + variable_name(nx, i));
    for (std::size_t k = 0; k < nx; ++k) w.coords[k] += Rational(m[i]) * it->second[k];
  }
  return w;
}

/// Point of the term m in the weighted projected polyhedron of a polynomial
/// monic of degree e in `top`, or nullopt when the top exponent is >= e.
inline std::optional<QPoint> term_point(const Monomial& m, std::size_t nx, const WeightMap& weights,
                                        std::size_t top, std::uint32_t e) {
  const std::uint32_t c = m[top];
  if (c >= e) return std::nullopt;
  return scale(monomial_weight(m, nx, weights, top), Rational(1, e - c));
}

/// Convex hull of (A + sum of weighted aux exponents) / (e - c_top) over the
/// terms with top exponent below e.
template <class Ring>
OrthantPolyhedron weighted_projected_polyhedron(const Poly<Ring>& f, const WeightMap& weights, std::size_t top,
                                                std::uint32_t e) {
  std::vector<QPoint> pts;
  for (const auto& [m, c] : f.terms())
    if (auto p = term_point(m, f.nx(), weights, top, e)) pts.push_back(std::move(*p));
  return hull_vertices(std::move(pts), f.nx());
}

inline OrthantPolyhedron projected_polyhedron(const WeierstrassPoly& f) {
  return weighted_projected_polyhedron(f.poly, WeightMap{}, f.poly.nx(), f.n);
}

}  // namespace teissier
