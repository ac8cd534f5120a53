#pragma once

// Integral (and rational) polytopes in small ambient dimension, with exact
// rational arithmetic throughout: brute-force facet enumeration, face
// lattice, pulling triangulations for normalized volume, the Adolphson-
// Sperber weight function, and facet denominators.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "absum/errors.hpp"
#include "absum/numeric.hpp"

namespace absum {

using QVec = std::vector<Rat>;

inline QVec qvec_from_ints(const std::vector<int>& v) {
  QVec r;
  r.reserve(v.size());
  for (int x : v) r.emplace_back(x);
  return r;
}

namespace linalg {

inline Rat dot(const std::vector<Int>& a, const QVec& x) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * x[i];
  return s;
}

inline Rat dot(const QVec& a, const QVec& x) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
  return s;
}

inline int rank(std::vector<QVec> m) {
  int r = 0;
  size_t cols = m.empty() ? 0 : m[0].size();
  for (size_t c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
    size_t piv = static_cast<size_t>(r);
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[static_cast<size_t>(r)], m[piv]);
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == static_cast<size_t>(r) || m[i][c] == 0) continue;
      Rat f = m[i][c] / m[static_cast<size_t>(r)][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[static_cast<size_t>(r)][j];
    }
    ++r;
  }
  return r;
}

inline Rat det(std::vector<QVec> m) {
  const size_t n = m.size();
  Rat d = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return Rat(0);
    if (piv != c) {
      std::swap(m[c], m[piv]);
      d = -d;
    }
    d *= m[c][c];
    for (size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] / m[c][c];
      for (size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return d;
}

// Solve sum_j basis[j] * lambda[j] = x (overdetermined, exact); nullopt if
// inconsistent.
inline std::optional<QVec> solve_coords(const std::vector<QVec>& basis, const QVec& x) {
  const size_t rows = x.size(), cols = basis.size();
  std::vector<QVec> aug(rows, QVec(cols + 1, Rat(0)));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) aug[i][j] = basis[j][i];
    aug[i][cols] = x[i];
  }
  std::vector<int> pivot_col(rows, -1);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && aug[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(aug[r], aug[piv]);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || aug[i][c] == 0) continue;
      Rat f = aug[i][c] / aug[r][c];
      for (size_t j = c; j <= cols; ++j) aug[i][j] -= f * aug[r][j];
    }
    pivot_col[r] = static_cast<int>(c);
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (aug[i][cols] != 0) return std::nullopt;
  QVec lambda(cols, Rat(0));
  for (size_t i = 0; i < r; ++i) lambda[static_cast<size_t>(pivot_col[i])] = aug[i][cols] / aug[i][static_cast<size_t>(pivot_col[i])];
  return lambda;
}

// One-dimensional nullspace of a (d-1) x d matrix of full row rank.
inline std::optional<QVec> hyperplane_normal(const std::vector<QVec>& rows, size_t dim) {
  std::vector<QVec> m = rows;
  std::vector<int> pivot_of_row;
  std::vector<bool> col_is_pivot(dim, false);
  size_t r = 0;
  for (size_t c = 0; c < dim && r < m.size(); ++c) {
    size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c] / m[r][c];
      for (size_t j = c; j < dim; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_of_row.push_back(static_cast<int>(c));
    col_is_pivot[c] = true;
    ++r;
  }
  if (r != dim - 1) return std::nullopt;  // points not affinely independent
  size_t free_col = 0;
  while (free_col < dim && col_is_pivot[free_col]) ++free_col;
  QVec a(dim, Rat(0));
  a[free_col] = 1;
  for (size_t i = 0; i < r; ++i) {
    size_t pc = static_cast<size_t>(pivot_of_row[i]);
    a[pc] = -m[i][free_col] / m[i][pc];
  }
  return a;
}

}  // namespace linalg

struct Facet {
  std::vector<Int> normal;  // primitive integer outer normal: normal . x <= rhs
  Rat rhs;
  bool through_origin() const { return rhs == 0; }
};

struct Face {
  std::vector<int> vertex_ids;  // indices into Polytope::vertices(), sorted
  std::vector<int> facet_ids;   // maximal set of facets containing the face
  int dim = 0;
  bool contains_origin = false;
};

class Polytope {
 public:
  static Polytope hull(int ambient_dim, std::vector<QVec> points) {
    require(!points.empty(), errc::empty_input, "hull of empty point set");
    for (const auto& pt : points)
      require(static_cast<int>(pt.size()) == ambient_dim, errc::internal, "point dimension mismatch");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    Polytope P;
    P.ambient_ = ambient_dim;
    P.points_ = std::move(points);
    P.build_frame();
    P.build_local_hull();
    return P;
  }

  int ambient_dim() const { return ambient_; }
  int dim() const { return dim_; }
  bool is_full_dim() const { return dim_ == ambient_; }
  const std::vector<QVec>& vertices() const { return verts_; }
  const std::vector<Facet>& facets() const { return facets_; }

  bool has_integral_vertices() const {
    for (const auto& v : verts_)
      for (const auto& c : v)
        if (!rat_is_integer(c)) return false;
    return true;
  }

  bool same_polytope(const Polytope& o) const { return ambient_ == o.ambient_ && verts_ == o.verts_; }

  std::optional<QVec> to_local(const QVec& x) const {
    QVec diff(x.size());
    for (size_t i = 0; i < x.size(); ++i) diff[i] = x[i] - base_[i];
    if (dim_ == 0) {
      for (const auto& c : diff)
        if (c != 0) return std::nullopt;
      return QVec{};
    }
    return linalg::solve_coords(basis_, diff);
  }

  bool contains(const QVec& x) const {
    auto loc = to_local(x);
    if (!loc) return false;
    for (const auto& f : facets_)
      if (linalg::dot(f.normal, *loc) > f.rhs) return false;
    return true;
  }

  // dim! * vol in the ambient space; zero for lower-dimensional sets.
  Rat normalized_volume() const {
    if (dim_ < ambient_ || dim_ == 0) return Rat(0);
    Rat total = 0;
    for (const auto& simplex : triangulate()) {
      std::vector<QVec> rows;
      for (size_t i = 1; i < simplex.size(); ++i) {
        QVec row(static_cast<size_t>(ambient_));
        for (int j = 0; j < ambient_; ++j)
          row[static_cast<size_t>(j)] =
              verts_[static_cast<size_t>(simplex[i])][static_cast<size_t>(j)] -
              verts_[static_cast<size_t>(simplex[0])][static_cast<size_t>(j)];
        rows.push_back(std::move(row));
      }
      Rat d = linalg::det(rows);
      total += d < 0 ? -d : d;
    }
    return total;
  }

  Int normalized_volume_int() const {
    Rat v = normalized_volume();
    require(rat_is_integer(v), errc::internal, "normalized volume not integral");
    return numerator(v);
  }

  // Pulling triangulation of the vertex set (full-dimensional polytopes),
  // returned as (dim+1)-tuples of vertex indices.
  std::vector<std::vector<int>> triangulate() const {
    require(is_full_dim() && dim_ >= 1, errc::internal, "triangulation needs a full-dimensional polytope");
    std::vector<QVec> local;
    local.reserve(verts_.size());
    for (const auto& v : verts_) local.push_back(*to_local(v));
    return triangulate_points(local);
  }

  // All proper faces (dimensions 0 .. dim-1).
  std::vector<Face> proper_faces() const {
    std::vector<Face> out;
    if (dim_ == 0) return out;
    const size_t nf = facets_.size();
    require(nf <= 24, errc::internal, "facet count too large for subset face enumeration");
    std::vector<QVec> local;
    for (const auto& v : verts_) local.push_back(*to_local(v));
    auto origin_local = to_local(QVec(static_cast<size_t>(ambient_), Rat(0)));

    std::map<std::vector<int>, Face> seen;
    for (size_t mask = 1; mask < (size_t{1} << nf); ++mask) {
      std::vector<int> vs;
      for (size_t vi = 0; vi < local.size(); ++vi) {
        bool on_all = true;
        for (size_t fi = 0; fi < nf && on_all; ++fi)
          if (mask & (size_t{1} << fi))
            on_all = linalg::dot(facets_[fi].normal, local[vi]) == facets_[fi].rhs;
        if (on_all) vs.push_back(static_cast<int>(vi));
      }
      if (vs.empty() || vs.size() == local.size()) continue;
      if (seen.count(vs)) continue;
      Face f;
      f.vertex_ids = vs;
      // Maximal defining facet set.
      for (size_t fi = 0; fi < nf; ++fi) {
        bool all_on = true;
        for (int vi : vs)
          if (linalg::dot(facets_[fi].normal, local[static_cast<size_t>(vi)]) != facets_[fi].rhs) {
            all_on = false;
            break;
          }
        if (all_on) f.facet_ids.push_back(static_cast<int>(fi));
      }
      // Face dimension = affine rank of its vertices.
      std::vector<QVec> diffs;
      for (size_t i = 1; i < vs.size(); ++i) {
        QVec d(local[0].size());
        for (size_t j = 0; j < d.size(); ++j)
          d[j] = local[static_cast<size_t>(vs[i])][j] - local[static_cast<size_t>(vs[0])][j];
        diffs.push_back(std::move(d));
      }
      f.dim = diffs.empty() ? 0 : linalg::rank(diffs);
      f.contains_origin = false;
      if (origin_local) {
        bool on = true;
        for (int fi : f.facet_ids)
          if (linalg::dot(facets_[static_cast<size_t>(fi)].normal, *origin_local) !=
              facets_[static_cast<size_t>(fi)].rhs) {
            on = false;
            break;
          }
        f.contains_origin = on && contains(QVec(static_cast<size_t>(ambient_), Rat(0)));
      }
      seen.emplace(vs, std::move(f));
    }
    for (auto& [vs, f] : seen) out.push_back(std::move(f));
    return out;
  }

  // Is an ambient point on the given face?  (Face membership of exponent
  // vectors; the point is expected to lie in the polytope.)
  bool point_on_face(const Face& f, const QVec& x) const {
    auto loc = to_local(x);
    if (!loc) return false;
    for (int fi : f.facet_ids)
      if (linalg::dot(facets_[static_cast<size_t>(fi)].normal, *loc) != facets_[static_cast<size_t>(fi)].rhs)
        return false;
    return contains(x);
  }

  // Adolphson-Sperber weight: w(u) = min{c >= 0 : u in c*Delta}.  Requires a
  // full-dimensional polytope containing the origin.  Infinity is signalled
  // by nullopt.
  std::optional<Rat> weight(const QVec& u) const {
    require(is_full_dim(), errc::internal, "weight needs a full-dimensional polytope");
    Rat w = 0;
    for (const auto& f : facets_) {
      Rat v = linalg::dot(f.normal, u);
      if (f.through_origin()) {
        if (v > 0) return std::nullopt;  // outside cone(Delta)
      } else {
        Rat scaled = v / f.rhs;
        if (scaled > w) w = scaled;
      }
    }
    return w;
  }

  std::optional<Rat> weight(const std::vector<int>& u) const { return weight(qvec_from_ints(u)); }

  // D(Delta): least D making every outer facet functional integral.
  Int denominator() const {
    require(is_full_dim(), errc::internal, "denominator needs a full-dimensional polytope");
    Int d = 1;
    for (const auto& f : facets_) {
      if (f.through_origin()) continue;
      require(rat_is_integer(f.rhs) && f.rhs > 0, errc::internal,
              "denominator: outer facet with non-integral offset");
      d = int_lcm(d, rat_num(f.rhs));
    }
    return d;
  }

 private:
  void build_frame() {
    // Prefer the origin as the frame base when it is among the points: the
    // through-origin facet convention then survives the local map.
    QVec zero(static_cast<size_t>(ambient_), Rat(0));
    bool has_zero = std::find(points_.begin(), points_.end(), zero) != points_.end();
    base_ = has_zero ? zero : points_[0];
    // Independent difference vectors.
    std::vector<QVec> echelon;
    for (const auto& pt : points_) {
      QVec d(static_cast<size_t>(ambient_));
      for (int j = 0; j < ambient_; ++j) d[static_cast<size_t>(j)] = pt[static_cast<size_t>(j)] - base_[static_cast<size_t>(j)];
      std::vector<QVec> test = echelon;
      test.push_back(d);
      if (linalg::rank(test) > static_cast<int>(echelon.size())) echelon.push_back(d);
    }
    dim_ = static_cast<int>(echelon.size());
    if (dim_ == ambient_) {
      base_ = zero;
      basis_.clear();
      for (int j = 0; j < ambient_; ++j) {
        QVec e(static_cast<size_t>(ambient_), Rat(0));
        e[static_cast<size_t>(j)] = 1;
        basis_.push_back(std::move(e));
      }
    } else {
      basis_ = std::move(echelon);
    }
  }

  void build_local_hull() {
    std::vector<QVec> local;
    local.reserve(points_.size());
    for (const auto& pt : points_) {
      auto loc = to_local_with(pt);
      require(loc.has_value(), errc::internal, "point escaped its own affine hull");
      local.push_back(std::move(*loc));
    }
    if (dim_ == 0) {
      verts_ = {points_[0]};
      return;
    }
    auto [facet_list, vertex_flags] = hull_full_dim(local, static_cast<size_t>(dim_));
    facets_ = std::move(facet_list);
    std::vector<QVec> vs;
    for (size_t i = 0; i < points_.size(); ++i)
      if (vertex_flags[i]) vs.push_back(points_[i]);
    std::sort(vs.begin(), vs.end());
    verts_ = std::move(vs);
    canonicalize_facets();
  }

  std::optional<QVec> to_local_with(const QVec& x) const {
    QVec diff(x.size());
    for (size_t i = 0; i < x.size(); ++i) diff[i] = x[i] - base_[i];
    if (dim_ == 0) {
      for (const auto& c : diff)
        if (c != 0) return std::nullopt;
      return QVec{};
    }
    return linalg::solve_coords(basis_, diff);
  }

  static std::pair<std::vector<Facet>, std::vector<bool>> hull_full_dim(const std::vector<QVec>& pts,
                                                                        size_t dim) {
    require(pts.size() <= 64, errc::internal, "hull: too many points for brute-force enumeration");
    std::set<std::pair<std::vector<Int>, Rat>> facet_keys;
    std::vector<Facet> facets;

    auto consider = [&](const QVec& a_rat, const QVec& x0) {
      // Scale the normal to a primitive integer vector.
      Int lcm_den = 1;
      for (const auto& c : a_rat) lcm_den = int_lcm(lcm_den, rat_den(c));
      std::vector<Int> a(a_rat.size());
      Int content = 0;
      for (size_t i = 0; i < a_rat.size(); ++i) {
        a[i] = rat_num(a_rat[i] * Rat(lcm_den));
        content = int_gcd(content, a[i]);
      }
      for (auto& c : a) c /= content;
      Rat b = 0;
      for (size_t i = 0; i < a.size(); ++i) b += Rat(a[i]) * x0[i];
      bool any_below = false, any_above = false;
      for (const auto& pt : pts) {
        Rat v = linalg::dot(a, pt);
        if (v < b) any_below = true;
        if (v > b) any_above = true;
        if (any_below && any_above) return;
      }
      if (any_above) {  // flip to make it an upper bound
        for (auto& c : a) c = -c;
        b = -b;
      }
      auto key = std::make_pair(a, b);
      if (facet_keys.insert(key).second) facets.push_back(Facet{std::move(a), std::move(b)});
    };

    if (dim == 1) {
      QVec plus{Rat(1)};
      for (const auto& pt : pts) consider(plus, pt);
      QVec minus{Rat(-1)};
      for (const auto& pt : pts) consider(minus, pt);
    } else {
      // all dim-subsets of points
      std::vector<size_t> c(dim);
      for (size_t i = 0; i < dim; ++i) c[i] = i;
      const size_t n = pts.size();
      if (n >= dim) {
        for (;;) {
          std::vector<QVec> rows;
          for (size_t i = 1; i < dim; ++i) {
            QVec d(dim);
            for (size_t j = 0; j < dim; ++j) d[j] = pts[c[i]][j] - pts[c[0]][j];
            rows.push_back(std::move(d));
          }
          auto a = linalg::hyperplane_normal(rows, dim);
          if (a) consider(*a, pts[c[0]]);
          // next combination
          size_t i = dim;
          while (i > 0 && c[i - 1] == n - dim + i - 1) --i;
          if (i == 0) break;
          ++c[i - 1];
          for (size_t j = i; j < dim; ++j) c[j] = c[j - 1] + 1;
        }
      }
    }

    // Vertices: points whose incident facet normals span the space.
    std::vector<bool> is_vertex(pts.size(), false);
    for (size_t i = 0; i < pts.size(); ++i) {
      std::vector<QVec> normals;
      for (const auto& f : facets) {
        if (linalg::dot(f.normal, pts[i]) == f.rhs) {
          QVec nr;
          for (const auto& cc : f.normal) nr.emplace_back(cc);
          normals.push_back(std::move(nr));
        }
      }
      if (!normals.empty() && linalg::rank(normals) == static_cast<int>(dim)) is_vertex[i] = true;
    }
    return {facets, is_vertex};
  }

  void canonicalize_facets() {
    std::sort(facets_.begin(), facets_.end(), [](const Facet& x, const Facet& y) {
      if (x.normal != y.normal) return x.normal < y.normal;
      return x.rhs < y.rhs;
    });
  }

  static std::vector<std::vector<int>> triangulate_points(const std::vector<QVec>& pts) {
    const size_t dim = pts.empty() ? 0 : pts[0].size();
    std::vector<std::vector<int>> out;
    if (dim == 0 || pts.size() == 1) {
      out.push_back({0});
      return out;
    }
    if (dim == 1) {
      size_t lo = 0, hi = 0;
      for (size_t i = 1; i < pts.size(); ++i) {
        if (pts[i] < pts[lo]) lo = i;
        if (pts[hi] < pts[i]) hi = i;
      }
      out.push_back({static_cast<int>(lo), static_cast<int>(hi)});
      return out;
    }
    auto [facets, vflags] = hull_full_dim(pts, dim);
    // Pulling vertex: lexicographically smallest vertex.
    int v0 = -1;
    for (size_t i = 0; i < pts.size(); ++i) {
      if (!vflags[i]) continue;
      if (v0 < 0 || pts[i] < pts[static_cast<size_t>(v0)]) v0 = static_cast<int>(i);
    }
    require(v0 >= 0, errc::internal, "triangulation: no vertices found");
    for (const auto& f : facets) {
      if (linalg::dot(f.normal, pts[static_cast<size_t>(v0)]) == f.rhs) continue;  // facet contains v0
      // Facet points, projected into facet-local coordinates.
      std::vector<int> ids;
      for (size_t i = 0; i < pts.size(); ++i)
        if (linalg::dot(f.normal, pts[i]) == f.rhs) ids.push_back(static_cast<int>(i));
      QVec base = pts[static_cast<size_t>(ids[0])];
      std::vector<QVec> basis;
      for (int id : ids) {
        QVec d(dim);
        for (size_t j = 0; j < dim; ++j) d[j] = pts[static_cast<size_t>(id)][j] - base[j];
        std::vector<QVec> test = basis;
        test.push_back(d);
        if (linalg::rank(test) > static_cast<int>(basis.size())) basis.push_back(d);
      }
      require(basis.size() == dim - 1, errc::internal, "facet not of codimension one");
      std::vector<QVec> sub;
      for (int id : ids) {
        QVec d(dim);
        for (size_t j = 0; j < dim; ++j) d[j] = pts[static_cast<size_t>(id)][j] - base[j];
        auto loc = linalg::solve_coords(basis, d);
        require(loc.has_value(), errc::internal, "facet point escaped facet hull");
        sub.push_back(std::move(*loc));
      }
      for (const auto& s : triangulate_points(sub)) {
        std::vector<int> simplex{v0};
        for (int si : s) simplex.push_back(ids[static_cast<size_t>(si)]);
        out.push_back(std::move(simplex));
      }
    }
    return out;
  }

  int ambient_ = 0;
  int dim_ = 0;
  std::vector<QVec> points_;  // deduped inputs
  std::vector<QVec> verts_;   // canonical (lex-sorted) vertex list
  std::vector<Facet> facets_;
  QVec base_;
  std::vector<QVec> basis_;
};

// n! vol of the simplex spanned by `vertices` (dim+1 points in dimension
// dim), as |det| of the edge matrix.
inline Rat simplex_normalized_volume(const std::vector<QVec>& vertices) {
  require(vertices.size() >= 2, errc::empty_input, "simplex needs at least two vertices");
  const size_t dim = vertices[0].size();
  require(vertices.size() == dim + 1, errc::internal, "simplex vertex count must be dim+1");
  std::vector<QVec> rows;
  for (size_t i = 1; i < vertices.size(); ++i) {
    QVec d(dim);
    for (size_t j = 0; j < dim; ++j) d[j] = vertices[i][j] - vertices[0][j];
    rows.push_back(std::move(d));
  }
  Rat d = linalg::det(rows);
  return d < 0 ? -d : d;
}

}  // namespace absum
