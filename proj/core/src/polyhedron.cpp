#include "fenchel/polyhedron.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fenchel/dd.hpp"

namespace fenchel {

namespace {

Vec append(const Vec& x, const Rat& last) {
  Vec v = x;
  v.push_back(last);
  return v;
}

Vec drop_last(const Vec& x) { return Vec(x.begin(), x.end() - 1); }

// Scales (normal, offset) so the normal is a primitive integer vector.
Halfspace canonical_halfspace(const Vec& normal, const Rat& offset) {
  Vec full = append(normal, offset);
  // Use the normal part only to fix the scale; offsets stay rational.
  Int l = 1;
  for (const Rat& x : normal) l = lcm(l, denominator(x));
  Int g = 0;
  for (const Rat& x : normal) g = gcd(g, numerator(x) * (l / denominator(x)));
  if (g == 0) {
    return {normal, offset};
  }
  Rat s = Rat(l, g);
  if (s < 0) s = -s;
  return {s * normal, s * offset};
}

}  // namespace

Polyhedron Polyhedron::from_halfspaces(int dim, std::vector<Halfspace> ineqs,
                                       std::vector<Hyperplane> eqs) {
  // Homogenize with the extra coordinate t: rows (a, alpha) and t >= 0.
  std::vector<Vec> rows;
  for (const auto& h : ineqs) {
    if (static_cast<int>(h.normal.size()) != dim)
      throw input_error("halfspace dimension mismatch");
    rows.push_back(append(h.normal, h.offset));
  }
  for (const auto& e : eqs) {
    if (static_cast<int>(e.normal.size()) != dim)
      throw input_error("equation dimension mismatch");
    rows.push_back(append(e.normal, e.offset));
    rows.push_back(append(Rat(-1) * e.normal, -e.offset));
  }
  rows.push_back(append(zero_vec(dim), Rat(1)));

  ConeGenerators gen = dd_cone(dim + 1, rows);
  std::vector<Vec> points, prays, plin;
  for (const Vec& g : gen.rays) {
    Rat t = g.back();
    if (t > 0) {
      Vec x = drop_last(g);
      points.push_back((Rat(1) / t) * x);
    } else {
      prays.push_back(primitive(drop_last(g)));
    }
  }
  for (const Vec& l : gen.lineality) plin.push_back(primitive(drop_last(l)));
  if (points.empty()) {
    Polyhedron p;
    p.dim_ = dim;
    return p;  // empty
  }
  return from_points(dim, std::move(points), std::move(prays), std::move(plin));
}

Polyhedron Polyhedron::from_points(int dim, std::vector<Vec> points,
                                   std::vector<Vec> rays,
                                   std::vector<Vec> lineality) {
  for (const auto& v : points)
    if (static_cast<int>(v.size()) != dim) throw input_error("point dimension mismatch");
  for (const auto& v : rays)
    if (static_cast<int>(v.size()) != dim) throw input_error("ray dimension mismatch");
  Polyhedron p;
  p.dim_ = dim;
  if (points.empty()) return p;

  // Facets are the extreme rays of the polar cone in (normal, offset) space.
  std::vector<Vec> rows;
  for (const Vec& v : points) rows.push_back(append(v, Rat(1)));
  for (const Vec& r : rays)
    if (!is_zero(r)) rows.push_back(append(r, Rat(0)));
  for (const Vec& l : lineality) {
    if (is_zero(l)) continue;
    rows.push_back(append(l, Rat(0)));
    rows.push_back(append(Rat(-1) * l, Rat(0)));
  }
  ConeGenerators polar = dd_cone(dim + 1, rows);

  std::vector<Halfspace> ineqs;
  std::vector<Hyperplane> eqs;
  for (const Vec& g : polar.rays) {
    Vec n = drop_last(g);
    if (is_zero(n)) continue;  // the trivial 1 >= 0 row
    ineqs.push_back(canonical_halfspace(n, g.back()));
  }
  for (const Vec& g : polar.lineality) {
    Vec n = drop_last(g);
    if (is_zero(n)) continue;
    eqs.push_back(canonical_halfspace(n, g.back()));
  }

  // Canonical V-representation from the (irredundant) H-representation.
  std::vector<Vec> vrows;
  for (const auto& h : ineqs) vrows.push_back(append(h.normal, h.offset));
  for (const auto& e : eqs) {
    vrows.push_back(append(e.normal, e.offset));
    vrows.push_back(append(Rat(-1) * e.normal, -e.offset));
  }
  vrows.push_back(append(zero_vec(dim), Rat(1)));
  ConeGenerators gen = dd_cone(dim + 1, vrows);

  for (const Vec& g : gen.rays) {
    Rat t = g.back();
    if (t > 0)
      p.verts_.push_back((Rat(1) / t) * drop_last(g));
    else
      p.rays_.push_back(primitive(drop_last(g)));
  }
  for (const Vec& l : gen.lineality) p.lin_.push_back(primitive(drop_last(l)));
  p.facets_ = std::move(ineqs);
  p.eqs_ = std::move(eqs);

  std::sort(p.verts_.begin(), p.verts_.end(), lex_less);
  std::sort(p.rays_.begin(), p.rays_.end(), lex_less);
  std::sort(p.lin_.begin(), p.lin_.end(), lex_less);
  auto hs_less = [](const Halfspace& a, const Halfspace& b) {
    if (!(a.normal == b.normal)) return lex_less(a.normal, b.normal);
    return a.offset < b.offset;
  };
  std::sort(p.facets_.begin(), p.facets_.end(), hs_less);
  std::sort(p.eqs_.begin(), p.eqs_.end(), hs_less);
  return p;
}

Polyhedron Polyhedron::full_space(int dim) {
  std::vector<Vec> lin;
  for (int i = 0; i < dim; ++i) {
    Vec e = zero_vec(dim);
    e[i] = 1;
    lin.push_back(e);
  }
  return from_points(dim, {zero_vec(dim)}, {}, lin);
}

Polyhedron Polyhedron::point(Vec v) {
  int n = static_cast<int>(v.size());
  return from_points(n, {std::move(v)});
}

int Polyhedron::dim() const {
  if (is_empty()) return -1;
  Mat dirs;
  for (size_t i = 1; i < verts_.size(); ++i) dirs.push_back(verts_[i] - verts_[0]);
  for (const Vec& r : rays_) dirs.push_back(r);
  for (const Vec& l : lin_) dirs.push_back(l);
  return rank(dirs);
}

bool Polyhedron::is_lattice_polytope() const {
  if (!is_polytope()) return false;
  for (const Vec& v : verts_)
    for (const Rat& c : v)
      if (denominator(c) != 1) return false;
  return true;
}

bool Polyhedron::contains(const Vec& x) const {
  if (is_empty()) return false;
  for (const auto& h : facets_)
    if (dot(h.normal, x) + h.offset < 0) return false;
  for (const auto& e : eqs_)
    if (dot(e.normal, x) + e.offset != 0) return false;
  return true;
}

bool Polyhedron::contains_ray(const Vec& r) const {
  if (is_empty()) return false;
  for (const auto& h : facets_)
    if (dot(h.normal, r) < 0) return false;
  for (const auto& e : eqs_)
    if (dot(e.normal, r) != 0) return false;
  return true;
}

bool Polyhedron::set_equal(const Polyhedron& other) const {
  if (is_empty() || other.is_empty()) return is_empty() == other.is_empty();
  auto inside = [](const Polyhedron& p, const Polyhedron& q) {
    for (const Vec& v : p.verts_)
      if (!q.contains(v)) return false;
    for (const Vec& r : p.rays_)
      if (!q.contains_ray(r)) return false;
    for (const Vec& l : p.lin_)
      if (!q.contains_ray(l) || !q.contains_ray(Rat(-1) * l)) return false;
    return true;
  };
  return inside(*this, other) && inside(other, *this);
}

Polyhedron Polyhedron::intersect(const Polyhedron& other) const {
  if (dim_ != other.dim_) throw input_error("ambient dimension mismatch");
  std::vector<Halfspace> ineqs = facets_;
  ineqs.insert(ineqs.end(), other.facets_.begin(), other.facets_.end());
  std::vector<Hyperplane> eqs = eqs_;
  eqs.insert(eqs.end(), other.eqs_.begin(), other.eqs_.end());
  return from_halfspaces(dim_, std::move(ineqs), std::move(eqs));
}

Polyhedron Polyhedron::minkowski_sum(const Polyhedron& other) const {
  if (dim_ != other.dim_) throw input_error("ambient dimension mismatch");
  if (is_empty() || other.is_empty()) {
    Polyhedron p;
    p.dim_ = dim_;
    return p;
  }
  std::vector<Vec> pts;
  for (const Vec& a : verts_)
    for (const Vec& b : other.verts_) pts.push_back(a + b);
  std::vector<Vec> rs = rays_;
  rs.insert(rs.end(), other.rays_.begin(), other.rays_.end());
  std::vector<Vec> ls = lin_;
  ls.insert(ls.end(), other.lin_.begin(), other.lin_.end());
  return from_points(dim_, std::move(pts), std::move(rs), std::move(ls));
}

Polyhedron Polyhedron::translate(const Vec& t) const {
  std::vector<Vec> pts;
  for (const Vec& v : verts_) pts.push_back(v + t);
  return from_points(dim_, std::move(pts), rays_, lin_);
}

Polyhedron Polyhedron::scale(const Rat& s) const {
  std::vector<Vec> pts;
  for (const Vec& v : verts_) pts.push_back(s * v);
  std::vector<Vec> rs = rays_;
  if (s < 0)
    for (Vec& r : rs) r = Rat(-1) * r;
  return from_points(dim_, std::move(pts), std::move(rs), lin_);
}

Polyhedron Polyhedron::recession_cone() const {
  std::vector<Halfspace> ineqs;
  for (const auto& h : facets_) ineqs.push_back({h.normal, Rat(0)});
  std::vector<Hyperplane> eqs;
  for (const auto& e : eqs_) eqs.push_back({e.normal, Rat(0)});
  return from_halfspaces(dim_, std::move(ineqs), std::move(eqs));
}

Polyhedron Polyhedron::linear_image(const Mat& map) const {
  int m = static_cast<int>(map.size());
  auto apply = [&](const Vec& x) {
    Vec y(m);
    for (int i = 0; i < m; ++i) y[i] = dot(map[i], x);
    return y;
  };
  std::vector<Vec> pts, rs, ls;
  for (const Vec& v : verts_) pts.push_back(apply(v));
  for (const Vec& r : rays_) rs.push_back(apply(r));
  for (const Vec& l : lin_) ls.push_back(apply(l));
  return from_points(m, std::move(pts), std::move(rs), std::move(ls));
}

std::optional<Rat> Polyhedron::support_value(const Vec& u) const {
  if (is_empty()) throw input_error("support of empty polyhedron");
  for (const Vec& r : rays_)
    if (dot(u, r) < 0) return std::nullopt;
  for (const Vec& l : lin_)
    if (dot(u, l) != 0) return std::nullopt;
  Rat best = dot(u, verts_[0]);
  for (size_t i = 1; i < verts_.size(); ++i) best = std::min(best, dot(u, verts_[i]));
  return best;
}

std::vector<Vec> Polyhedron::affine_hull_dirs() const {
  std::vector<Vec> dirs;
  for (size_t i = 1; i < verts_.size(); ++i) dirs.push_back(verts_[i] - verts_[0]);
  for (const Vec& r : rays_) dirs.push_back(r);
  for (const Vec& l : lin_) dirs.push_back(l);
  return row_space(dirs);
}

void Polyhedron::build_faces() const {
  auto& by_dim = face_cache_->by_dim;
  int d = dim();
  by_dim.assign(d + 1, {});
  size_t nv = verts_.size(), nr = rays_.size(), nf = facets_.size();

  // Generator incidence per facet.
  std::vector<std::vector<bool>> fv(nf, std::vector<bool>(nv));
  std::vector<std::vector<bool>> fr(nf, std::vector<bool>(nr));
  for (size_t f = 0; f < nf; ++f) {
    for (size_t v = 0; v < nv; ++v)
      fv[f][v] = dot(facets_[f].normal, verts_[v]) + facets_[f].offset == 0;
    for (size_t r = 0; r < nr; ++r) fr[f][r] = dot(facets_[f].normal, rays_[r]) == 0;
  }

  struct Key {
    std::vector<int> verts, rays;
    bool operator<(const Key& o) const {
      if (verts != o.verts) return verts < o.verts;
      return rays < o.rays;
    }
  };

  auto face_dim = [&](const Key& k, std::vector<Vec>& hull_out) {
    Mat dirs;
    for (size_t i = 1; i < k.verts.size(); ++i)
      dirs.push_back(verts_[k.verts[i]] - verts_[k.verts[0]]);
    for (int r : k.rays) dirs.push_back(rays_[r]);
    for (const Vec& l : lin_) dirs.push_back(l);
    hull_out = row_space(dirs);
    return static_cast<int>(hull_out.size());
  };

  std::set<Key> seen;
  std::vector<Key> queue;
  Key top;
  for (size_t v = 0; v < nv; ++v) top.verts.push_back(static_cast<int>(v));
  for (size_t r = 0; r < nr; ++r) top.rays.push_back(static_cast<int>(r));
  queue.push_back(top);
  seen.insert(top);

  while (!queue.empty()) {
    Key k = queue.back();
    queue.pop_back();
    Face face;
    face.verts = k.verts;
    face.rays = k.rays;
    face.dim = face_dim(k, face.hull_dirs);
    by_dim[face.dim].push_back(face);

    for (size_t f = 0; f < nf; ++f) {
      Key child;
      for (int v : k.verts)
        if (fv[f][v]) child.verts.push_back(v);
      for (int r : k.rays)
        if (fr[f][r]) child.rays.push_back(r);
      if (child.verts.empty()) continue;
      if (child.verts == k.verts && child.rays == k.rays) continue;
      if (seen.insert(child).second) queue.push_back(child);
    }
  }
  for (auto& level : by_dim) {
    std::sort(level.begin(), level.end(), [](const Face& a, const Face& b) {
      if (a.verts != b.verts) return a.verts < b.verts;
      return a.rays < b.rays;
    });
  }
}

const std::vector<std::vector<Face>>& Polyhedron::face_lattice() const {
  if (is_empty()) throw input_error("face lattice of empty polyhedron");
  std::call_once(face_cache_->once, [this] { build_faces(); });
  return face_cache_->by_dim;
}

std::vector<Face> Polyhedron::faces(int d) const {
  if (d < 0 || d > dim()) throw input_error("face dimension out of range");
  return face_lattice()[d];
}

Polyhedron hull(const std::vector<Vec>& points, const std::vector<Vec>& rays) {
  if (points.empty()) throw input_error("hull of no points");
  int dim = static_cast<int>(points[0].size());
  for (const Vec& p : points)
    if (static_cast<int>(p.size()) != dim) throw input_error("hull dimension mismatch");
  for (const Vec& r : rays)
    if (static_cast<int>(r.size()) != dim) throw input_error("hull dimension mismatch");
  return Polyhedron::from_points(dim, points, rays);
}

}  // namespace fenchel
