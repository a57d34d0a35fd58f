#include "fenchel/volume.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace fenchel {

namespace {

// Recursive fan triangulation over the face lattice: faces are keyed by their
// sorted vertex index sets, so sub-triangulations can be reused.
struct Triangulator {
  const Polyhedron& p;
  const std::vector<std::vector<Face>>& lattice;
  std::map<std::vector<int>, std::vector<std::vector<int>>> memo;

  explicit Triangulator(const Polyhedron& poly) : p(poly), lattice(poly.face_lattice()) {}

  const Face* find_face(const std::vector<int>& verts, int d) const {
    for (const Face& f : lattice[d])
      if (f.verts == verts) return &f;
    return nullptr;
  }

  // Faces of dimension d-1 contained in the given face.
  std::vector<const Face*> boundary(const Face& f) const {
    std::vector<const Face*> out;
    if (f.dim == 0) return out;
    for (const Face& g : lattice[f.dim - 1]) {
      if (std::includes(f.verts.begin(), f.verts.end(), g.verts.begin(), g.verts.end()))
        out.push_back(&g);
    }
    return out;
  }

  std::vector<std::vector<int>> run(const Face& f) {
    auto it = memo.find(f.verts);
    if (it != memo.end()) return it->second;
    std::vector<std::vector<int>> simplices;
    if (f.dim == 0) {
      simplices.push_back({f.verts.front()});
    } else {
      int apex = f.verts.front();
      for (int v : f.verts)
        if (lex_less(p.vertices()[v], p.vertices()[apex])) apex = v;
      for (const Face* g : boundary(f)) {
        if (std::find(g->verts.begin(), g->verts.end(), apex) != g->verts.end()) continue;
        for (auto s : run(*g)) {
          s.push_back(apex);
          simplices.push_back(std::move(s));
        }
      }
    }
    memo[f.verts] = simplices;
    return simplices;
  }
};

Face top_face(const Polyhedron& p) {
  const auto& lattice = p.face_lattice();
  return lattice[p.dim()].front();
}

// Coordinates of the polytope's vertices in an integer basis of the saturated
// lattice of its direction space, with the first vertex as origin.  Volume in
// these coordinates is the lattice-normalized volume.
std::vector<Vec> lattice_coords(const Polyhedron& p) {
  int n = p.ambient_dim();
  int d = p.dim();
  const auto& verts = p.vertices();
  if (d == n) return verts;
  std::vector<Vec> dirs;
  for (size_t i = 1; i < verts.size(); ++i) dirs.push_back(verts[i] - verts[0]);
  std::vector<Vec> basis = saturated_lattice_basis(dirs, n);
  // Solve B y = v - v0 columnwise.
  Mat bt(n, Vec(basis.size()));
  for (size_t j = 0; j < basis.size(); ++j)
    for (int i = 0; i < n; ++i) bt[i][j] = basis[j][i];
  std::vector<Vec> out;
  for (const Vec& v : verts) {
    auto y = solve(bt, v - verts[0]);
    if (!y) throw std::logic_error("vertex outside lattice span");
    out.push_back(*y);
  }
  return out;
}

Rat simplex_volume(const std::vector<Vec>& coords, const std::vector<int>& simplex) {
  size_t d = simplex.size() - 1;
  Mat m(d, Vec(d));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j)
      m[i][j] = coords[simplex[i + 1]][j] - coords[simplex[0]][j];
  Rat dv = det(m);
  if (dv < 0) dv = -dv;
  Rat fact = 1;
  for (size_t k = 2; k <= d; ++k) fact *= static_cast<int>(k);
  return dv / fact;
}

}  // namespace

std::vector<std::vector<int>> triangulate(const Polyhedron& p) {
  if (!p.is_polytope()) throw input_error("triangulation requires a polytope");
  Triangulator t(p);
  return t.run(top_face(p));
}

Rat volume(const Polyhedron& p) {
  if (!p.is_polytope()) throw input_error("volume requires a bounded polyhedron");
  int d = p.dim();
  if (d == 0) return Rat(1);
  auto coords = lattice_coords(p);
  // In lattice coordinates the polytope is full-dimensional in R^d.
  for (Vec& c : coords) c.resize(d);
  Rat total = 0;
  for (const auto& s : triangulate(p)) total += simplex_volume(coords, s);
  return total;
}

Rat integrate_affine(const Polyhedron& p, const Vec& m, const Rat& c) {
  if (!p.is_polytope()) throw input_error("integration requires a polytope");
  int d = p.dim();
  if (d == 0) return dot(m, p.vertices()[0]) + c;
  auto coords = lattice_coords(p);
  for (Vec& y : coords) y.resize(d);
  const auto& verts = p.vertices();
  Rat total = 0;
  Rat dp1(static_cast<int>(d) + 1);
  for (const auto& s : triangulate(p)) {
    Rat vol = simplex_volume(coords, s);
    if (vol == 0) continue;
    Vec bary = zero_vec(p.ambient_dim());
    for (int vi : s) bary = bary + verts[vi];
    bary = (Rat(1) / dp1) * bary;
    total += vol * (dot(m, bary) + c);
  }
  return total;
}

Vec centroid(const Polyhedron& p) {
  if (!p.is_polytope()) throw input_error("centroid requires a polytope");
  int d = p.dim();
  const auto& verts = p.vertices();
  if (d == 0) return verts[0];
  auto coords = lattice_coords(p);
  for (Vec& y : coords) y.resize(d);
  Rat total = 0;
  Vec acc = zero_vec(p.ambient_dim());
  Rat dp1(static_cast<int>(d) + 1);
  for (const auto& s : triangulate(p)) {
    Rat vol = simplex_volume(coords, s);
    Vec bary = zero_vec(p.ambient_dim());
    for (int vi : s) bary = bary + verts[vi];
    bary = (vol / dp1) * bary;
    acc = acc + bary;
    total += vol;
  }
  if (total == 0) throw input_error("degenerate polytope has no centroid");
  return (Rat(1) / total) * acc;
}

double euclidean_volume(const Polyhedron& p) {
  if (!p.is_polytope()) throw input_error("volume requires a bounded polyhedron");
  int d = p.dim();
  if (d == 0) return 1.0;
  const auto& verts = p.vertices();
  double total = 0.0;
  double fact = 1.0;
  for (int k = 2; k <= d; ++k) fact *= k;
  for (const auto& s : triangulate(p)) {
    // Gram determinant of the edge vectors, exact then one square root.
    std::vector<Vec> e;
    for (size_t i = 1; i < s.size(); ++i) e.push_back(verts[s[i]] - verts[s[0]]);
    Mat gram(d, Vec(d));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) gram[i][j] = dot(e[i], e[j]);
    total += std::sqrt(std::max(0.0, to_double(det(gram)))) / fact;
  }
  return total;
}

}  // namespace fenchel
