#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "fenchel/linalg.hpp"

namespace fenchel {

// Inward halfspace  <normal, x> + offset >= 0  with primitive integer normal.
struct Halfspace {
  Vec normal;
  Rat offset;
};

// Affine hull equation  <normal, x> + offset == 0.
using Hyperplane = Halfspace;

// A face: generator index sets into the parent polyhedron, plus dimension.
struct Face {
  std::vector<int> verts;
  std::vector<int> rays;
  int dim = -1;
  // Basis of the linear space parallel to the affine hull of the face.
  std::vector<Vec> hull_dirs;
};

// Rational polyhedron with both representations kept canonical and in sync:
//   P = conv(vertices) + cone(rays) + span(lineality)
//     = { x : every facet inequality holds, every equation holds }.
// For non-pointed polyhedra the "vertices" are canonical representatives of
// the minimal faces (one per face, lying in the row space of the constraint
// normals).  All values are immutable after construction; the face lattice is
// computed once on demand behind a once_flag, so concurrent use is safe.
class Polyhedron {
 public:
  Polyhedron() = default;

  static Polyhedron from_points(int dim, std::vector<Vec> points,
                                std::vector<Vec> rays = {},
                                std::vector<Vec> lineality = {});
  static Polyhedron from_halfspaces(int dim, std::vector<Halfspace> ineqs,
                                    std::vector<Hyperplane> eqs = {});
  static Polyhedron full_space(int dim);
  static Polyhedron point(Vec v);

  bool is_empty() const { return verts_.empty(); }
  int ambient_dim() const { return dim_; }
  int dim() const;  // dimension of the affine hull; -1 for empty
  bool is_polytope() const { return !is_empty() && rays_.empty() && lin_.empty(); }
  bool is_full_dim() const { return dim() == dim_; }
  bool is_lattice_polytope() const;

  const std::vector<Vec>& vertices() const { return verts_; }
  const std::vector<Vec>& rays() const { return rays_; }
  const std::vector<Vec>& lineality() const { return lin_; }
  const std::vector<Halfspace>& facets() const { return facets_; }
  const std::vector<Hyperplane>& equations() const { return eqs_; }

  bool contains(const Vec& x) const;
  bool contains_ray(const Vec& r) const;  // r in the recession cone
  bool set_equal(const Polyhedron& other) const;

  Polyhedron intersect(const Polyhedron& other) const;
  Polyhedron minkowski_sum(const Polyhedron& other) const;
  Polyhedron translate(const Vec& t) const;
  Polyhedron scale(const Rat& s) const;
  Polyhedron recession_cone() const;
  // Image under the linear map given by an (m x dim) matrix.
  Polyhedron linear_image(const Mat& map) const;

  // min over P of <u, x>; nullopt encodes -infinity.
  std::optional<Rat> support_value(const Vec& u) const;

  // All faces of dimension d (0 <= d <= dim); d == dim gives P itself.
  std::vector<Face> faces(int d) const;
  const std::vector<std::vector<Face>>& face_lattice() const;

  // Directions spanning the affine hull.
  std::vector<Vec> affine_hull_dirs() const;

 private:
  int dim_ = 0;
  std::vector<Vec> verts_, rays_, lin_;
  std::vector<Halfspace> facets_;
  std::vector<Hyperplane> eqs_;

  struct FaceCache {
    std::once_flag once;
    std::vector<std::vector<Face>> by_dim;
  };
  std::shared_ptr<FaceCache> face_cache_ = std::make_shared<FaceCache>();

  void build_faces() const;
};

// Irredundant hull of points and rays; errors on dimension mismatch.
Polyhedron hull(const std::vector<Vec>& points, const std::vector<Vec>& rays = {});

}  // namespace fenchel
