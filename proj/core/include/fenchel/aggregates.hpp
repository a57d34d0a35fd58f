#pragma once

#include "fenchel/polyhedron.hpp"

namespace fenchel {

// Union of the faces of a polytope lying in a common hyperplane orthogonal to
// a direction u, keyed by the common value <u, V>.
struct Aggregate {
  Rat level;
  std::vector<Face> faces;  // inclusion-maximal members of the union
  int dim = 0;              // dimension of the affine hull of the union
  std::vector<int> all_verts;  // sorted vertex indices of the union
};

// All aggregates of a full-dimensional polytope in direction u, sorted by
// level.  For u == 0 the single aggregate is the polytope itself.
std::vector<Aggregate> aggregates(const Polyhedron& p, const Vec& u);

}  // namespace fenchel
