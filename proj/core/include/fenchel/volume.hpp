#pragma once

#include "fenchel/polyhedron.hpp"

namespace fenchel {

// Simplices as vertex index tuples into the polytope's vertex list.
// Deterministic fan triangulation: apex at the lexicographically smallest
// vertex of each face, recursing over facets.
std::vector<std::vector<int>> triangulate(const Polyhedron& p);

// Volume of a bounded polyhedron relative to the lattice induced on its
// affine hull (Z^n ∩ direction space); a d-dimensional unimodular simplex has
// volume 1/d!.  A point has volume 1.  Errors on unbounded input.
Rat volume(const Polyhedron& p);

// Exact integral over a polytope of the affine form <m, x> + c, with respect
// to the same induced-lattice measure as volume().
Rat integrate_affine(const Polyhedron& p, const Vec& m, const Rat& c);

Vec centroid(const Polyhedron& p);

// Euclidean (Lebesgue) volume of the polytope inside its affine hull,
// computed from exact Gram determinants; used by the float coefficient
// recursion where the measure is genuinely Euclidean.
double euclidean_volume(const Polyhedron& p);

}  // namespace fenchel
