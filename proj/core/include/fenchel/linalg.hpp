#pragma once

#include <vector>

#include "fenchel/rational.hpp"

namespace fenchel {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;  // row-major

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rat& s, const Vec& a);
bool operator==(const Vec& a, const Vec& b);

Rat dot(const Vec& a, const Vec& b);
Vec zero_vec(int n);
bool is_zero(const Vec& a);

// Lexicographic order, used wherever a deterministic choice of vertex or
// ordering of generators is required.
bool lex_less(const Vec& a, const Vec& b);

// Scales a rational vector to a primitive integer vector with the same
// direction (first nonzero entry keeps its sign).  Zero maps to zero.
Vec primitive(const Vec& a);

// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(Mat& m);

int rank(Mat m);

// Basis of the right kernel {x : m x = 0}.
std::vector<Vec> nullspace(const Mat& m);

// Basis of the row space, canonicalized via rref.
std::vector<Vec> row_space(const Mat& m);

Rat det(Mat m);

// Solves m x = b for square nonsingular m; empty optional when singular or
// inconsistent (least-norm behaviour is not needed here).
std::optional<Vec> solve(Mat m, Vec b);

// Basis of the integer kernel {x in Z^n : B x = 0} for an integer matrix B.
// The resulting lattice is saturated by construction.
std::vector<std::vector<Int>> integer_kernel(const std::vector<std::vector<Int>>& B);

// For a face spanned by the rational directions `dirs` inside Z^n, returns an
// integer basis of the saturated lattice  Z^n  ∩  span(dirs).
std::vector<Vec> saturated_lattice_basis(const std::vector<Vec>& dirs, int n);

// gcd of all maximal minors equals 1  <=>  the integer matrix has saturated
// image.  Columns are the images of basis vectors.
bool has_saturated_image(const std::vector<std::vector<Int>>& cols, int n);

}  // namespace fenchel
