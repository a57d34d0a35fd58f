#include "fenchel/dd.hpp"

#include <algorithm>
#include <cstdint>

namespace fenchel {

namespace {

using Bits = std::vector<uint64_t>;

Bits make_bits(size_t n) { return Bits((n + 63) / 64, 0); }
void set_bit(Bits& b, size_t i) { b[i / 64] |= (uint64_t{1} << (i % 64)); }
bool subset_of(const Bits& a, const Bits& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}
Bits bits_and(const Bits& a, const Bits& b) {
  Bits r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] & b[i];
  return r;
}

struct Ray {
  Vec x;
  Bits active;  // constraints (among processed) tight at this ray
};

// Extreme rays of the pointed cone {y in R^r : M y >= 0}; requires the rows
// of M to have full column rank r.
std::vector<Vec> dd_pointed(int r, const std::vector<Vec>& M) {
  size_t m = M.size();
  if (r == 0) return {};

  // Initial simplicial cone from r independent rows, in input order.
  std::vector<int> basis_rows;
  {
    Mat acc;
    for (size_t i = 0; i < m && static_cast<int>(basis_rows.size()) < r; ++i) {
      acc.push_back(M[i]);
      if (rank(acc) == static_cast<int>(acc.size()))
        basis_rows.push_back(static_cast<int>(i));
      else
        acc.pop_back();
    }
  }
  if (static_cast<int>(basis_rows.size()) < r)
    throw std::logic_error("dd_pointed: constraint matrix not full rank");

  // Rays of the initial cone solve M_B u_j = e_j.
  std::vector<Ray> rays;
  for (int j = 0; j < r; ++j) {
    Mat mb;
    Vec e = zero_vec(r);
    for (int i = 0; i < r; ++i) mb.push_back(M[basis_rows[i]]);
    e[j] = 1;
    auto u = solve(mb, e);
    Ray ray{primitive(*u), make_bits(m)};
    for (int i = 0; i < r; ++i)
      if (i != j) set_bit(ray.active, basis_rows[i]);
    rays.push_back(std::move(ray));
  }

  std::vector<bool> processed(m, false);
  for (int b : basis_rows) processed[b] = true;

  for (size_t c = 0; c < m; ++c) {
    if (processed[c]) continue;
    processed[c] = true;
    if (is_zero(M[c])) continue;

    std::vector<int> pos, neg, zer;
    std::vector<Rat> val(rays.size());
    for (size_t k = 0; k < rays.size(); ++k) {
      val[k] = dot(M[c], rays[k].x);
      if (val[k] > 0)
        pos.push_back(static_cast<int>(k));
      else if (val[k] < 0)
        neg.push_back(static_cast<int>(k));
      else
        zer.push_back(static_cast<int>(k));
    }
    if (neg.empty()) {
      for (int k : zer) set_bit(rays[k].active, c);
      continue;
    }

    std::vector<Ray> next;
    for (int k : pos) next.push_back(rays[k]);
    for (int k : zer) {
      next.push_back(rays[k]);
      set_bit(next.back().active, c);
    }
    // Adjacent (+,-) pairs spawn a ray on the new hyperplane.  Combinatorial
    // adjacency test: no third extreme ray is active on everything common to
    // the pair.
    for (int p : pos) {
      for (int n : neg) {
        Bits common = bits_and(rays[p].active, rays[n].active);
        bool adjacent = true;
        for (size_t k = 0; k < rays.size(); ++k) {
          if (static_cast<int>(k) == p || static_cast<int>(k) == n) continue;
          if (subset_of(common, rays[k].active)) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        Ray born;
        born.x = primitive(val[p] * rays[n].x - val[n] * rays[p].x);
        born.active = common;
        set_bit(born.active, c);
        next.push_back(std::move(born));
      }
    }
    rays = std::move(next);
  }
  std::vector<Vec> out;
  out.reserve(rays.size());
  for (auto& ray : rays) out.push_back(std::move(ray.x));
  return out;
}

}  // namespace

ConeGenerators dd_cone(int dim, const std::vector<Vec>& rows) {
  ConeGenerators out;
  Mat nontrivial;
  for (const Vec& row : rows)
    if (!is_zero(row)) nontrivial.push_back(row);

  std::vector<Vec> rs = row_space(nontrivial);
  int r = static_cast<int>(rs.size());
  out.lineality = nullspace(nontrivial);
  if (out.lineality.empty() && r == 0) {
    // No constraints at all: the whole space.
    for (int i = 0; i < dim; ++i) {
      Vec e = zero_vec(dim);
      e[i] = 1;
      out.lineality.push_back(e);
    }
  }
  for (Vec& l : out.lineality) l = primitive(l);
  if (r == 0) return out;

  // Quotient to the pointed part: x = R^T y with y in R^r.
  std::vector<Vec> M;
  M.reserve(nontrivial.size());
  for (const Vec& row : nontrivial) {
    Vec my(r);
    for (int j = 0; j < r; ++j) my[j] = dot(row, rs[j]);
    M.push_back(std::move(my));
  }
  std::vector<Vec> ys = dd_pointed(r, M);
  for (const Vec& y : ys) {
    Vec x = zero_vec(dim);
    for (int j = 0; j < r; ++j)
      for (int i = 0; i < dim; ++i) x[i] += y[j] * rs[j][i];
    out.rays.push_back(primitive(x));
  }
  std::sort(out.rays.begin(), out.rays.end(), lex_less);
  std::sort(out.lineality.begin(), out.lineality.end(), lex_less);
  return out;
}

}  // namespace fenchel
