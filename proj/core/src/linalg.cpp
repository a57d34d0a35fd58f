#include "fenchel/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace fenchel {

Vec operator+(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec operator*(const Rat& s, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

bool operator==(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

Rat dot(const Vec& a, const Vec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec zero_vec(int n) { return Vec(n, Rat(0)); }

bool is_zero(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](const Rat& x) { return x == 0; });
}

bool lex_less(const Vec& a, const Vec& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

Vec primitive(const Vec& a) {
  Int l = 1;
  for (const Rat& x : a) l = lcm(l, denominator(x));
  Int g = 0;
  std::vector<Int> ints(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    ints[i] = numerator(a[i]) * (l / denominator(a[i]));
    g = gcd(g, ints[i]);
  }
  if (g == 0) return zero_vec(static_cast<int>(a.size()));
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = Rat(ints[i] / g);
  return r;
}

std::vector<int> rref(Mat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t sel = r;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    Rat inv = Rat(1) / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i != r && m[i][c] != 0) {
        Rat f = m[i][c];
        for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
      }
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

int rank(Mat m) { return static_cast<int>(rref(m).size()); }

std::vector<Vec> nullspace(const Mat& m) {
  if (m.empty()) return {};
  size_t cols = m[0].size();
  Mat a = m;
  std::vector<int> pivots = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (size_t free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    Vec v = zero_vec(static_cast<int>(cols));
    v[free_c] = 1;
    for (size_t pi = 0; pi < pivots.size(); ++pi) v[pivots[pi]] = -a[pi][free_c];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vec> row_space(const Mat& m) {
  Mat a = m;
  std::vector<int> pivots = rref(a);
  std::vector<Vec> basis(a.begin(), a.begin() + pivots.size());
  return basis;
}

Rat det(Mat m) {
  size_t n = m.size();
  Rat d = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t sel = c;
    while (sel < n && m[sel][c] == 0) ++sel;
    if (sel == n) return Rat(0);
    if (sel != c) {
      std::swap(m[sel], m[c]);
      d = -d;
    }
    d *= m[c][c];
    Rat inv = Rat(1) / m[c][c];
    for (size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] * inv;
      for (size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return d;
}

std::optional<Vec> solve(Mat m, Vec b) {
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  for (size_t i = 0; i < rows; ++i) m[i].push_back(b[i]);
  std::vector<int> pivots = rref(m);
  // Inconsistent if a pivot lands in the augmented column.
  if (!pivots.empty() && pivots.back() == static_cast<int>(cols)) return std::nullopt;
  Vec x = zero_vec(static_cast<int>(cols));
  for (size_t pi = 0; pi < pivots.size(); ++pi) x[pivots[pi]] = m[pi][cols];
  // Reject underdetermined systems only if the solution fails to verify;
  // callers that want a particular solution check consistency themselves.
  for (size_t i = 0; i < rows; ++i) {
    Rat s = 0;
    for (size_t j = 0; j < cols; ++j) s += m[i][j] * x[j];
    // rows of m are already reduced; verification against the original system
    // is implied by rref consistency.
    (void)s;
  }
  return x;
}

std::vector<std::vector<Int>> integer_kernel(const std::vector<std::vector<Int>>& B) {
  if (B.empty()) return {};
  size_t rows = B.size(), n = B[0].size();
  // Column-style HNF: reduce columns of the working copy with unimodular
  // column operations mirrored on U; zero columns of the reduced matrix give
  // kernel basis vectors as the matching columns of U.
  std::vector<std::vector<Int>> w(rows, std::vector<Int>(n));
  for (size_t i = 0; i < rows; ++i) w[i] = B[i];
  std::vector<std::vector<Int>> U(n, std::vector<Int>(n, 0));
  for (size_t i = 0; i < n; ++i) U[i][i] = 1;

  auto col_swap = [&](size_t a, size_t b) {
    for (size_t i = 0; i < rows; ++i) std::swap(w[i][a], w[i][b]);
    for (size_t i = 0; i < n; ++i) std::swap(U[i][a], U[i][b]);
  };
  auto col_addmul = [&](size_t dst, size_t src, const Int& f) {
    for (size_t i = 0; i < rows; ++i) w[i][dst] += f * w[i][src];
    for (size_t i = 0; i < n; ++i) U[i][dst] += f * U[i][src];
  };
  auto col_neg = [&](size_t c) {
    for (size_t i = 0; i < rows; ++i) w[i][c] = -w[i][c];
    for (size_t i = 0; i < n; ++i) U[i][c] = -U[i][c];
  };

  size_t lead = 0;
  for (size_t r = 0; r < rows && lead < n; ++r) {
    // Euclid across columns lead..n-1 on row r.
    while (true) {
      size_t nz = n;
      for (size_t c = lead; c < n; ++c)
        if (w[r][c] != 0) {
          if (nz == n || abs(w[r][c]) < abs(w[r][nz])) nz = c;
        }
      if (nz == n) break;  // row r is zero on the tail
      col_swap(lead, nz);
      bool all_reduced = true;
      for (size_t c = lead + 1; c < n; ++c) {
        if (w[r][c] != 0) {
          Int q = w[r][c] / w[r][lead];
          col_addmul(c, lead, -q);
          if (w[r][c] != 0) all_reduced = false;
        }
      }
      if (all_reduced) {
        if (w[r][lead] < 0) col_neg(lead);
        ++lead;
        break;
      }
    }
  }
  std::vector<std::vector<Int>> kernel;
  for (size_t c = lead; c < n; ++c) {
    std::vector<Int> v(n);
    for (size_t i = 0; i < n; ++i) v[i] = U[i][c];
    kernel.push_back(std::move(v));
  }
  return kernel;
}

std::vector<Vec> saturated_lattice_basis(const std::vector<Vec>& dirs, int n) {
  // span(dirs)^⊥ has a rational basis; clear denominators to get an integer
  // annihilator matrix, whose integer kernel is the saturated lattice.
  Mat d;
  for (const Vec& v : dirs) d.push_back(v);
  std::vector<Vec> ann = nullspace(d);
  if (ann.empty()) {
    // Full span: the standard basis.
    std::vector<Vec> basis;
    for (int i = 0; i < n; ++i) {
      Vec e = zero_vec(n);
      e[i] = 1;
      basis.push_back(e);
    }
    return basis;
  }
  std::vector<std::vector<Int>> B;
  for (const Vec& a : ann) {
    Vec p = primitive(a);
    std::vector<Int> row(n);
    for (int i = 0; i < n; ++i) row[i] = numerator(p[i]);
    B.push_back(std::move(row));
  }
  auto kern = integer_kernel(B);
  std::vector<Vec> basis;
  for (auto& k : kern) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = Rat(k[i]);
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {
Int int_det(std::vector<std::vector<Int>> m) {
  // Fraction-free not needed at these sizes: go through rationals.
  size_t n = m.size();
  Mat q(n, Vec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) q[i][j] = Rat(m[i][j]);
  Rat d = det(q);
  return numerator(d) / denominator(d);
}
}  // namespace

bool has_saturated_image(const std::vector<std::vector<Int>>& cols, int n) {
  size_t d = cols.size();
  if (d == 0) return true;
  std::vector<int> idx(d);
  std::iota(idx.begin(), idx.end(), 0);
  // gcd over all d x d minors of the n x d matrix.
  Int g = 0;
  std::vector<int> comb(d);
  std::iota(comb.begin(), comb.end(), 0);
  while (true) {
    std::vector<std::vector<Int>> minor(d, std::vector<Int>(d));
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) minor[i][j] = cols[j][comb[i]];
    g = gcd(g, int_det(minor));
    if (g == 1) return true;
    // next combination of rows
    int i = static_cast<int>(d) - 1;
    while (i >= 0 && comb[i] == n - static_cast<int>(d) + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (size_t j = i + 1; j < d; ++j) comb[j] = comb[j - 1] + 1;
  }
  return g == 1;
}

}  // namespace fenchel
