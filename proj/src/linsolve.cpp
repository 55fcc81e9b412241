#include "heapforge/linsolve.hpp"

namespace heapforge::lin {

namespace {

struct Echelon {
  std::vector<Vector> rows;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  bool swapped_odd = false;
};

// Reduced row echelon form.
Echelon reduce(std::vector<Vector> a, std::size_t cols) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      e.swapped_odd = !e.swapped_odd;
    }
    const Scalar inv = a[r][c].inverse();
    std::vector<std::size_t> nz;
    for (std::size_t j = c; j < cols; ++j)
      if (!a[r][j].is_zero()) {
        a[r][j] *= inv;
        nz.push_back(j);
      }
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Scalar f = a[i][c];
      for (auto j : nz) a[i][j] = a[i][j] - f * a[r][j];
    }
    e.pivots.push_back(c);
    ++r;
  }
  a.resize(r, Vector{});
  e.rows = std::move(a);
  return e;
}

}  // namespace

std::size_t rank(const Matrix& m) { return reduce(m.dense(), m.cols()).pivots.size(); }

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of non-square " + m.shape());
  // Plain elimination keeping the pivot product.
  auto a = m.dense();
  const std::size_t n = m.rows();
  Scalar det = Scalar::one(m.field());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return Scalar::zero(m.field());
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    const Scalar inv = a[c][c].inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c].is_zero()) continue;
      const Scalar f = a[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) a[i][j] = a[i][j] - f * a[c][j];
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw InputError("inverse of non-square " + m.shape());
  auto x = solve(m, Matrix::identity(m.field(), m.rows()));
  if (!x || !(compose(m, *x) == Matrix::identity(m.field(), m.rows())))
    return std::nullopt;
  return x;
}

std::vector<Vector> nullspace(const Matrix& m) {
  const std::size_t n = m.cols();
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m.row(i).empty()) continue;
    Vector v(n, Scalar::zero(m.field()));
    for (const auto& [j, x] : m.row(i)) v[j] = x;
    rows.push_back(std::move(v));
  }
  auto e = reduce(std::move(rows), n);
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(n, Scalar::zero(m.field()));
    v[free] = Scalar::one(m.field());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows())
    throw InputError("solve: shape mismatch " + a.shape() + " vs " + b.shape());
  if (!(a.field() == b.field())) throw InputError("solve: field mismatch");
  const std::size_t n = a.cols(), k = b.cols();
  std::vector<Vector> aug;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (a.row(i).empty() && b.row(i).empty()) continue;
    Vector v(n + k, Scalar::zero(a.field()));
    for (const auto& [j, x] : a.row(i)) v[j] = x;
    for (const auto& [j, x] : b.row(i)) v[n + j] = x;
    aug.push_back(std::move(v));
  }
  auto e = reduce(std::move(aug), n + k);
  std::vector<std::vector<Scalar>> x(n, Vector(k, Scalar::zero(a.field())));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] >= n) return std::nullopt;
    for (std::size_t j = 0; j < k; ++j) x[e.pivots[r]][j] = e.rows[r][n + j];
  }
  if (n == 0) return Matrix(a.field(), 0, k);
  return Matrix::from_dense(a.field(), x);
}

}  // namespace heapforge::lin
