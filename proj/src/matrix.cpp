#include "heapforge/matrix.hpp"

#include <algorithm>

namespace heapforge::lin {

namespace {

void require_field(const FieldSpec& a, const FieldSpec& b, const char* op) {
  if (!(a == b))
    throw InputError(std::string(op) + ": field mismatch " + a.describe() +
                     " vs " + b.describe());
}

// Sorts by column and merges duplicates in place, removing zeros.
void canonicalize_row(Matrix::Row& row) {
  std::sort(row.begin(), row.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < row.size();) {
    Index col = row[i].first;
    Scalar acc = std::move(row[i].second);
    std::size_t j = i + 1;
    for (; j < row.size() && row[j].first == col; ++j) acc += row[j].second;
    if (!acc.is_zero()) row[out++] = {col, std::move(acc)};
    i = j;
  }
  row.erase(row.begin() + static_cast<std::ptrdiff_t>(out), row.end());
}

}  // namespace

std::size_t product(std::span<const std::size_t> dims) {
  std::size_t p = 1;
  for (auto d : dims) p *= d;
  return p;
}

std::size_t ipow(std::size_t d, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    r *= d;
    if (r > (std::size_t{1} << 40)) throw InputError("tensor power too large");
  }
  return r;
}

Index flatten(std::span<const std::size_t> dims, std::span<const Index> indices) {
  if (dims.size() != indices.size())
    throw InputError("multi-index length does not match dims");
  Index flat = 0;
  for (std::size_t j = 0; j < dims.size(); ++j) {
    if (indices[j] >= dims[j])
      throw InputError("multi-index component " + std::to_string(indices[j]) +
                       " out of range " + std::to_string(dims[j]));
    flat = flat * dims[j] + indices[j];
  }
  return flat;
}

std::vector<Index> unflatten(std::span<const std::size_t> dims, Index flat) {
  std::vector<Index> idx(dims.size());
  for (std::size_t j = dims.size(); j-- > 0;) {
    idx[j] = flat % dims[j];
    flat /= dims[j];
  }
  if (flat != 0) throw InputError("flat index out of range");
  return idx;
}

Index MultiIndex::flat() const { return flatten(dims, indices); }

MultiIndex MultiIndex::from_flat(Dims dims, Index flat) {
  auto idx = unflatten(dims, flat);
  return MultiIndex{std::move(dims), std::move(idx)};
}

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows) {}

Matrix Matrix::from_triplets(FieldSpec field, std::size_t rows, std::size_t cols,
                             std::vector<Triplet> entries) {
  Matrix m(field, rows, cols);
  for (auto& t : entries) {
    if (t.row >= rows || t.col >= cols)
      throw InputError("entry (" + std::to_string(t.row) + "," +
                       std::to_string(t.col) + ") outside " + m.shape());
    require_field(field, t.value.field(), "from_triplets");
    m.data_[t.row].emplace_back(t.col, std::move(t.value));
  }
  for (auto& r : m.data_) canonicalize_row(r);
  return m;
}

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
  Matrix m(field, n, n);
  for (Index i = 0; i < n; ++i) m.data_[i].emplace_back(i, Scalar::one(field));
  return m;
}

Matrix Matrix::from_dense(FieldSpec field,
                          const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  std::vector<Triplet> t;
  for (Index i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("ragged dense matrix");
    for (Index j = 0; j < cols; ++j)
      if (!rows[i][j].is_zero()) t.push_back({i, j, rows[i][j]});
  }
  return from_triplets(field, rows.size(), cols, std::move(t));
}

Matrix Matrix::scalar(const Scalar& s) {
  return from_triplets(s.field(), 1, 1, {{0, 0, s}});
}

std::string Matrix::shape() const {
  return std::to_string(rows_) + "x" + std::to_string(cols_);
}

std::size_t Matrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

Scalar Matrix::at(Index i, Index j) const {
  if (i >= rows_ || j >= cols_) throw InputError("matrix index out of range");
  const auto& r = data_[i];
  auto it = std::lower_bound(r.begin(), r.end(), j,
                             [](const Entry& e, Index c) { return e.first < c; });
  if (it != r.end() && it->first == j) return it->second;
  return Scalar::zero(field_);
}

std::vector<Triplet> Matrix::triplets() const {
  std::vector<Triplet> out;
  for (Index i = 0; i < rows_; ++i)
    for (const auto& [j, v] : data_[i]) out.push_back({i, j, v});
  return out;
}

std::vector<std::vector<Scalar>> Matrix::dense() const {
  std::vector<std::vector<Scalar>> out(rows_,
                                       std::vector<Scalar>(cols_, Scalar(field_)));
  for (Index i = 0; i < rows_; ++i)
    for (const auto& [j, v] : data_[i]) out[i][j] = v;
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (Index i = 0; i < rows_; ++i)
    for (const auto& [j, v] : data_[i]) t.data_[j].emplace_back(i, v);
  return t;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (!(a.field_ == b.field_) || a.rows_ != b.rows_ || a.cols_ != b.cols_)
    return false;
  for (Index i = 0; i < a.rows_; ++i) {
    const auto& x = a.data_[i];
    const auto& y = b.data_[i];
    if (x.size() != y.size()) return false;
    for (std::size_t k = 0; k < x.size(); ++k)
      if (x[k].first != y[k].first || !(x[k].second == y[k].second)) return false;
  }
  return true;
}

Matrix compose(const Matrix& a, const Matrix& b) {
  require_field(a.field_, b.field_, "compose");
  if (a.cols_ != b.rows_)
    throw InputError("compose: shape mismatch " + a.shape() + " * " + b.shape());
  Matrix c(a.field_, a.rows_, b.cols_);
  for (Index i = 0; i < a.rows_; ++i) {
    const auto& ar = a.data_[i];
    if (ar.empty()) continue;
    if (ar.size() == 1) {
      const auto& [k, v] = ar[0];
      for (const auto& [j, w] : b.data_[k]) c.data_[i].emplace_back(j, v * w);
      continue;
    }
    auto& row = c.data_[i];
    for (const auto& [k, v] : ar)
      for (const auto& [j, w] : b.data_[k]) row.emplace_back(j, v * w);
    canonicalize_row(row);
  }
  return c;
}

Matrix compose_all(std::initializer_list<const Matrix*> chain) {
  if (chain.size() == 0) throw InputError("compose_all: empty chain");
  // Right to left keeps intermediate results narrow (maps out of a small space).
  auto it = chain.end();
  --it;
  Matrix acc = **it;
  while (it != chain.begin()) {
    --it;
    acc = compose(**it, acc);
  }
  return acc;
}

Matrix add(const Matrix& a, const Matrix& b) {
  require_field(a.field_, b.field_, "add");
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw InputError("add: shape mismatch " + a.shape() + " + " + b.shape());
  Matrix c(a.field_, a.rows_, a.cols_);
  for (Index i = 0; i < a.rows_; ++i) {
    auto& row = c.data_[i];
    row = a.data_[i];
    row.insert(row.end(), b.data_[i].begin(), b.data_[i].end());
    canonicalize_row(row);
  }
  return c;
}

Matrix scale(const Matrix& a, const Scalar& s) {
  require_field(a.field_, s.field(), "scale");
  Matrix c(a.field_, a.rows_, a.cols_);
  if (s.is_zero()) return c;
  for (Index i = 0; i < a.rows_; ++i)
    for (const auto& [j, v] : a.data_[i]) c.data_[i].emplace_back(j, v * s);
  return c;
}

Matrix subtract(const Matrix& a, const Matrix& b) {
  return add(a, scale(b, -Scalar::one(b.field())));
}

Matrix kron(const Matrix& a, const Matrix& b) {
  require_field(a.field_, b.field_, "kron");
  Matrix c(a.field_, a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (Index i = 0; i < a.rows_; ++i) {
    if (a.data_[i].empty()) continue;
    for (Index k = 0; k < b.rows_; ++k) {
      auto& row = c.data_[i * b.rows_ + k];
      row.reserve(a.data_[i].size() * b.data_[k].size());
      for (const auto& [j, v] : a.data_[i])
        for (const auto& [l, w] : b.data_[k]) row.emplace_back(j * b.cols_ + l, v * w);
    }
  }
  return c;
}

Matrix kron_all(std::initializer_list<const Matrix*> factors) {
  if (factors.size() == 0) throw InputError("kron_all: no factors");
  auto it = factors.begin();
  Matrix acc = **it;
  for (++it; it != factors.end(); ++it) acc = kron(acc, **it);
  return acc;
}

std::optional<std::pair<Index, Index>> first_difference(const Matrix& a,
                                                        const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw InputError("first_difference: shape mismatch " + a.shape() + " vs " +
                     b.shape());
  for (Index i = 0; i < a.rows(); ++i) {
    const auto& x = a.row(i);
    const auto& y = b.row(i);
    std::size_t p = 0, q = 0;
    while (p < x.size() || q < y.size()) {
      if (q == y.size() || (p < x.size() && x[p].first < y[q].first))
        return std::pair{i, x[p].first};
      if (p == x.size() || y[q].first < x[p].first) return std::pair{i, y[q].first};
      if (!(x[p].second == y[q].second)) return std::pair{i, x[p].first};
      ++p;
      ++q;
    }
  }
  return std::nullopt;
}

Dims permuted_dims(const Dims& dims, const std::vector<std::size_t>& perm) {
  if (perm.size() != dims.size())
    throw InputError("permutation length does not match dims");
  std::vector<bool> seen(perm.size(), false);
  for (auto p : perm) {
    if (p >= perm.size() || seen[p]) throw InputError("not a permutation");
    seen[p] = true;
  }
  Dims out(dims.size());
  for (std::size_t j = 0; j < perm.size(); ++j) out[j] = dims[perm[j]];
  return out;
}

Matrix tensor_permutation(FieldSpec field, const Dims& dims,
                          const std::vector<std::size_t>& perm) {
  const Dims out_dims = permuted_dims(dims, perm);
  const std::size_t n = product(dims);
  std::vector<Triplet> t;
  t.reserve(n);
  std::vector<Index> out_idx(dims.size());
  for (Index flat = 0; flat < n; ++flat) {
    auto in_idx = unflatten(dims, flat);
    for (std::size_t j = 0; j < perm.size(); ++j) out_idx[j] = in_idx[perm[j]];
    t.push_back({flatten(out_dims, out_idx), flat, Scalar::one(field)});
  }
  return Matrix::from_triplets(field, n, n, std::move(t));
}

}  // namespace heapforge::lin
