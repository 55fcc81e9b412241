#pragma once

// Sparse exact matrices between tensor powers of based vector spaces.
//
// Tensor bases are flattened with the leftmost factor most significant:
//   flat(i_0, ..., i_{k-1}) = sum_j i_j * prod_{l > j} dims[l].
// Every structure constant in the library, and the file format, uses this.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "heapforge/scalar.hpp"

namespace heapforge::lin {

using Index = std::size_t;
using Dims = std::vector<std::size_t>;

/// Position in a tensor product basis.
struct MultiIndex {
  Dims dims;
  std::vector<Index> indices;

  Index flat() const;
  static MultiIndex from_flat(Dims dims, Index flat);
};

Index flatten(std::span<const std::size_t> dims, std::span<const Index> indices);
std::vector<Index> unflatten(std::span<const std::size_t> dims, Index flat);
std::size_t product(std::span<const std::size_t> dims);
/// d^k, throwing InputError beyond 2^40 (the library never needs more).
std::size_t ipow(std::size_t d, std::size_t k);

struct Triplet {
  Index row;
  Index col;
  Scalar value;
};

/// Row-compressed matrix with no stored zeros, so equality of matrices is
/// equality of their stored entries.
class Matrix {
 public:
  using Entry = std::pair<Index, Scalar>;
  using Row = std::vector<Entry>;

  /// 0 x 0 over Q.
  Matrix() : Matrix(FieldSpec(), 0, 0) {}
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

  /// Duplicate coordinates are summed; zeros are dropped.
  static Matrix from_triplets(FieldSpec field, std::size_t rows, std::size_t cols,
                              std::vector<Triplet> entries);
  static Matrix identity(FieldSpec field, std::size_t n);
  static Matrix from_dense(FieldSpec field,
                           const std::vector<std::vector<Scalar>>& rows);
  /// 1x1 matrix; the scalar seen as a map k -> k.
  static Matrix scalar(const Scalar& s);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::string shape() const;
  std::size_t nonzeros() const;

  const Row& row(Index i) const { return data_[i]; }
  Scalar at(Index i, Index j) const;
  std::vector<Triplet> triplets() const;
  std::vector<std::vector<Scalar>> dense() const;

  Matrix transpose() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Row> data_;

  friend Matrix compose(const Matrix&, const Matrix&);
  friend Matrix add(const Matrix&, const Matrix&);
  friend Matrix scale(const Matrix&, const Scalar&);
  friend Matrix kron(const Matrix&, const Matrix&);
};

/// a * b, i.e. the linear map "first b, then a". Requires a.cols == b.rows.
Matrix compose(const Matrix& a, const Matrix& b);
/// compose over a chain: compose_all({a, b, c}) = a * b * c.
Matrix compose_all(std::initializer_list<const Matrix*> chain);
Matrix add(const Matrix& a, const Matrix& b);
Matrix subtract(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, const Scalar& s);
/// Kronecker product; row (i,k) col (j,l) holds a[i,j] * b[k,l].
Matrix kron(const Matrix& a, const Matrix& b);
Matrix kron_all(std::initializer_list<const Matrix*> factors);

/// First coordinate where the two same-shaped matrices differ.
std::optional<std::pair<Index, Index>> first_difference(const Matrix& a,
                                                        const Matrix& b);

/// Permutation of tensor factors: output factor j is input factor perm[j].
/// Input space has the given dims; the result is square of size prod(dims).
Matrix tensor_permutation(FieldSpec field, const Dims& dims,
                          const std::vector<std::size_t>& perm);
/// dims reordered as the output of tensor_permutation(dims, perm) sees them.
Dims permuted_dims(const Dims& dims, const std::vector<std::size_t>& perm);

}  // namespace heapforge::lin
