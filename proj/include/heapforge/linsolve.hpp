#pragma once

// Exact Gaussian elimination on dense copies of sparse matrices.

#include <optional>
#include <vector>

#include "heapforge/matrix.hpp"

namespace heapforge::lin {

using Vector = std::vector<Scalar>;

std::size_t rank(const Matrix& m);
Scalar determinant(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

/// Basis of {x : m x = 0}, one vector of length m.cols() per basis element.
std::vector<Vector> nullspace(const Matrix& m);

/// Some X with a * X = b, or nullopt if the system is inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

}  // namespace heapforge::lin
