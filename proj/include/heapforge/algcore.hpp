#pragma once

// Finite-dimensional algebras, Hopf algebras and quantum heaps given by
// structure-constant matrices, with exact verifiers for their laws.
//
// Shapes, for dimension d:
//   mu       d x d^2    e_i e_j = sum_k mu[k, (i,j)] e_k
//   unit     d x 1
//   delta    d^2 x d    delta(e_h) = sum delta[(i,j), h] e_i (x) e_j
//   epsilon  1 x d
//   antipode d x d      S(e_j) = sum_i S[i, j] e_i
//   tau      d^3 x d    tau(e_h) = sum tau[(a,b,c), h] e_a (x) e_b (x) e_c

#include <optional>
#include <vector>

#include "heapforge/matrix.hpp"
#include "heapforge/report.hpp"

namespace heapforge::alg {

using lin::FieldSpec;
using lin::Matrix;
using lin::Scalar;

struct Algebra {
  FieldSpec field;
  std::size_t dim;
  Matrix mu;
  Matrix unit;
  friend bool operator==(const Algebra&, const Algebra&) = default;
};

struct Coalgebra {
  Matrix delta;
  Matrix epsilon;
  friend bool operator==(const Coalgebra&, const Coalgebra&) = default;
};

struct HopfAlgebra {
  Algebra alg;
  Coalgebra coalg;
  Matrix antipode;
  friend bool operator==(const HopfAlgebra&, const HopfAlgebra&) = default;
};

/// A unital algebra with a ternary cooperation tau : H -> H (x) H_op (x) H.
struct QuantumHeap {
  Algebra alg;
  Matrix tau;
  friend bool operator==(const QuantumHeap&, const QuantumHeap&) = default;
};

/// A linear functional H -> k, stored as a 1 x d matrix.
struct Character {
  Matrix eps;
  friend bool operator==(const Character&, const Character&) = default;
};

// Shape validation; each throws InputError describing the mismatch.
void check_shapes(const Algebra& a);
void check_shapes(const HopfAlgebra& h);
void check_shapes(const QuantumHeap& q);
void check_functional(const Algebra& a, const Matrix& eps);

/// Basis vector e_i as a d x 1 column.
Matrix basis_vector(FieldSpec f, std::size_t d, std::size_t i);
/// Matrix of x -> e_i x.
Matrix left_multiplication(const Algebra& a, std::size_t i);
/// Matrix of x -> x e_i.
Matrix right_multiplication(const Algebra& a, std::size_t i);
/// The one-dimensional algebra k.
Algebra ground_algebra(FieldSpec f);

/// Same space and unit, product mu composed with the flip.
Algebra opposite_algebra(const Algebra& a);
/// (x_1 (x) ... (x) x_n)(y_1 (x) ... (x) y_n) = x_1 y_1 (x) ... (x) x_n y_n,
/// with factor i replaced by its opposite when opposite_flags[i] is set.
Algebra tensor_product_algebra(const std::vector<Algebra>& parts,
                               const std::vector<bool>& opposite_flags);
/// H (x) H_op (x) H, the target algebra of a ternary cooperation.
Algebra heap_target_algebra(const Algebra& a);

VerificationReport verify_algebra(const Algebra& a);
VerificationReport verify_coalgebra(const FieldSpec& f, std::size_t dim, const Coalgebra& c);
VerificationReport verify_hopf(const HopfAlgebra& h);

struct QuantumHeapChecks {
  /// Only the cop law; for bare cops whose algebra part is a placeholder.
  bool cop_only = false;
};
VerificationReport verify_quantum_heap(const QuantumHeap& q, QuantumHeapChecks opts = {});

/// (id (x) eps (x) eps) tau = id = (eps (x) eps (x) id) tau.
VerificationReport verify_cop_counit(const QuantumHeap& q, const Character& eps);
/// eps(1) = 1 and eps(xy) = eps(x) eps(y).
VerificationReport verify_character(const Algebra& a, const Character& eps);

/// Unital algebra map src -> dst (phi is dst.dim x src.dim).
VerificationReport verify_algebra_morphism(const Algebra& src, const Algebra& dst,
                                           const Matrix& phi);
/// Algebra map commuting with the cooperations.
VerificationReport verify_qheap_morphism(const QuantumHeap& src, const QuantumHeap& dst,
                                         const Matrix& phi);
/// eps_dst o phi = eps_src.
VerificationReport verify_counit_preserved(const Character& src, const Character& dst,
                                           const Matrix& phi);

/// Searches functionals with coordinates in [-bound, bound] for one that is
/// a counit of q's cop but not a character of its algebra.
std::optional<Character> find_counit_not_character(const QuantumHeap& q, int bound);

}  // namespace heapforge::alg
