#pragma once

// Finite-dimensional modules over the algebra of a quantum heap, and the
// ternary product of modules.
//
// A module of dimension m over an algebra of dimension d is d matrices m x m,
// actions[i] being the action of e_i on column vectors. For a right module
// v . e_i is actions[i] v, so actions(e_i e_j) = actions[j] actions[i].

#include <optional>
#include <string>
#include <vector>

#include "heapforge/algcore.hpp"

namespace heapforge::reps {

using alg::Algebra;
using alg::Character;
using alg::HopfAlgebra;
using alg::QuantumHeap;
using lin::Matrix;

enum class Side { Left, Right };

std::string side_name(Side s);

struct Module {
  Side side = Side::Left;
  Algebra over;
  std::size_t dim = 0;
  std::vector<Matrix> actions;

  friend bool operator==(const Module&, const Module&) = default;
};

/// Throws InputError on shape or field problems.
void check_shapes(const Module& m);

/// Lines "unital" and "multiplicative"; a multiplicative failure carries the
/// witness (i, j).
VerificationReport verify_module(const Module& m);

/// Action of sum_i coeffs[i] e_i, where coeffs is a d x 1 column.
Matrix action_of(const Module& m, const Matrix& coeffs);

Module regular_module(const Algebra& a, Side side = Side::Left);
/// 1-dimensional, e_i acting by eps(e_i).
Module trivial_module(const Algebra& a, const Character& eps, Side side = Side::Left);
Module direct_sum(const Module& a, const Module& b);
/// The module over src obtained through an algebra map phi : src -> m.over.
Module pullback(const Module& m, const Algebra& src, const Matrix& phi);

/// Right module over A read as a left module over opposite_algebra(A), and
/// back. Applying either to a left module over A gives a right module over
/// A_op.
Module to_opposite(const Module& m);

Module ternary_action_left(const QuantumHeap& q, const Module& a, const Module& b,
                           const Module& c);
/// (b (x) c (x) d) . h = b . h(1) (x) h(2) c (x) d . h(3).
Module ternary_action_right(const QuantumHeap& q, const Module& b, const Module& c,
                            const Module& d);

enum class DualVariant { LeftViaS, RightPlain };
/// LeftViaS: actions'[i] = (sum_j S[j,i] actions[j])^T, a left module.
/// RightPlain: actions'[i] = actions[i]^T, a right module.
Module dual_module(const HopfAlgebra& h, const Module& m, DualVariant variant);

/// Q1 (x) Q2* (x) Q3 with the action of (delta (x) id) delta and the S-dual
/// in the middle.
Module lozenge_rigid(const HopfAlgebra& h, const Module& q1, const Module& q2,
                     const Module& q3);

struct IsoResult {
  enum class Verdict { Yes, No, Unknown };
  Verdict verdict = Verdict::Unknown;
  std::optional<Matrix> witness;  // T with T rho1(e_i) = rho2(e_i) T
  std::string reason;
};
std::string verdict_name(IsoResult::Verdict v);

/// Intertwiner space by exact elimination. Dimension or one-sided Hom
/// vanishing, or a common kernel or proper common image of a Hom basis,
/// decides "no". Otherwise integer combinations of a Hom basis with
/// coefficients in [-2, 2] are tried exhaustively when the basis has at most
/// 4 elements, followed by 256 seeded random combinations with coefficients
/// in [-5, 5]; no invertible one gives "unknown". Modules of dimension above
/// 32 give "unknown" without a search.
IsoResult modules_isomorphic(const Module& m1, const Module& m2);

/// The d x d map theta with
///   (id (x) rev(tau) (x) id) tau = (id (x) id (x) theta (x) id (x) id)(tau (x) id (x) id) tau,
/// rev reversing the three output factors, if one exists. For heaps coming
/// from Hopf algebras it is S^2.
std::optional<Matrix> grunspan_map(const QuantumHeap& q);

/// q1, q3, q5 left and q2, q4 right, product of dimensions <= 64. Lines:
///   outer:          (Q1 Q2 Q3) Q4 Q5 = Q1 Q2 (Q3 Q4 Q5)
///   middle:         (Q1 Q2 Q3) Q4 Q5 = Q1 (Q2 Q3 Q4) Q5
///   middle_twisted: (Q1 Q2 Q3') Q4 Q5 = Q1 (Q2 Q3 Q4)' Q5, where Q3' is Q3
///                   pulled back along grunspan_map(q) and the inner product
///                   uses the reversed tau.
/// Action families are compared entrywise; witnesses are (i, row, col).
/// theta, when given, is used in place of grunspan_map(q).
VerificationReport check_para_associativity(const QuantumHeap& q, const Module& q1,
                                            const Module& q2, const Module& q3,
                                            const Module& q4, const Module& q5,
                                            const std::optional<Matrix>& theta = std::nullopt);

/// Delta-tensor product Q1 (x) Q2 of left modules.
Module tensor_product(const HopfAlgebra& h, const Module& q1, const Module& q2);

/// Compares Q1 <> dual(1) <> Q2 through qheap_from_hopf(h) with Q1 (x) Q2.
VerificationReport monoidal_from_heapy(const HopfAlgebra& h, const Module& q1,
                                       const Module& q2);

/// 1 <> Q <> Q and Q <> Q <> 1 (middle: plain dual of Q) compared with the
/// trivial module and with Q. Nothing is asserted.
struct UnitProbe {
  std::size_t left_dim = 0;
  std::size_t right_dim = 0;
  IsoResult left_vs_unit;
  IsoResult right_vs_unit;
  IsoResult left_vs_q;
  IsoResult right_vs_q;
};
UnitProbe unit_probe(const HopfAlgebra& h, const Module& q);

}  // namespace heapforge::reps
