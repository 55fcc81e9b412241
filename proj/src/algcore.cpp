#include "heapforge/algcore.hpp"

#include <string>

namespace heapforge::alg {

using lin::compose;
using lin::compose_all;
using lin::kron;
using lin::kron_all;
using lin::Triplet;

namespace {

void require_shape(const Matrix& m, std::size_t rows, std::size_t cols,
                   const FieldSpec& f, const char* what) {
  if (m.rows() != rows || m.cols() != cols)
    throw InputError(std::string(what) + " has shape " + m.shape() + ", expected " +
                     std::to_string(rows) + "x" + std::to_string(cols));
  if (!(m.field() == f))
    throw InputError(std::string(what) + " is over " + m.field().describe() +
                     ", expected " + f.describe());
}

Matrix id(const FieldSpec& f, std::size_t d) { return Matrix::identity(f, d); }

}  // namespace

void check_shapes(const Algebra& a) {
  if (a.dim == 0) throw InputError("algebra dimension must be positive");
  require_shape(a.mu, a.dim, a.dim * a.dim, a.field, "mu");
  require_shape(a.unit, a.dim, 1, a.field, "unit");
}

void check_shapes(const HopfAlgebra& h) {
  check_shapes(h.alg);
  const auto d = h.alg.dim;
  require_shape(h.coalg.delta, d * d, d, h.alg.field, "delta");
  require_shape(h.coalg.epsilon, 1, d, h.alg.field, "epsilon");
  require_shape(h.antipode, d, d, h.alg.field, "antipode");
}

void check_shapes(const QuantumHeap& q) {
  check_shapes(q.alg);
  const auto d = q.alg.dim;
  require_shape(q.tau, d * d * d, d, q.alg.field, "tau");
}

void check_functional(const Algebra& a, const Matrix& eps) {
  require_shape(eps, 1, a.dim, a.field, "character");
}

Matrix basis_vector(FieldSpec f, std::size_t d, std::size_t i) {
  return Matrix::from_triplets(f, d, 1, {{i, 0, Scalar::one(f)}});
}

Matrix left_multiplication(const Algebra& a, std::size_t i) {
  // mu o (e_i (x) id)
  return compose(a.mu, kron(basis_vector(a.field, a.dim, i), id(a.field, a.dim)));
}

Matrix right_multiplication(const Algebra& a, std::size_t i) {
  return compose(a.mu, kron(id(a.field, a.dim), basis_vector(a.field, a.dim, i)));
}

Algebra ground_algebra(FieldSpec f) {
  return Algebra{f, 1, Matrix::identity(f, 1), Matrix::identity(f, 1)};
}

Algebra opposite_algebra(const Algebra& a) {
  check_shapes(a);
  const auto flip = lin::tensor_permutation(a.field, {a.dim, a.dim}, {1, 0});
  return Algebra{a.field, a.dim, compose(a.mu, flip), a.unit};
}

Algebra tensor_product_algebra(const std::vector<Algebra>& parts,
                               const std::vector<bool>& opposite_flags) {
  if (parts.size() < 2 || parts.size() != opposite_flags.size())
    throw InputError("tensor_product_algebra needs >= 2 parts and one flag per part");
  const FieldSpec f = parts[0].field;
  const std::size_t n = parts.size();
  lin::Dims dims;
  for (const auto& p : parts) {
    check_shapes(p);
    if (!(p.field == f)) throw InputError("tensor_product_algebra: field mismatch");
    dims.push_back(p.dim);
  }
  // (x_1..x_n, y_1..y_n) -> (x_1, y_1, ..., x_n, y_n), then the factor products.
  lin::Dims doubled = dims;
  doubled.insert(doubled.end(), dims.begin(), dims.end());
  std::vector<std::size_t> perm;
  for (std::size_t i = 0; i < n; ++i) {
    perm.push_back(i);
    perm.push_back(n + i);
  }
  const auto shuffle = lin::tensor_permutation(f, doubled, perm);
  Matrix mus = opposite_flags[0] ? opposite_algebra(parts[0]).mu : parts[0].mu;
  Matrix units = parts[0].unit;
  for (std::size_t i = 1; i < n; ++i) {
    mus = kron(mus, opposite_flags[i] ? opposite_algebra(parts[i]).mu : parts[i].mu);
    units = kron(units, parts[i].unit);
  }
  return Algebra{f, lin::product(dims), compose(mus, shuffle), std::move(units)};
}

Algebra heap_target_algebra(const Algebra& a) {
  return tensor_product_algebra({a, a, a}, {false, true, false});
}

VerificationReport verify_algebra(const Algebra& a) {
  check_shapes(a);
  VerificationReport rep("algebra");
  const auto& f = a.field;
  const auto I = id(f, a.dim);
  rep.expect_equal("associativity", compose(a.mu, kron(a.mu, I)),
                   compose(a.mu, kron(I, a.mu)));
  rep.expect_equal("left_unit", compose(a.mu, kron(a.unit, I)), I);
  rep.expect_equal("right_unit", compose(a.mu, kron(I, a.unit)), I);
  return rep;
}

VerificationReport verify_coalgebra(const FieldSpec& f, std::size_t dim, const Coalgebra& c) {
  require_shape(c.delta, dim * dim, dim, f, "delta");
  require_shape(c.epsilon, 1, dim, f, "epsilon");
  VerificationReport rep("coalgebra");
  const auto I = id(f, dim);
  rep.expect_equal("coassociativity", compose(kron(c.delta, I), c.delta),
                   compose(kron(I, c.delta), c.delta));
  rep.expect_equal("left_counit", compose(kron(c.epsilon, I), c.delta), I);
  rep.expect_equal("right_counit", compose(kron(I, c.epsilon), c.delta), I);
  return rep;
}

VerificationReport verify_hopf(const HopfAlgebra& h) {
  check_shapes(h);
  VerificationReport rep("hopf");
  const auto& a = h.alg;
  const auto& f = a.field;
  const auto& delta = h.coalg.delta;
  const auto& eps = h.coalg.epsilon;
  const auto I = id(f, a.dim);
  rep.merge(verify_algebra(a), "algebra");
  rep.merge(verify_coalgebra(f, a.dim, h.coalg), "coalgebra");

  const auto hh = tensor_product_algebra({a, a}, {false, false});
  rep.expect_equal("delta_multiplicative", compose(delta, a.mu),
                   compose(hh.mu, kron(delta, delta)));
  rep.expect_equal("delta_unital", compose(delta, a.unit), kron(a.unit, a.unit));
  rep.expect_equal("epsilon_multiplicative", compose(eps, a.mu), kron(eps, eps));
  rep.expect_equal("epsilon_unital", compose(eps, a.unit), Matrix::identity(f, 1));

  const auto unit_eps = compose(a.unit, eps);
  const auto s_id = kron(h.antipode, I);
  const auto id_s = kron(I, h.antipode);
  rep.expect_equal("antipode_left", compose_all({&a.mu, &s_id, &delta}), unit_eps);
  rep.expect_equal("antipode_right", compose_all({&a.mu, &id_s, &delta}), unit_eps);
  return rep;
}

VerificationReport verify_quantum_heap(const QuantumHeap& q, QuantumHeapChecks opts) {
  const auto& a = q.alg;
  const auto& f = a.field;
  if (opts.cop_only) {
    require_shape(q.tau, a.dim * a.dim * a.dim, a.dim, f, "tau");
  } else {
    check_shapes(q);
  }
  VerificationReport rep(opts.cop_only ? "cop" : "quantum_heap");
  const auto I = id(f, a.dim);
  const auto II = id(f, a.dim * a.dim);
  rep.expect_equal("cop_law", compose(kron(II, q.tau), q.tau),
                   compose(kron(q.tau, II), q.tau));
  if (opts.cop_only) return rep;

  rep.merge(verify_algebra(a), "algebra");
  // h -> h (x) 1 and h -> 1 (x) h
  rep.expect_equal("heap_left", compose(kron(I, a.mu), q.tau), kron(I, a.unit));
  rep.expect_equal("heap_right", compose(kron(a.mu, I), q.tau), kron(a.unit, I));
  const auto target = heap_target_algebra(a);
  rep.expect_equal("multiplicative", compose(q.tau, a.mu),
                   compose(target.mu, kron(q.tau, q.tau)));
  rep.expect_equal("unital", compose(q.tau, a.unit), kron_all({&a.unit, &a.unit, &a.unit}));
  return rep;
}

VerificationReport verify_cop_counit(const QuantumHeap& q, const Character& eps) {
  check_functional(q.alg, eps.eps);
  require_shape(q.tau, q.alg.dim * q.alg.dim * q.alg.dim, q.alg.dim, q.alg.field, "tau");
  VerificationReport rep("cop_counit");
  const auto I = id(q.alg.field, q.alg.dim);
  const auto& e = eps.eps;
  rep.expect_equal("left_counit", compose(kron_all({&I, &e, &e}), q.tau), I);
  rep.expect_equal("right_counit", compose(kron_all({&e, &e, &I}), q.tau), I);
  return rep;
}

VerificationReport verify_character(const Algebra& a, const Character& eps) {
  check_shapes(a);
  check_functional(a, eps.eps);
  VerificationReport rep("character");
  rep.expect_equal("unital", compose(eps.eps, a.unit), Matrix::identity(a.field, 1));
  rep.expect_equal("multiplicative", compose(eps.eps, a.mu), kron(eps.eps, eps.eps));
  return rep;
}

VerificationReport verify_algebra_morphism(const Algebra& src, const Algebra& dst,
                                           const Matrix& phi) {
  check_shapes(src);
  check_shapes(dst);
  require_shape(phi, dst.dim, src.dim, src.field, "morphism");
  VerificationReport rep("algebra_morphism");
  rep.expect_equal("unital", compose(phi, src.unit), dst.unit);
  rep.expect_equal("multiplicative", compose(phi, src.mu), compose(dst.mu, kron(phi, phi)));
  return rep;
}

VerificationReport verify_qheap_morphism(const QuantumHeap& src, const QuantumHeap& dst,
                                         const Matrix& phi) {
  check_shapes(src);
  check_shapes(dst);
  VerificationReport rep("qheap_morphism");
  rep.merge(verify_algebra_morphism(src.alg, dst.alg, phi), "algebra_map");
  rep.expect_equal("tau_compatible", compose(dst.tau, phi),
                   compose(kron_all({&phi, &phi, &phi}), src.tau));
  return rep;
}

VerificationReport verify_counit_preserved(const Character& src, const Character& dst,
                                           const Matrix& phi) {
  if (phi.rows() != dst.eps.cols() || phi.cols() != src.eps.cols())
    throw InputError("counit preservation: shape mismatch " + phi.shape());
  VerificationReport rep("counit_preserved");
  rep.expect_equal("counit_preserved", compose(dst.eps, phi), src.eps);
  return rep;
}

std::optional<Character> find_counit_not_character(const QuantumHeap& q, int bound) {
  check_shapes(q);
  const auto d = q.alg.dim;
  const auto& f = q.alg.field;
  const long width = 2L * bound + 1;
  long total = 1;
  for (std::size_t i = 0; i < d; ++i) {
    total *= width;
    if (total > 100000) throw InputError("counit search space too large");
  }
  for (long code = 0; code < total; ++code) {
    std::vector<Triplet> t;
    long c = code;
    for (std::size_t i = 0; i < d; ++i) {
      const long v = c % width - bound;
      c /= width;
      if (v != 0) t.push_back({0, i, Scalar(f, v)});
    }
    Character eps{Matrix::from_triplets(f, 1, d, std::move(t))};
    if (verify_cop_counit(q, eps).passed() && !verify_character(q.alg, eps).passed())
      return eps;
  }
  return std::nullopt;
}

}  // namespace heapforge::alg
