#include "heapforge/reps.hpp"

#include <random>

#include "heapforge/functors.hpp"
#include "heapforge/linsolve.hpp"

namespace heapforge::reps {

using lin::compose;
using lin::kron;
using lin::Scalar;
using lin::Triplet;

namespace {

constexpr std::size_t kMaxIsoDim = 32;
constexpr std::size_t kMaxParaDim = 64;

void require_base(const Module& m, const Algebra& a, const char* what) {
  check_shapes(m);
  if (!(m.over == a))
    throw InputError(std::string(what) + " is not a module over the expected algebra");
}

void require_side(const Module& m, Side s, const char* what) {
  if (m.side != s)
    throw InputError(std::string(what) + " must be a " + side_name(s) + " module");
}

// The action matrices of sum over coproduct column h of factor products.
Module triple_action(const Matrix& coproduct, const Algebra& over, Side side,
                     const Module& a, const Module& b, const Module& c) {
  const auto d = over.dim;
  const auto f = over.field;
  const auto cols = coproduct.transpose();
  Module out{side, over, a.dim * b.dim * c.dim, {}};
  for (std::size_t h = 0; h < d; ++h) {
    Matrix m(f, out.dim, out.dim);
    for (const auto& [flat, coef] : cols.row(h)) {
      const auto r = flat / (d * d), s = (flat / d) % d, t = flat % d;
      m = lin::add(m, lin::scale(kron(kron(a.actions[r], b.actions[s]), c.actions[t]), coef));
    }
    out.actions.push_back(std::move(m));
  }
  return out;
}

Matrix column_of(const Matrix& m, std::size_t j) {
  return compose(m, alg::basis_vector(m.field(), m.cols(), j));
}

// Basis of {T : T rho1(e_i) = rho2(e_i) T}, each T of shape m2.dim x m1.dim.
std::vector<Matrix> hom_basis(const Module& m1, const Module& m2) {
  const auto f = m1.over.field;
  const std::size_t p = m2.dim, q = m1.dim;
  auto var = [q](std::size_t row, std::size_t col) { return row * q + col; };
  std::vector<Triplet> eqs;
  std::size_t eq = 0;
  for (std::size_t i = 0; i < m1.actions.size(); ++i) {
    // (T r1)[a][b] = sum_c T[a][c] r1[c][b];  (r2 T)[a][b] = sum_c r2[a][c] T[c][b]
    const auto r1t = m1.actions[i].transpose();
    for (std::size_t a = 0; a < p; ++a)
      for (std::size_t b = 0; b < q; ++b, ++eq) {
        for (const auto& [c, v] : r1t.row(b)) eqs.push_back({eq, var(a, c), v});
        for (const auto& [c, v] : m2.actions[i].row(a)) eqs.push_back({eq, var(c, b), -v});
      }
  }
  const auto system = Matrix::from_triplets(f, eq, p * q, std::move(eqs));
  std::vector<Matrix> out;
  for (const auto& v : lin::nullspace(system)) {
    std::vector<Triplet> t;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!v[k].is_zero()) t.push_back({k / q, k % q, v[k]});
    out.push_back(Matrix::from_triplets(f, p, q, std::move(t)));
  }
  return out;
}

void compare_families(VerificationReport& rep, const std::string& id, const Module& x,
                      const Module& y) {
  if (x.dim != y.dim || x.actions.size() != y.actions.size()) {
    rep.fail(id, {}, "dimension " + std::to_string(x.dim) + " vs " + std::to_string(y.dim));
    return;
  }
  for (std::size_t i = 0; i < x.actions.size(); ++i) {
    if (auto diff = lin::first_difference(x.actions[i], y.actions[i])) {
      rep.fail(id,
               {static_cast<long long>(i), static_cast<long long>(diff->first),
                static_cast<long long>(diff->second)},
               "actions of e_" + std::to_string(i) + " differ at (" +
                   std::to_string(diff->first) + "," + std::to_string(diff->second) + ")");
      return;
    }
  }
  rep.pass(id);
}

}  // namespace

std::string side_name(Side s) { return s == Side::Left ? "left" : "right"; }

std::string verdict_name(IsoResult::Verdict v) {
  switch (v) {
    case IsoResult::Verdict::Yes: return "yes";
    case IsoResult::Verdict::No: return "no";
    default: return "unknown";
  }
}

void check_shapes(const Module& m) {
  alg::check_shapes(m.over);
  if (m.dim == 0) throw InputError("module dimension must be positive");
  if (m.actions.size() != m.over.dim)
    throw InputError("module has " + std::to_string(m.actions.size()) +
                     " action matrices, expected " + std::to_string(m.over.dim));
  for (std::size_t i = 0; i < m.actions.size(); ++i) {
    const auto& a = m.actions[i];
    if (a.rows() != m.dim || a.cols() != m.dim)
      throw InputError("action " + std::to_string(i) + " has shape " + a.shape() +
                       ", expected " + std::to_string(m.dim) + "x" + std::to_string(m.dim));
    if (!(a.field() == m.over.field))
      throw InputError("action " + std::to_string(i) + " is over the wrong field");
  }
}

Matrix action_of(const Module& m, const Matrix& coeffs) {
  Matrix out(m.over.field, m.dim, m.dim);
  for (const auto& t : coeffs.triplets())
    out = lin::add(out, lin::scale(m.actions[t.row], t.value));
  return out;
}

VerificationReport verify_module(const Module& m) {
  check_shapes(m);
  VerificationReport rep(side_name(m.side) + "_module");
  const auto& a = m.over;
  rep.expect_equal("unital", action_of(m, a.unit), Matrix::identity(a.field, m.dim));
  const auto mu_cols = a.mu.transpose();
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      Matrix lhs(a.field, m.dim, m.dim);
      for (const auto& [k, v] : mu_cols.row(i * a.dim + j))
        lhs = lin::add(lhs, lin::scale(m.actions[k], v));
      const auto rhs = m.side == Side::Left ? compose(m.actions[i], m.actions[j])
                                            : compose(m.actions[j], m.actions[i]);
      if (auto diff = lin::first_difference(lhs, rhs)) {
        rep.fail("multiplicative", {static_cast<long long>(i), static_cast<long long>(j)},
                 "product e_" + std::to_string(i) + " e_" + std::to_string(j) +
                     " differs at (" + std::to_string(diff->first) + "," +
                     std::to_string(diff->second) + ")");
        return rep;
      }
    }
  rep.pass("multiplicative");
  return rep;
}

Module regular_module(const Algebra& a, Side side) {
  alg::check_shapes(a);
  Module m{side, a, a.dim, {}};
  for (std::size_t i = 0; i < a.dim; ++i)
    m.actions.push_back(side == Side::Left ? alg::left_multiplication(a, i)
                                           : alg::right_multiplication(a, i));
  return m;
}

Module trivial_module(const Algebra& a, const Character& eps, Side side) {
  alg::check_functional(a, eps.eps);
  Module m{side, a, 1, {}};
  for (std::size_t i = 0; i < a.dim; ++i) m.actions.push_back(Matrix::scalar(eps.eps.at(0, i)));
  return m;
}

Module direct_sum(const Module& a, const Module& b) {
  require_base(b, a.over, "direct_sum operand");
  if (a.side != b.side) throw InputError("direct_sum of modules on different sides");
  Module m{a.side, a.over, a.dim + b.dim, {}};
  for (std::size_t i = 0; i < a.actions.size(); ++i) {
    auto t = a.actions[i].triplets();
    for (auto e : b.actions[i].triplets()) t.push_back({e.row + a.dim, e.col + a.dim, e.value});
    m.actions.push_back(Matrix::from_triplets(a.over.field, m.dim, m.dim, std::move(t)));
  }
  return m;
}

Module pullback(const Module& m, const Algebra& src, const Matrix& phi) {
  check_shapes(m);
  alg::check_shapes(src);
  if (phi.rows() != m.over.dim || phi.cols() != src.dim)
    throw InputError("pullback map has shape " + phi.shape());
  Module out{m.side, src, m.dim, {}};
  for (std::size_t i = 0; i < src.dim; ++i) out.actions.push_back(action_of(m, column_of(phi, i)));
  return out;
}

Module to_opposite(const Module& m) {
  check_shapes(m);
  return Module{m.side == Side::Left ? Side::Right : Side::Left, alg::opposite_algebra(m.over),
                m.dim, m.actions};
}

Module ternary_action_left(const QuantumHeap& q, const Module& a, const Module& b,
                           const Module& c) {
  alg::check_shapes(q);
  require_base(a, q.alg, "first factor");
  require_base(b, q.alg, "middle factor");
  require_base(c, q.alg, "last factor");
  require_side(a, Side::Left, "first factor");
  require_side(b, Side::Right, "middle factor");
  require_side(c, Side::Left, "last factor");
  return triple_action(q.tau, q.alg, Side::Left, a, b, c);
}

Module ternary_action_right(const QuantumHeap& q, const Module& b, const Module& c,
                            const Module& d) {
  alg::check_shapes(q);
  require_base(b, q.alg, "first factor");
  require_base(c, q.alg, "middle factor");
  require_base(d, q.alg, "last factor");
  require_side(b, Side::Right, "first factor");
  require_side(c, Side::Left, "middle factor");
  require_side(d, Side::Right, "last factor");
  return triple_action(q.tau, q.alg, Side::Right, b, c, d);
}

Module dual_module(const HopfAlgebra& h, const Module& m, DualVariant variant) {
  alg::check_shapes(h);
  require_base(m, h.alg, "dualized module");
  require_side(m, Side::Left, "dualized module");
  Module out{variant == DualVariant::LeftViaS ? Side::Left : Side::Right, h.alg, m.dim, {}};
  for (std::size_t i = 0; i < h.alg.dim; ++i) {
    if (variant == DualVariant::LeftViaS)
      out.actions.push_back(action_of(m, column_of(h.antipode, i)).transpose());
    else
      out.actions.push_back(m.actions[i].transpose());
  }
  return out;
}

Module lozenge_rigid(const HopfAlgebra& h, const Module& q1, const Module& q2,
                     const Module& q3) {
  alg::check_shapes(h);
  for (const Module* m : {&q1, &q2, &q3}) {
    require_base(*m, h.alg, "lozenge factor");
    require_side(*m, Side::Left, "lozenge factor");
  }
  const auto I = Matrix::identity(h.alg.field, h.alg.dim);
  const auto delta2 = compose(kron(h.coalg.delta, I), h.coalg.delta);
  return triple_action(delta2, h.alg, Side::Left, q1, dual_module(h, q2, DualVariant::LeftViaS),
                       q3);
}

namespace {

// Every combination of the basis is singular when the blocks side by side
// (common image) or stacked (common kernel) have rank below n.
bool spans_everything(const std::vector<Matrix>& basis, bool images) {
  const auto& first = basis.front();
  const auto n = first.rows();
  std::vector<lin::Triplet> t;
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (const auto& e : basis[k].triplets()) {
      if (images)
        t.push_back({e.row, k * n + e.col, e.value});
      else
        t.push_back({k * n + e.row, e.col, e.value});
    }
  const auto big = images ? Matrix::from_triplets(first.field(), n, n * basis.size(), t)
                          : Matrix::from_triplets(first.field(), n * basis.size(), n, t);
  return lin::rank(big) == n;
}

}  // namespace

IsoResult modules_isomorphic(const Module& m1, const Module& m2) {
  check_shapes(m1);
  require_base(m2, m1.over, "second module");
  if (m1.side != m2.side) throw InputError("modules_isomorphic: modules on different sides");
  using V = IsoResult::Verdict;
  if (m1.dim != m2.dim)
    return {V::No, std::nullopt,
            "dimensions " + std::to_string(m1.dim) + " and " + std::to_string(m2.dim)};
  if (m1.dim > kMaxIsoDim)
    return {V::Unknown, std::nullopt, "dimension above " + std::to_string(kMaxIsoDim)};
  const auto basis = hom_basis(m1, m2);
  if (basis.empty()) return {V::No, std::nullopt, "Hom(m1, m2) = 0"};
  if (hom_basis(m2, m1).empty()) return {V::No, std::nullopt, "Hom(m2, m1) = 0"};
  if (!spans_everything(basis, true))
    return {V::No, std::nullopt, "images of all intertwiners lie in a proper subspace"};
  if (!spans_everything(basis, false))
    return {V::No, std::nullopt, "all intertwiners share a kernel vector"};

  const auto f = m1.over.field;
  auto combine = [&](const std::vector<long>& c) {
    Matrix t(f, m2.dim, m1.dim);
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (c[k] != 0) t = lin::add(t, lin::scale(basis[k], Scalar(f, c[k])));
    return t;
  };
  auto invertible = [&](const Matrix& t) { return !lin::determinant(t).is_zero(); };

  std::size_t tried = 0;
  const std::size_t k = basis.size();
  if (k <= 4) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= 5;
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<long> c(k);
      std::size_t x = code;
      for (std::size_t i = 0; i < k; ++i, x /= 5) c[i] = static_cast<long>(x % 5) - 2;
      const auto t = combine(c);
      ++tried;
      if (invertible(t)) return {V::Yes, t, "invertible intertwiner found"};
    }
  }
  std::mt19937_64 rng(0x5eedULL);
  std::uniform_int_distribution<long> coef(-5, 5);
  for (int round = 0; round < 256; ++round) {
    std::vector<long> c(k);
    for (auto& v : c) v = coef(rng);
    const auto t = combine(c);
    ++tried;
    if (invertible(t)) return {V::Yes, t, "invertible intertwiner found"};
  }
  return {V::Unknown, std::nullopt,
          "Hom space of dimension " + std::to_string(k) + ", no invertible element among " +
              std::to_string(tried) + " combinations"};
}

std::optional<Matrix> grunspan_map(const QuantumHeap& q) {
  alg::check_shapes(q);
  const auto d = q.alg.dim;
  const auto f = q.alg.field;
  const auto I = Matrix::identity(f, d);
  const auto II = Matrix::identity(f, d * d);
  const auto rev = compose(lin::tensor_permutation(f, {d, d, d}, {2, 1, 0}), q.tau);
  const auto lhs = compose(lin::kron_all({&I, &rev, &I}), q.tau);
  const auto base = compose(kron(q.tau, II), q.tau);

  // lhs[(a,b,c,e,g),h] = sum_c' theta[c,c'] base[(a,b,c',e,g),h]; one equation
  // per (a,b,e,g,h), unknowns theta[c,.] for each c.
  const lin::Dims five{d, d, d, d, d};
  auto key = [&](std::size_t flat, std::size_t h, std::size_t& mid) {
    auto ix = lin::unflatten(five, flat);
    mid = ix[2];
    return (lin::flatten(std::vector<std::size_t>{d, d, d, d},
                         std::vector<std::size_t>{ix[0], ix[1], ix[3], ix[4]})) *
               d +
           h;
  };
  std::vector<Triplet> n_entries, r_entries;
  for (const auto& t : base.triplets()) {
    std::size_t mid = 0;
    const auto k = key(t.row, t.col, mid);
    n_entries.push_back({k, mid, t.value});
  }
  for (const auto& t : lhs.triplets()) {
    std::size_t mid = 0;
    const auto k = key(t.row, t.col, mid);
    r_entries.push_back({k, mid, t.value});
  }
  const std::size_t rows = lin::ipow(d, 5);
  const auto n = Matrix::from_triplets(f, rows, d, std::move(n_entries));
  const auto r = Matrix::from_triplets(f, rows, d, std::move(r_entries));
  auto x = lin::solve(n, r);
  if (!x) return std::nullopt;
  return x->transpose();
}

VerificationReport check_para_associativity(const QuantumHeap& q, const Module& q1,
                                            const Module& q2, const Module& q3,
                                            const Module& q4, const Module& q5,
                                            const std::optional<Matrix>& given_theta) {
  alg::check_shapes(q);
  const Module* ms[] = {&q1, &q2, &q3, &q4, &q5};
  std::size_t total = 1;
  for (std::size_t i = 0; i < 5; ++i) {
    require_base(*ms[i], q.alg, "para-associativity factor");
    require_side(*ms[i], i % 2 == 0 ? Side::Left : Side::Right, "para-associativity factor");
    total *= ms[i]->dim;
  }
  if (total > kMaxParaDim)
    throw InputError("para-associativity: total dimension " + std::to_string(total) +
                     " exceeds " + std::to_string(kMaxParaDim));
  VerificationReport rep("para_associativity");
  const auto first = ternary_action_left(q, ternary_action_left(q, q1, q2, q3), q4, q5);
  const auto third = ternary_action_left(q, q1, q2, ternary_action_left(q, q3, q4, q5));
  const auto middle = ternary_action_left(q, q1, ternary_action_right(q, q2, q3, q4), q5);
  compare_families(rep, "outer", first, third);
  compare_families(rep, "middle", first, middle);

  const auto theta = given_theta ? given_theta : grunspan_map(q);
  if (!theta) {
    rep.fail("middle_twisted", {}, "no twisting map solves the middle identity");
    return rep;
  }
  const auto d = q.alg.dim;
  const QuantumHeap reversed{
      q.alg, compose(lin::tensor_permutation(q.alg.field, {d, d, d}, {2, 1, 0}), q.tau)};
  const auto q3_twisted = pullback(q3, q.alg, *theta);
  const auto first_t = ternary_action_left(q, ternary_action_left(q, q1, q2, q3_twisted), q4, q5);
  const auto middle_t =
      ternary_action_left(q, q1, ternary_action_right(reversed, q2, q3, q4), q5);
  compare_families(rep, "middle_twisted", first_t, middle_t);
  return rep;
}

Module tensor_product(const HopfAlgebra& h, const Module& q1, const Module& q2) {
  alg::check_shapes(h);
  require_base(q1, h.alg, "tensor factor");
  require_base(q2, h.alg, "tensor factor");
  require_side(q1, Side::Left, "tensor factor");
  require_side(q2, Side::Left, "tensor factor");
  const auto d = h.alg.dim;
  const auto cols = h.coalg.delta.transpose();
  Module out{Side::Left, h.alg, q1.dim * q2.dim, {}};
  for (std::size_t k = 0; k < d; ++k) {
    Matrix m(h.alg.field, out.dim, out.dim);
    for (const auto& [flat, coef] : cols.row(k))
      m = lin::add(m, lin::scale(kron(q1.actions[flat / d], q2.actions[flat % d]), coef));
    out.actions.push_back(std::move(m));
  }
  return out;
}

VerificationReport monoidal_from_heapy(const HopfAlgebra& h, const Module& q1,
                                       const Module& q2) {
  const auto qh = functors::qheap_from_hopf(h);
  const auto one = trivial_module(h.alg, Character{h.coalg.epsilon});
  const auto middle = dual_module(h, one, DualVariant::RightPlain);
  VerificationReport rep("monoidal_from_heapy");
  compare_families(rep, "delta_tensor", ternary_action_left(qh, q1, middle, q2),
                   tensor_product(h, q1, q2));
  return rep;
}

UnitProbe unit_probe(const HopfAlgebra& h, const Module& q) {
  const auto qh = functors::qheap_from_hopf(h);
  const auto one = trivial_module(h.alg, Character{h.coalg.epsilon});
  const auto qd = dual_module(h, q, DualVariant::RightPlain);
  const auto left = ternary_action_left(qh, one, qd, q);
  const auto right = ternary_action_left(qh, q, qd, one);
  UnitProbe p;
  p.left_dim = left.dim;
  p.right_dim = right.dim;
  p.left_vs_unit = modules_isomorphic(left, one);
  p.right_vs_unit = modules_isomorphic(right, one);
  p.left_vs_q = modules_isomorphic(left, q);
  p.right_vs_q = modules_isomorphic(right, q);
  return p;
}

}  // namespace heapforge::reps
