#pragma once

// Fixture fleets shared by the unit tests and the acceptance binary.

#include <string>
#include <vector>

#include "heapforge/functors.hpp"
#include "heapforge/reps.hpp"
#include "heapforge/zoo.hpp"

namespace fixtures {

using heapforge::alg::Character;
using heapforge::alg::HopfAlgebra;
using heapforge::alg::QuantumHeap;
using heapforge::lin::Matrix;
using heapforge::lin::Scalar;
using heapforge::reps::Module;
using heapforge::reps::Side;

inline Scalar power(const Scalar& x, std::size_t k) {
  Scalar r = Scalar::one(x.field());
  for (std::size_t i = 0; i < k; ++i) r = r * x;
  return r;
}

/// For the algebras on g^i x^j (index i + n j) with xg = q gx: the module
/// with basis x^j v, g v = lambda v, of dimension n.
inline Module pointed_module(const HopfAlgebra& h, std::size_t n, const Scalar& q,
                             const Scalar& lambda) {
  const auto f = h.alg.field;
  const auto q_inv = q.inverse();
  std::vector<heapforge::lin::Triplet> gt, xt;
  for (std::size_t j = 0; j < n; ++j) {
    gt.push_back({j, j, power(q_inv, j) * lambda});
    if (j + 1 < n) xt.push_back({j + 1, j, Scalar::one(f)});
  }
  const auto G = Matrix::from_triplets(f, n, n, gt);
  const auto X = Matrix::from_triplets(f, n, n, xt);
  Module m{Side::Left, h.alg, n, {}};
  for (std::size_t k = 0; k < n * n; ++k) {
    Matrix a = Matrix::identity(f, n);
    for (std::size_t r = 0; r < k % n; ++r) a = heapforge::lin::compose(a, G);
    for (std::size_t r = 0; r < k / n; ++r) a = heapforge::lin::compose(a, X);
    m.actions.push_back(a);
  }
  return m;
}

inline Module trivial(const HopfAlgebra& h) {
  return heapforge::reps::trivial_module(h.alg, Character{h.coalg.epsilon});
}

/// Left modules for a fleet entry: the trivial module and one more.
inline std::vector<Module> left_modules(const heapforge::zoo::HopfFixture& fx) {
  const auto& h = fx.hopf;
  const auto f = h.alg.field;
  std::vector<Module> out{trivial(h)};
  if (fx.name.rfind("sweedler", 0) == 0)
    out.push_back(pointed_module(h, 2, -Scalar::one(f), Scalar::one(f)));
  else if (fx.name.rfind("taft(3", 0) == 0)
    out.push_back(pointed_module(h, 3, Scalar(f, 2), Scalar::one(f)));
  else if (fx.name.rfind("taft(2", 0) == 0)
    out.push_back(pointed_module(h, 2, Scalar(f, 6), Scalar::one(f)));
  else if (h.alg.dim > 1 && h.alg.dim <= 6)
    out.push_back(heapforge::reps::regular_module(h.alg));
  return out;
}

inline std::vector<Module> right_modules(const heapforge::zoo::HopfFixture& fx) {
  std::vector<Module> out;
  for (const auto& m : left_modules(fx))
    out.push_back(heapforge::reps::dual_module(fx.hopf, m, heapforge::reps::DualVariant::RightPlain));
  return out;
}

/// Functionals tried against each fixture heap: the counit and a few that
/// are not characters.
inline std::vector<Character> candidate_functionals(const HopfAlgebra& h) {
  const auto f = h.alg.field;
  const auto d = h.alg.dim;
  const auto& eps = h.coalg.epsilon;
  std::vector<Character> out{Character{eps},
                             Character{heapforge::lin::scale(eps, -Scalar::one(f))},
                             Character{heapforge::lin::scale(eps, Scalar(f, 2))},
                             Character{Matrix(f, 1, d)}};
  for (std::size_t i = 0; i < d; ++i)
    out.push_back(Character{Matrix::from_triplets(f, 1, d, {{0, i, Scalar::one(f)}})});
  return out;
}

}  // namespace fixtures
