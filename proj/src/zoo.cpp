#include "heapforge/zoo.hpp"

#include <algorithm>
#include <numeric>

#include "heapforge/functors.hpp"

namespace heapforge::zoo {

using heaps::Element;
using lin::compose;
using lin::kron;
using lin::Matrix;
using lin::Triplet;

namespace {

std::size_t param_size(const Params& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw InputError("missing parameter '" + key + "'");
  try {
    std::size_t pos = 0;
    const auto v = std::stoul(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw InputError("parameter '" + key + "' is not a count: " + it->second);
  }
}

FieldSpec field_param(const Params& p) {
  auto it = p.find("p");
  if (it == p.end() || it->second == "Q") return FieldSpec::rationals();
  return FieldSpec::prime(param_size(p, "p"));
}

// Matrix whose column j is cols[j].
Matrix from_columns(FieldSpec f, std::size_t rows, const std::vector<Matrix>& cols) {
  std::vector<Triplet> t;
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& e : cols[j].triplets()) t.push_back({e.row, j, e.value});
  return Matrix::from_triplets(f, rows, cols.size(), std::move(t));
}

template <class T>
T verified(T s) {
  VerificationReport rep("zoo");
  if constexpr (std::is_same_v<T, HopfAlgebra>)
    rep = alg::verify_hopf(s);
  else if constexpr (std::is_same_v<T, QuantumHeap>)
    rep = alg::verify_quantum_heap(s);
  else
    rep = heaps::verify_group(s);
  if (!rep.passed())
    throw std::logic_error("zoo entry fails its verifier: " + rep.failures().front());
  return s;
}

// Pointed Hopf algebra on g^i x^j with x g = q g x; Sweedler and Taft share it.
HopfAlgebra pointed_hopf(std::size_t n, FieldSpec f, const Scalar& q) {
  const std::size_t d = n * n;
  auto idx = [n](std::size_t i, std::size_t j) { return (i % n) + n * j; };
  std::vector<Scalar> qpow{Scalar::one(f)};
  for (std::size_t k = 1; k < n * n; ++k) qpow.push_back(qpow.back() * q);

  std::vector<Triplet> mu;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t e = 0; e < n; ++e) {
          if (b + e >= n) continue;
          // x^b g^c = q^{bc} g^c x^b
          mu.push_back({idx(a + c, b + e), idx(a, b) * d + idx(c, e), qpow[(b * c) % n]});
        }
  alg::Algebra A{f, d, Matrix::from_triplets(f, d, d * d, std::move(mu)),
                 alg::basis_vector(f, d, 0)};
  const auto AA = alg::tensor_product_algebra({A, A}, {false, false});
  auto prod = [](const alg::Algebra& B, const Matrix& u, const Matrix& v) {
    return compose(B.mu, kron(u, v));
  };

  const auto one = alg::basis_vector(f, d, idx(0, 0));
  const auto g = alg::basis_vector(f, d, idx(1, 0));
  const auto x = alg::basis_vector(f, d, idx(0, 1));
  const auto g_inv = alg::basis_vector(f, d, idx(n - 1, 0));
  const auto dg = kron(g, g);
  const auto dx = lin::add(kron(x, one), kron(g, x));
  const auto sg = g_inv;
  const auto sx = lin::scale(prod(A, g_inv, x), -Scalar::one(f));

  std::vector<Matrix> delta_cols, s_cols;
  std::vector<Triplet> eps;
  for (std::size_t k = 0; k < d; ++k) {
    const std::size_t i = k % n, j = k / n;
    Matrix dk = kron(one, one);
    Matrix sk = one;
    for (std::size_t r = 0; r < i; ++r) dk = prod(AA, dk, dg);
    for (std::size_t r = 0; r < j; ++r) dk = prod(AA, dk, dx);
    // S is an anti-homomorphism: S(g^i x^j) = S(x)^j S(g)^i.
    for (std::size_t r = 0; r < j; ++r) sk = prod(A, sk, sx);
    for (std::size_t r = 0; r < i; ++r) sk = prod(A, sk, sg);
    delta_cols.push_back(std::move(dk));
    s_cols.push_back(std::move(sk));
    if (j == 0) eps.push_back({0, k, Scalar::one(f)});
  }
  HopfAlgebra h{A,
                alg::Coalgebra{from_columns(f, d * d, delta_cols),
                               Matrix::from_triplets(f, 1, d, std::move(eps))},
                from_columns(f, d, s_cols)};
  return h;
}

}  // namespace

FiniteGroup cyclic(std::size_t n) {
  if (n == 0 || n > 12) throw InputError("cyclic(n) needs 1 <= n <= 12");
  std::vector<std::vector<Element>> mul(n, std::vector<Element>(n));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
  return heaps::make_group(std::move(mul), 0);
}

FiniteGroup klein4() {
  std::vector<std::vector<Element>> mul(4, std::vector<Element>(4));
  for (Element a = 0; a < 4; ++a)
    for (Element b = 0; b < 4; ++b) mul[a][b] = a ^ b;
  return heaps::make_group(std::move(mul), 0);
}

FiniteGroup dihedral(std::size_t n) {
  if (n == 0 || n > 6) throw InputError("dihedral(n) needs 1 <= n <= 6");
  const std::size_t order = 2 * n;
  std::vector<std::vector<Element>> mul(order, std::vector<Element>(order));
  for (Element a = 0; a < order; ++a)
    for (Element b = 0; b < order; ++b) {
      const std::size_t i = a % n, j = a / n, k = b % n, l = b / n;
      // r^i s^j r^k s^l = r^{i +- k} s^{j + l}
      const std::size_t rot = j == 0 ? (i + k) % n : (i + n - k) % n;
      mul[a][b] = rot + n * ((j + l) % 2);
    }
  return heaps::make_group(std::move(mul), 0);
}

FiniteGroup sym(std::size_t n) {
  if (n == 0 || n > 4) throw InputError("sym(n) needs 1 <= n <= 4");
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t order = perms.size();
  std::vector<std::vector<Element>> mul(order, std::vector<Element>(order));
  for (Element a = 0; a < order; ++a)
    for (Element b = 0; b < order; ++b) {
      std::vector<std::size_t> c(n);
      for (std::size_t x = 0; x < n; ++x) c[x] = perms[a][perms[b][x]];
      mul[a][b] = static_cast<Element>(
          std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return heaps::make_group(std::move(mul), 0);
}

FiniteGroup builtin_group(const std::string& name, const Params& params) {
  if (name == "cyclic") return cyclic(param_size(params, "n"));
  if (name == "klein4") return klein4();
  if (name == "dihedral") return dihedral(param_size(params, "n"));
  if (name == "sym") return sym(param_size(params, "n"));
  throw InputError("unknown group '" + name + "'");
}

std::vector<std::pair<std::string, FiniteGroup>> builtin_groups(std::size_t max_order) {
  std::vector<std::pair<std::string, FiniteGroup>> out;
  for (std::size_t n = 1; n <= std::min<std::size_t>(max_order, 12); ++n)
    out.push_back({"cyclic:" + std::to_string(n), cyclic(n)});
  if (max_order >= 4) out.push_back({"klein4", klein4()});
  for (std::size_t n = 1; n <= 6 && 2 * n <= max_order; ++n)
    out.push_back({"dihedral:" + std::to_string(n), dihedral(n)});
  const std::size_t factorial[] = {1, 1, 2, 6, 24};
  for (std::size_t n = 1; n <= 4 && factorial[n] <= max_order; ++n)
    out.push_back({"sym:" + std::to_string(n), sym(n)});
  return out;
}

FiniteGroup group_from_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) return builtin_group(spec);
  return builtin_group(spec.substr(0, colon), {{"n", spec.substr(colon + 1)}});
}

HopfAlgebra group_algebra(const FiniteGroup& g, FieldSpec f) {
  heaps::require_valid(g);
  const std::size_t d = g.n;
  const auto one = Scalar::one(f);
  std::vector<Triplet> mu, delta, eps, s;
  for (Element a = 0; a < d; ++a) {
    for (Element b = 0; b < d; ++b) mu.push_back({g(a, b), a * d + b, one});
    delta.push_back({a * d + a, a, one});
    eps.push_back({0, a, one});
    s.push_back({g.inv[a], a, one});
  }
  return verified(HopfAlgebra{
      alg::Algebra{f, d, Matrix::from_triplets(f, d, d * d, std::move(mu)),
                   alg::basis_vector(f, d, g.identity)},
      alg::Coalgebra{Matrix::from_triplets(f, d * d, d, std::move(delta)),
                     Matrix::from_triplets(f, 1, d, std::move(eps))},
      Matrix::from_triplets(f, d, d, std::move(s))});
}

HopfAlgebra function_hopf(const FiniteGroup& g, FieldSpec f) {
  heaps::require_valid(g);
  const std::size_t d = g.n;
  const auto one = Scalar::one(f);
  std::vector<Triplet> mu, unit, delta, s;
  for (Element a = 0; a < d; ++a) {
    mu.push_back({a, a * d + a, one});
    unit.push_back({a, 0, one});
    for (Element b = 0; b < d; ++b) delta.push_back({a * d + b, g(a, b), one});
    s.push_back({g.inv[a], a, one});
  }
  return verified(HopfAlgebra{
      alg::Algebra{f, d, Matrix::from_triplets(f, d, d * d, std::move(mu)),
                   Matrix::from_triplets(f, d, 1, std::move(unit))},
      alg::Coalgebra{Matrix::from_triplets(f, d * d, d, std::move(delta)),
                     Matrix::from_triplets(f, 1, d, {{0, g.identity, one}})},
      Matrix::from_triplets(f, d, d, std::move(s))});
}

HopfAlgebra sweedler_hopf(FieldSpec f) {
  if (f.characteristic() == 2) throw InputError("Sweedler's algebra needs characteristic != 2");
  return verified(pointed_hopf(2, f, -Scalar::one(f)));
}

HopfAlgebra taft_hopf(std::size_t n, FieldSpec f, const Scalar& q) {
  if (f.is_rational()) throw InputError("Taft algebras are built over prime fields");
  if (!(q.field() == f)) throw InputError("q is not in the algebra's field");
  if (n < 2 || n * n > 25) throw InputError("taft_hopf needs 2 <= n and n^2 <= 25");
  if (q.multiplicative_order() != n)
    throw InputError("q = " + q.to_string() + " does not have multiplicative order " +
                     std::to_string(n) + " in " + f.describe());
  return verified(pointed_hopf(n, f, q));
}

TranslationMorphism left_translation_morphism(const FiniteGroup& g, Element a, FieldSpec f) {
  if (a >= g.n) throw InputError("element out of range");
  auto q = functors::qheap_from_hopf(function_hopf(g, f));
  std::vector<Triplet> phi;
  for (Element h = 0; h < g.n; ++h) phi.push_back({g(a, h), h, Scalar::one(f)});
  return TranslationMorphism{q, q, Matrix::from_triplets(f, g.n, g.n, std::move(phi))};
}

ZooEntry make_entry(const std::string& name, const Params& params) {
  ZooEntry e{name, params, FiniteGroup{}};
  if (name == "cyclic" || name == "klein4" || name == "dihedral" || name == "sym") {
    e.structure = builtin_group(name, params);
    return e;
  }
  const auto f = field_param(params);
  auto group = [&] {
    auto it = params.find("group");
    if (it == params.end()) throw InputError("missing parameter 'group'");
    return group_from_spec(it->second);
  };
  auto hopf = [&](const std::string& base) -> HopfAlgebra {
    if (base == "group-algebra") return group_algebra(group(), f);
    if (base == "function-hopf") return function_hopf(group(), f);
    if (base == "sweedler") return sweedler_hopf(f);
    if (base == "taft") {
      auto it = params.find("q");
      if (it == params.end()) throw InputError("missing parameter 'q'");
      return taft_hopf(param_size(params, "n"), f, Scalar::parse(f, it->second));
    }
    throw InputError("unknown zoo entry '" + name + "'");
  };
  const std::string prefix = "qheap-";
  if (name.rfind(prefix, 0) == 0)
    e.structure = verified(functors::qheap_from_hopf(hopf(name.substr(prefix.size()))));
  else
    e.structure = hopf(name);
  return e;
}

std::vector<HopfFixture> hopf_fleet() {
  const auto Q = FieldSpec::rationals();
  std::vector<HopfFixture> out;
  for (std::size_t n = 1; n <= 6; ++n)
    out.push_back({"group_algebra(cyclic(" + std::to_string(n) + "))", group_algebra(cyclic(n), Q)});
  out.push_back({"group_algebra(klein4)", group_algebra(klein4(), Q)});
  out.push_back({"group_algebra(sym(3))", group_algebra(sym(3), Q)});
  for (std::size_t n = 1; n <= 4; ++n)
    out.push_back({"function_hopf(cyclic(" + std::to_string(n) + "))", function_hopf(cyclic(n), Q)});
  out.push_back({"function_hopf(klein4)", function_hopf(klein4(), Q)});
  out.push_back({"sweedler", sweedler_hopf(Q)});
  const auto F7 = FieldSpec::prime(7);
  out.push_back({"taft(3,F7,2)", taft_hopf(3, F7, Scalar(F7, 2))});
  return out;
}

std::vector<HopfFixture> hopf_fleet_f7() {
  const auto F7 = FieldSpec::prime(7);
  std::vector<HopfFixture> out;
  out.push_back({"group_algebra(cyclic(3))/F7", group_algebra(cyclic(3), F7)});
  out.push_back({"group_algebra(sym(3))/F7", group_algebra(sym(3), F7)});
  out.push_back({"function_hopf(cyclic(4))/F7", function_hopf(cyclic(4), F7)});
  out.push_back({"function_hopf(klein4)/F7", function_hopf(klein4(), F7)});
  out.push_back({"sweedler/F7", sweedler_hopf(F7)});
  out.push_back({"taft(2,F7,6)", taft_hopf(2, F7, Scalar(F7, 6))});
  return out;
}

}  // namespace heapforge::zoo
