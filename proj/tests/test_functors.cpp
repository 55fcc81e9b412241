#include "doctest.h"
#include "heapforge/functors.hpp"
#include "heapforge/zoo.hpp"

using namespace heapforge;
using namespace heapforge::functors;
using lin::Matrix;
using lin::Scalar;

namespace {
const lin::FieldSpec Q = lin::FieldSpec::rationals();
}

TEST_CASE("both tau pipelines agree and give quantum heaps") {
  auto fleet = zoo::hopf_fleet();
  for (auto& fx : zoo::hopf_fleet_f7()) fleet.push_back(fx);
  for (const auto& fx : fleet) {
    INFO(fx.name);
    const auto p = tau_pipelines(fx.hopf);
    CHECK(p.via_left == p.via_right);
    CHECK(alg::verify_quantum_heap(qheap_from_hopf(fx.hopf)).passed());
  }
}

TEST_CASE("group-likes go to g (x) g^-1 (x) g") {
  const auto g = zoo::sym(3);
  const auto q = qheap_from_hopf(zoo::group_algebra(g, Q));
  for (std::size_t a = 0; a < g.n; ++a) {
    const auto col = lin::compose(q.tau, alg::basis_vector(Q, 6, a));
    CHECK(col == alg::basis_vector(Q, 216, (a * 6 + g.inv[a]) * 6 + a));
  }
}

TEST_CASE("round trips in both directions") {
  auto fleet = zoo::hopf_fleet();
  for (auto& fx : zoo::hopf_fleet_f7()) fleet.push_back(fx);
  for (const auto& fx : fleet) {
    INFO(fx.name);
    CHECK(roundtrip_check(fx.hopf).passed());
    CHECK(roundtrip_check(forget_to_copointed(fx.hopf)).passed());
    CHECK(hopf_from_copointed_qheap(forget_to_copointed(fx.hopf)) == fx.hopf);
  }
}

TEST_CASE("reconstruction depends on the character") {
  // Z/3 function algebra: translating the counit to another point gives a
  // Hopf algebra with identity element moved.
  const auto g = zoo::cyclic(3);
  const auto q = qheap_from_hopf(zoo::function_hopf(g, Q));
  const alg::Character at1{Matrix::from_triplets(Q, 1, 3, {{0, 1, Scalar::one(Q)}})};
  const auto h = hopf_from_copointed_qheap({q, at1});
  CHECK(alg::verify_hopf(h).passed());
  CHECK(!(h == zoo::function_hopf(g, Q)));
  CHECK(roundtrip_check(CopointedQuantumHeap{q, at1}).passed());
}

TEST_CASE("bad inputs are rejected") {
  auto h = zoo::sweedler_hopf(Q);
  h.antipode = Matrix::identity(Q, 4);
  CHECK_THROWS_AS(qheap_from_hopf(h), InputError);
  CHECK_THROWS_AS(roundtrip_check(h), InputError);
  const auto q = qheap_from_hopf(zoo::sweedler_hopf(Q));
  const alg::Character zero{Matrix(Q, 1, 4)};
  CHECK_THROWS_AS(hopf_from_copointed_qheap({q, zero}), InputError);
}
