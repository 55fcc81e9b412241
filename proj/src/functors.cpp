#include "heapforge/functors.hpp"

namespace heapforge::functors {

using lin::compose;
using lin::kron;
using lin::kron_all;
using lin::Matrix;

TauPipelines tau_pipelines(const HopfAlgebra& h) {
  alg::check_shapes(h);
  const auto I = Matrix::identity(h.alg.field, h.alg.dim);
  const auto& delta = h.coalg.delta;
  const auto middle = kron_all({&I, &h.antipode, &I});
  return TauPipelines{compose(middle, compose(kron(delta, I), delta)),
                      compose(middle, compose(kron(I, delta), delta))};
}

QuantumHeap qheap_from_hopf(const HopfAlgebra& h) {
  const auto rep = alg::verify_hopf(h);
  if (!rep.passed()) throw InputError("not a Hopf algebra: fails " + rep.failures().front());
  auto [left, right] = tau_pipelines(h);
  if (!(left == right)) throw InputError("tau pipelines disagree");
  return QuantumHeap{h.alg, std::move(left)};
}

HopfAlgebra hopf_from_copointed_qheap(const CopointedQuantumHeap& c) {
  const auto& q = c.heap;
  const auto qrep = alg::verify_quantum_heap(q);
  if (!qrep.passed())
    throw InputError("not a quantum heap: fails " + qrep.failures().front());
  const auto crep = alg::verify_character(q.alg, c.eps);
  if (!crep.passed())
    throw InputError("not a character: fails " + crep.failures().front());
  const auto I = Matrix::identity(q.alg.field, q.alg.dim);
  const auto& e = c.eps.eps;
  auto delta = compose(kron_all({&I, &e, &I}), q.tau);
  auto antipode = compose(kron_all({&e, &I, &e}), q.tau);
  return HopfAlgebra{q.alg, alg::Coalgebra{std::move(delta), e}, std::move(antipode)};
}

CopointedQuantumHeap forget_to_copointed(const HopfAlgebra& h) {
  return CopointedQuantumHeap{qheap_from_hopf(h), Character{h.coalg.epsilon}};
}

VerificationReport roundtrip_check(const HopfAlgebra& start) {
  const auto rep_in = alg::verify_hopf(start);
  if (!rep_in.passed())
    throw InputError("roundtrip input is not a Hopf algebra: fails " + rep_in.failures().front());
  const auto back = hopf_from_copointed_qheap(forget_to_copointed(start));
  VerificationReport rep("hopf_roundtrip");
  rep.expect_equal("mu", back.alg.mu, start.alg.mu);
  rep.expect_equal("unit", back.alg.unit, start.alg.unit);
  rep.expect_equal("delta", back.coalg.delta, start.coalg.delta);
  rep.expect_equal("epsilon", back.coalg.epsilon, start.coalg.epsilon);
  rep.expect_equal("antipode", back.antipode, start.antipode);
  return rep;
}

VerificationReport roundtrip_check(const CopointedQuantumHeap& start) {
  const auto back = qheap_from_hopf(hopf_from_copointed_qheap(start));
  VerificationReport rep("qheap_roundtrip");
  rep.expect_equal("mu", back.alg.mu, start.heap.alg.mu);
  rep.expect_equal("unit", back.alg.unit, start.heap.alg.unit);
  rep.expect_equal("tau", back.tau, start.heap.tau);
  return rep;
}

}  // namespace heapforge::functors
