#pragma once

// Hopf algebras <-> copointed quantum heaps, on the same underlying algebra.

#include "heapforge/algcore.hpp"

namespace heapforge::functors {

using alg::Character;
using alg::HopfAlgebra;
using alg::QuantumHeap;

struct CopointedQuantumHeap {
  QuantumHeap heap;
  Character eps;
};

/// (id (x) S (x) id) o (delta (x) id) o delta, built through (delta (x) id)
/// and (id (x) delta) separately.
struct TauPipelines {
  lin::Matrix via_left;
  lin::Matrix via_right;
};
TauPipelines tau_pipelines(const HopfAlgebra& h);

/// tau(h) = h_(1) (x) S h_(2) (x) h_(3). Throws InputError unless h is a
/// Hopf algebra and both pipelines agree.
QuantumHeap qheap_from_hopf(const HopfAlgebra& h);

/// delta = (id (x) eps (x) id) tau, antipode = (eps (x) id (x) eps) tau.
/// Throws InputError when the heap or the character fails verification.
HopfAlgebra hopf_from_copointed_qheap(const CopointedQuantumHeap& c);

CopointedQuantumHeap forget_to_copointed(const HopfAlgebra& h);

/// Hopf -> quantum heap -> Hopf, compared entry for entry.
VerificationReport roundtrip_check(const HopfAlgebra& start);
/// Quantum heap -> Hopf -> quantum heap, comparing tau.
VerificationReport roundtrip_check(const CopointedQuantumHeap& start);

}  // namespace heapforge::functors
