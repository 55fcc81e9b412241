#pragma once

// Built-in structures used as fixtures and by the `zoo` command.

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "heapforge/algcore.hpp"
#include "heapforge/heaps.hpp"

namespace heapforge::zoo {

using alg::HopfAlgebra;
using alg::QuantumHeap;
using heaps::FiniteGroup;
using lin::FieldSpec;
using lin::Scalar;

using Params = std::map<std::string, std::string>;

FiniteGroup cyclic(std::size_t n);
FiniteGroup klein4();
/// Order 2n; element r^i s^j has index i + n j.
FiniteGroup dihedral(std::size_t n);
/// Permutations of {0..n-1} in lexicographic order, (ab)(x) = a(b(x)).
FiniteGroup sym(std::size_t n);
/// "cyclic", "klein4", "dihedral", "sym", with parameter "n" where needed.
FiniteGroup builtin_group(const std::string& name, const Params& params = {});
/// Every built-in group of order <= max_order, named like "dihedral:3".
std::vector<std::pair<std::string, FiniteGroup>> builtin_groups(std::size_t max_order);
/// Parses "cyclic:4", "klein4", "dihedral:3", "sym:3".
FiniteGroup group_from_spec(const std::string& spec);

/// Basis = group elements; delta g = g (x) g, eps g = 1, S g = g^-1.
HopfAlgebra group_algebra(const FiniteGroup& g, FieldSpec f);
/// Basis = indicator functions; pointwise product.
HopfAlgebra function_hopf(const FiniteGroup& g, FieldSpec f);
/// Basis {1, g, x, gx}: g^2 = 1, x^2 = 0, xg = -gx. Characteristic != 2.
HopfAlgebra sweedler_hopf(FieldSpec f);
/// Basis g^i x^j at index i + n j: g^n = 1, x^n = 0, xg = q gx,
/// delta x = x (x) 1 + g (x) x. q must have order exactly n in F_p; n^2 <= 25.
HopfAlgebra taft_hopf(std::size_t n, FieldSpec f, const Scalar& q);

/// The function-algebra heap of g twice, with phi(delta_h) = delta_{a h}.
struct TranslationMorphism {
  QuantumHeap src;
  QuantumHeap dst;
  lin::Matrix phi;
};
TranslationMorphism left_translation_morphism(const FiniteGroup& g, heaps::Element a,
                                              FieldSpec f);

using Structure = std::variant<FiniteGroup, HopfAlgebra, QuantumHeap>;

struct ZooEntry {
  std::string name;
  Params params;
  Structure structure;
};

/// Builds a named entry and runs its verifier; names are "cyclic", "klein4",
/// "dihedral", "sym", "group-algebra", "function-hopf", "sweedler", "taft",
/// "qheap-group-algebra", "qheap-function-hopf", "qheap-sweedler",
/// "qheap-taft". Field: param "p" (absent means Q). Group-based entries take
/// param "group" ("cyclic:3", ...).
ZooEntry make_entry(const std::string& name, const Params& params);

/// A labeled Hopf fixture.
struct HopfFixture {
  std::string name;
  HopfAlgebra hopf;
};
/// group_algebra(G) for the zoo groups of order <= 6, function_hopf(G) for
/// order <= 4, sweedler over Q, taft(3, F_7, 2); all over Q except taft.
std::vector<HopfFixture> hopf_fleet();
/// The same families over F_7 where defined.
std::vector<HopfFixture> hopf_fleet_f7();

}  // namespace heapforge::zoo
