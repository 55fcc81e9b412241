#pragma once

// Terms of the PRO generated by t : 1 -> 3, e : 0 -> 1, d : 2 -> 1.
//
// Concrete syntax:
//   term := seq
//   seq  := sum (";" sum)*      left to right composition, left applied first
//   sum  := atom ("+" atom)*    tensor sum
//   atom := "t" | "e" | "d" | "id" NAT | "(" term ")"

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "heapforge/algcore.hpp"
#include "heapforge/heaps.hpp"

namespace heapforge::pro {

using alg::QuantumHeap;
using heaps::FiniteHeap;
using lin::Matrix;

class ParseError : public InputError {
 public:
  ParseError(std::size_t position, const std::string& what);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class ArityError : public InputError {
 public:
  ArityError(std::size_t target, std::size_t source);
  std::size_t target() const { return target_; }
  std::size_t source() const { return source_; }

 private:
  std::size_t target_;
  std::size_t source_;
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { Gen, Id, Tensor, Compose };
  Kind kind;
  char gen = 0;       // 't', 'e' or 'd' for Gen
  std::size_t n = 0;  // arity for Id
  TermPtr left;       // Tensor: left summand; Compose: applied first
  TermPtr right;
  std::size_t source = 0;
  std::size_t target = 0;
};

TermPtr generator(char g);
TermPtr identity(std::size_t n);
TermPtr tensor(TermPtr a, TermPtr b);
/// a first, then b. Throws ArityError unless a.target == b.source.
TermPtr then(TermPtr a, TermPtr b);

TermPtr parse_term(const std::string& src);
/// Fully parenthesized; parse_term inverts it.
std::string to_string(const TermPtr& t);
std::size_t size(const TermPtr& t);
bool same_term(const TermPtr& a, const TermPtr& b);

/// d^target x d^source: t -> tau, e -> unit, d -> mu, sums -> kron,
/// f ; g -> eval(g) eval(f).
Matrix eval_vect(const TermPtr& t, const QuantumHeap& q);

/// A map H^in -> H^out as a table indexed by the flattened input tuple.
struct SetMap {
  std::size_t n = 0;
  std::size_t in = 0;
  std::size_t out = 0;
  std::vector<std::vector<heaps::Element>> table;

  friend bool operator==(const SetMap&, const SetMap&) = default;
};

/// Opposite reading: a term m -> n gives H^n -> H^m; t is the heap
/// operation, d the diagonal, e the map to the one-point set, and f ; g is
/// the map of f after the map of g. Tables above 10^6 entries are refused.
SetMap eval_set(const TermPtr& t, const FiniteHeap& h);

/// The 0/1 matrix with a one at (F(x), x), of shape n^out x n^in.
Matrix graph_matrix(const SetMap& m, lin::FieldSpec f);

struct Relation {
  std::string id;
  std::string lhs;
  std::string rhs;
};
/// The seven defining relations.
const std::vector<Relation>& relations();

VerificationReport check_pro_relations(const QuantumHeap& q);
VerificationReport check_pro_relations(const FiniteHeap& h);

/// A well-typed term with the given source, at most max_size nodes and all
/// intermediate arities <= max_arity.
TermPtr random_term(std::mt19937_64& rng, std::size_t source, std::size_t max_size,
                    std::size_t max_arity);

}  // namespace heapforge::pro
