#pragma once

// JSON structure files, schema "heapforge/1".
//
// Sparse entries, scalars as strings ("3", "-1/2"):
//   mu       [i, j, k, s]     e_i e_j contains s e_k
//   unit     [i, s]
//   delta    [i, j, h, s]     delta(e_h) contains s e_i (x) e_j
//   epsilon  [i, s]
//   antipode [i, j, s]        S(e_j) contains s e_i
//   tau      [a, b, c, h, s]  tau(e_h) contains s e_a (x) e_b (x) e_c
//   actions  one list of [row, col, s] per basis element
// Groups carry "n", "identity", "mul" and optionally "inv"; heaps carry "n"
// and "t" as an n x n x n nested array. Modules embed their algebra as
// "base" {"dim", "mu", "unit"}. A qheap may carry a "character" section.

#include <optional>
#include <string>
#include <variant>

#include "heapforge/algcore.hpp"
#include "heapforge/heaps.hpp"
#include "heapforge/reps.hpp"

namespace heapforge::io {

inline constexpr const char* kSchema = "heapforge/1";

using Structure = std::variant<heaps::FiniteGroup, heaps::FiniteHeap, alg::Algebra,
                               alg::HopfAlgebra, alg::QuantumHeap, reps::Module>;

struct Document {
  Structure value;
  std::optional<alg::Character> character;  // "qheap" only

  friend bool operator==(const Document&, const Document&) = default;
};

/// "group", "heap", "algebra", "hopf", "qheap" or "module".
std::string kind_name(const Structure& s);

/// Throws InputError naming the section and entry index on schema errors.
Document parse_document(const std::string& text);
Document load_document(const std::string& path);

/// Canonical text: fixed key order, one entry per line, entries sorted,
/// scalars in lowest terms, trailing newline.
std::string serialize(const Document& doc);
std::string serialize(const Structure& s);

/// Writes through a temporary file in the same directory and renames it.
void write_atomic(const std::string& path, const std::string& text);

/// Character entries given as text, e.g. "[[0,\"1\"],[1,\"1\"]]".
alg::Character parse_character(const std::string& json_entries, const alg::Algebra& a);

}  // namespace heapforge::io
