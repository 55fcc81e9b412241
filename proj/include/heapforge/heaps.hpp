#pragma once

// Finite groups and heaps as tables, and the translations between them.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "heapforge/report.hpp"

namespace heapforge::heaps {

using Element = std::size_t;
using Permutation = std::vector<Element>;

struct FiniteGroup {
  std::size_t n = 0;
  std::vector<std::vector<Element>> mul;
  Element identity = 0;
  std::vector<Element> inv;

  Element operator()(Element a, Element b) const { return mul[a][b]; }
  friend bool operator==(const FiniteGroup&, const FiniteGroup&) = default;
};

/// A set of n >= 1 elements with a ternary operation; table is row-major
/// over (a, b, c).
struct FiniteHeap {
  std::size_t n = 0;
  std::vector<Element> table;

  Element operator()(Element a, Element b, Element c) const {
    return table[(a * n + b) * n + c];
  }
  friend bool operator==(const FiniteHeap&, const FiniteHeap&) = default;
};

/// Builds a group from its multiplication table, deriving inverses.
/// Throws InputError when the table is malformed or not a group.
FiniteGroup make_group(std::vector<std::vector<Element>> mul, Element identity);
/// Associativity, two-sided unit and inverses. Throws InputError for
/// malformed tables (wrong sizes, entries out of range).
VerificationReport verify_group(const FiniteGroup& g);

FiniteHeap heap_from_group(const FiniteGroup& g);

/// Idempotence t(b,b,c) = c = t(c,b,b) and para-associativity at every
/// tuple. Throws InputError for malformed tables.
VerificationReport verify_heap(const FiniteHeap& h);

struct AutGroup {
  FiniteGroup group;
  /// witnesses[k] = first (a, b) in lexicographic order with maps[k] = t(., a, b)
  std::vector<std::pair<Element, Element>> witnesses;
  std::vector<Permutation> maps;
};

/// The translations x -> t(x, a, b), deduplicated. The product of maps[i]
/// and maps[j] applies maps[i] first: t(., c, d) . t(., a, b) = t(t(., c, d), a, b).
AutGroup aut_group(const FiniteHeap& h);

/// For all (a, b, a', b'): t(., a, b) = t(., a', b') iff t(a, a', b') = b
/// iff t(b, b', a') = a.
VerificationReport check_translation_equivalences(const FiniteHeap& h);
/// Each ordered pair (a, b) is joined by exactly one translation.
VerificationReport check_free_transitive(const FiniteHeap& h);

/// a * b = t(a, basepoint, b), with identity basepoint and inverse
/// t(basepoint, a, basepoint).
FiniteGroup group_from_pointed_heap(const FiniteHeap& h, Element basepoint);

/// All labeled group tables on {0..n-1}, by Latin-square backtracking.
std::vector<FiniteGroup> enumerate_group_tables(std::size_t n);
/// Every table on n <= 2 elements filtered by verify_heap.
std::vector<FiniteHeap> exhaustive_heap_scan(std::size_t n);
/// heap_from_group over enumerate_group_tables(n), deduplicated.
std::vector<FiniteHeap> heaps_from_group_tables(std::size_t n);
/// All heaps on {0..n-1} for 1 <= n <= 4, sorted by table.
std::vector<FiniteHeap> enumerate_heaps(std::size_t n);

std::vector<std::size_t> element_orders(const FiniteGroup& g);
/// A bijection phi with phi(a b) = phi(a) phi(b), if one exists. n <= 8.
std::optional<Permutation> groups_isomorphic(const FiniteGroup& a, const FiniteGroup& b);

/// Throws InputError naming the first failed law.
void require_valid(const FiniteHeap& h);
void require_valid(const FiniteGroup& g);

}  // namespace heapforge::heaps
