#include <algorithm>
#include <set>

#include "doctest.h"
#include "heapforge/heaps.hpp"
#include "heapforge/zoo.hpp"

using namespace heapforge;
using namespace heapforge::heaps;

namespace {

std::size_t center_size(const FiniteGroup& g) {
  std::size_t c = 0;
  for (Element a = 0; a < g.n; ++a) {
    bool central = true;
    for (Element b = 0; b < g.n; ++b) central = central && g(a, b) == g(b, a);
    c += central;
  }
  return c;
}

bool is_isomorphism(const FiniteGroup& a, const FiniteGroup& b, const Permutation& phi) {
  std::set<Element> image(phi.begin(), phi.end());
  if (image.size() != a.n) return false;
  for (Element x = 0; x < a.n; ++x)
    for (Element y = 0; y < a.n; ++y)
      if (phi[a(x, y)] != b(phi[x], phi[y])) return false;
  return true;
}

}  // namespace

TEST_CASE("heap of Z/3 is a - b + c") {
  const auto h = heap_from_group(zoo::cyclic(3));
  for (Element a = 0; a < 3; ++a)
    for (Element b = 0; b < 3; ++b)
      for (Element c = 0; c < 3; ++c) CHECK(h(a, b, c) == (a + 3 - b + c) % 3);
  CHECK(verify_heap(h).passed());
}

TEST_CASE("broken heap tables are caught with witnesses") {
  auto h = heap_from_group(zoo::cyclic(3));
  h.table[(1 * 3 + 1) * 3 + 2] = 0;  // t(1,1,2) should be 2
  const auto rep = verify_heap(h);
  CHECK(!rep.passed());
  const auto* line = rep.find("left_idempotence");
  REQUIRE(line);
  CHECK(!line->passed);
  REQUIRE(line->witness);
  CHECK(*line->witness == std::vector<long long>{1, 1, 2});
  CHECK_THROWS_AS(verify_heap(FiniteHeap{2, {0, 1}}), InputError);
}

TEST_CASE("group tables validate") {
  CHECK_THROWS_AS(make_group({{0, 1}, {1, 1}}, 0), InputError);
  CHECK_THROWS_AS(make_group({{0, 1}, {1, 0}}, 2), InputError);
  for (const auto& [name, g] : zoo::builtin_groups(8)) {
    INFO(name);
    CHECK(verify_group(g).passed());
  }
}

TEST_CASE("zoo group invariants") {
  CHECK(center_size(zoo::dihedral(4)) == 2);
  CHECK(center_size(zoo::dihedral(3)) == 1);
  CHECK(center_size(zoo::sym(3)) == 1);
  CHECK(center_size(zoo::klein4()) == 4);
  CHECK(element_orders(zoo::cyclic(6)) == std::vector<std::size_t>{1, 6, 3, 2, 3, 6});
  const auto orders = element_orders(zoo::sym(3));
  CHECK(std::count(orders.begin(), orders.end(), 2) == 3);
  CHECK(std::count(orders.begin(), orders.end(), 3) == 2);
}

TEST_CASE("translations, free transitivity and recovery") {
  for (const auto& [name, g] : zoo::builtin_groups(8)) {
    INFO(name);
    const auto h = heap_from_group(g);
    CHECK(check_translation_equivalences(h).passed());
    CHECK(check_free_transitive(h).passed());
    CHECK(group_from_pointed_heap(h, g.identity) == g);
    const auto aut = aut_group(h);
    CHECK(aut.group.n == g.n);
    CHECK(aut.maps.size() == g.n);
    const auto iso = groups_isomorphic(aut.group, g);
    REQUIRE(iso);
    CHECK(is_isomorphism(aut.group, g, *iso));
  }
}

TEST_CASE("group isomorphism decisions") {
  CHECK(!groups_isomorphic(zoo::cyclic(4), zoo::klein4()));
  CHECK(!groups_isomorphic(zoo::cyclic(6), zoo::sym(3)));
  CHECK(!groups_isomorphic(zoo::cyclic(8), zoo::dihedral(4)));
  const auto iso = groups_isomorphic(zoo::dihedral(3), zoo::sym(3));
  REQUIRE(iso);
  CHECK(is_isomorphism(zoo::dihedral(3), zoo::sym(3), *iso));
  const auto iso2 = groups_isomorphic(zoo::dihedral(2), zoo::klein4());
  REQUIRE(iso2);
  CHECK(is_isomorphism(zoo::dihedral(2), zoo::klein4(), *iso2));
}

TEST_CASE("pointed heaps at every basepoint") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& h : enumerate_heaps(n))
      for (Element p = 0; p < n; ++p) {
        const auto g = group_from_pointed_heap(h, p);
        CHECK(g.identity == p);
        CHECK(verify_group(g).passed());
        CHECK(heap_from_group(g) == h);
      }
}

// Labeled groups of order n: the sum of n! / |Aut(G)| over isomorphism types.
TEST_CASE("labeled group tables") {
  CHECK(enumerate_group_tables(1).size() == 1);
  CHECK(enumerate_group_tables(2).size() == 2);
  CHECK(enumerate_group_tables(3).size() == 3);
  CHECK(enumerate_group_tables(4).size() == 16);
  CHECK(enumerate_group_tables(5).size() == 30);
}

// Labeled heaps: n! / |Hol(G)|, namely 2/2, 6/6, 24/8 + 24/24.
TEST_CASE("labeled heap census") {
  CHECK(enumerate_heaps(1).size() == 1);
  CHECK(enumerate_heaps(2).size() == 1);
  CHECK(enumerate_heaps(3).size() == 1);
  CHECK(enumerate_heaps(4).size() == 4);
  CHECK(exhaustive_heap_scan(2) == enumerate_heaps(2));
  CHECK(exhaustive_heap_scan(1) == enumerate_heaps(1));
  for (const auto& h : enumerate_heaps(4)) CHECK(verify_heap(h).passed());
}
