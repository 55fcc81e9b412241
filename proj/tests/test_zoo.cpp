#include "doctest.h"
#include "heapforge/zoo.hpp"

using namespace heapforge;
using namespace heapforge::zoo;
using lin::compose;
using lin::Matrix;

namespace {
const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F7 = FieldSpec::prime(7);
}  // namespace

TEST_CASE("group algebra structure constants") {
  const auto h = group_algebra(cyclic(2), Q);
  CHECK(h.alg.dim == 2);
  CHECK(h.alg.mu.at(0, 1 * 2 + 1).is_one());
  CHECK(h.coalg.delta.at(1 * 2 + 1, 1).is_one());
  CHECK(h.coalg.delta.nonzeros() == 2);
  CHECK(h.antipode == Matrix::identity(Q, 2));
  const auto s3 = group_algebra(sym(3), Q);
  CHECK(!(alg::opposite_algebra(s3.alg) == s3.alg));
}

TEST_CASE("function algebra structure constants") {
  const auto g = cyclic(3);
  const auto h = function_hopf(g, Q);
  CHECK(h.alg.unit.nonzeros() == 3);
  // delta(delta_c) = sum over ab = c of delta_a (x) delta_b
  for (std::size_t c = 0; c < 3; ++c)
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b)
        CHECK(h.coalg.delta.at(a * 3 + b, c).is_one() == ((a + b) % 3 == c));
  CHECK(h.coalg.epsilon.at(0, 0).is_one());
  CHECK(h.coalg.epsilon.nonzeros() == 1);
}

TEST_CASE("Sweedler's antipode has order four") {
  const auto h = sweedler_hopf(Q);
  const auto s2 = compose(h.antipode, h.antipode);
  CHECK(!(s2 == Matrix::identity(Q, 4)));
  CHECK(s2.at(2, 2) == Scalar(Q, -1));
  CHECK(compose(s2, s2) == Matrix::identity(Q, 4));
  CHECK(alg::verify_hopf(sweedler_hopf(F7)).passed());
  CHECK_THROWS_AS(sweedler_hopf(FieldSpec::prime(2)), InputError);
}

TEST_CASE("Taft algebras") {
  const auto h = taft_hopf(3, F7, Scalar(F7, 2));
  CHECK(h.alg.dim == 9);
  CHECK(alg::verify_hopf(h).passed());
  Matrix s = Matrix::identity(F7, 9);
  std::size_t order = 0;
  do {
    s = compose(h.antipode, s);
    ++order;
  } while (!(s == Matrix::identity(F7, 9)) && order < 20);
  CHECK(order == 6);
  CHECK_THROWS_AS(taft_hopf(3, F7, Scalar(F7, 3)), InputError);
  CHECK_THROWS_AS(taft_hopf(3, Q, Scalar(Q, 1)), InputError);
  CHECK_THROWS_AS(taft_hopf(6, FieldSpec::prime(7), Scalar(F7, 3)), InputError);
  CHECK(alg::verify_hopf(taft_hopf(2, F7, Scalar(F7, 6))).passed());
}

TEST_CASE("named entries") {
  CHECK(std::holds_alternative<FiniteGroup>(make_entry("dihedral", {{"n", "4"}}).structure));
  const auto t = make_entry("qheap-taft", {{"n", "3"}, {"p", "7"}, {"q", "2"}});
  REQUIRE(std::holds_alternative<QuantumHeap>(t.structure));
  CHECK(std::get<QuantumHeap>(t.structure).tau.rows() == 729);
  const auto ga = make_entry("group-algebra", {{"group", "sym:3"}});
  CHECK(std::get<HopfAlgebra>(ga.structure).alg.dim == 6);
  CHECK(std::get<HopfAlgebra>(make_entry("function-hopf", {{"group", "klein4"}, {"p", "5"}})
                                  .structure)
            .alg.field == FieldSpec::prime(5));
  CHECK_THROWS_AS(make_entry("octonions", {}), InputError);
  CHECK_THROWS_AS(make_entry("cyclic", {}), InputError);
  CHECK_THROWS_AS(make_entry("cyclic", {{"n", "x"}}), InputError);
  CHECK_THROWS_AS(make_entry("group-algebra", {{"group", "cyclic:0"}}), InputError);
  CHECK_THROWS_AS(make_entry("sweedler", {{"p", "9"}}), InputError);
}

TEST_CASE("builtin groups") {
  const auto g8 = builtin_groups(8);
  for (const auto& [name, g] : g8) CHECK(g.n <= 8);
  CHECK(std::count_if(g8.begin(), g8.end(), [](const auto& e) { return e.second.n == 8; }) == 2);
  CHECK(group_from_spec("sym:3") == sym(3));
  CHECK(group_from_spec("klein4") == klein4());
}
