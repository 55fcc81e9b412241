#include "doctest.h"
#include "fixtures.hpp"
#include "heapforge/functors.hpp"
#include "heapforge/reps.hpp"
#include "heapforge/zoo.hpp"

using namespace heapforge;
using namespace heapforge::reps;
using fixtures::pointed_module;
using fixtures::trivial;
using lin::compose;
using lin::FieldSpec;
using lin::Scalar;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F7 = FieldSpec::prime(7);

// chi_k(g^a) = w^(k a) on the group algebra of Z/3 over F_7, w = 2.
Module z3_character(const HopfAlgebra& h, std::size_t k) {
  Module m{Side::Left, h.alg, 1, {}};
  for (std::size_t a = 0; a < 3; ++a)
    m.actions.push_back(Matrix::scalar(fixtures::power(Scalar(F7, 2), (k * a) % 3)));
  return m;
}

Module sign_module(const HopfAlgebra& z2) {
  return Module{Side::Left, z2.alg, 1,
                {Matrix::scalar(Scalar::one(Q)), Matrix::scalar(-Scalar::one(Q))}};
}

Module right_dual(const HopfAlgebra& h, const Module& m) {
  return dual_module(h, m, DualVariant::RightPlain);
}

bool is_yes(const IsoResult& r) { return r.verdict == IsoResult::Verdict::Yes; }

}  // namespace

TEST_CASE("regular and trivial modules") {
  for (const auto& fx : zoo::hopf_fleet()) {
    INFO(fx.name);
    CHECK(verify_module(regular_module(fx.hopf.alg)).passed());
    CHECK(verify_module(regular_module(fx.hopf.alg, Side::Right)).passed());
    CHECK(verify_module(trivial(fx.hopf)).passed());
    for (const auto& m : fixtures::left_modules(fx)) CHECK(verify_module(m).passed());
    for (const auto& m : fixtures::right_modules(fx)) CHECK(verify_module(m).passed());
  }
}

TEST_CASE("a perturbed action fails multiplicativity with a witness") {
  const auto h = zoo::sweedler_hopf(Q);
  auto m = regular_module(h.alg);
  m.actions[2] = lin::scale(m.actions[2], Scalar(Q, 2));
  const auto rep = verify_module(m);
  CHECK(rep.find("unital")->passed);
  const auto* line = rep.find("multiplicative");
  REQUIRE(!line->passed);
  REQUIRE(line->witness);
  CHECK(line->witness->size() == 2);

  auto not_unital = regular_module(h.alg);
  not_unital.actions[0] = lin::scale(not_unital.actions[0], Scalar(Q, 3));
  CHECK(!verify_module(not_unital).find("unital")->passed);
  m.actions.pop_back();
  CHECK_THROWS_AS(verify_module(m), InputError);
}

TEST_CASE("ternary product of trivial modules is trivial") {
  for (const auto& fx : zoo::hopf_fleet()) {
    INFO(fx.name);
    const auto q = functors::qheap_from_hopf(fx.hopf);
    const auto t = trivial(fx.hopf);
    const auto tr = right_dual(fx.hopf, t);
    CHECK(ternary_action_left(q, t, tr, t) == t);
    CHECK(ternary_action_right(q, tr, t, tr) == trivial_module(fx.hopf.alg, alg::Character{fx.hopf.coalg.epsilon}, Side::Right));
  }
}

TEST_CASE("Z/2 sign modules") {
  const auto z2 = zoo::group_algebra(zoo::cyclic(2), Q);
  const auto q = functors::qheap_from_hopf(z2);
  const auto s = sign_module(z2);
  const auto out = ternary_action_left(q, s, right_dual(z2, s), s);
  CHECK(out.dim == 1);
  CHECK(out.actions[1] == Matrix::scalar(Scalar(Q, -1)));
  CHECK(out == s);
}

TEST_CASE("ternary products are modules") {
  const auto h = zoo::sweedler_hopf(Q);
  const auto q = functors::qheap_from_hopf(h);
  const auto reg = regular_module(h.alg);
  const auto p = pointed_module(h, 2, Scalar(Q, -1), Scalar::one(Q));
  const auto m = ternary_action_left(q, reg, right_dual(h, p), reg);
  CHECK(m.dim == 32);
  CHECK(m.side == Side::Left);
  CHECK(verify_module(m).passed());

  const auto r = ternary_action_right(q, right_dual(h, p), p, regular_module(h.alg, Side::Right));
  CHECK(r.dim == 16);
  CHECK(r.side == Side::Right);
  CHECK(verify_module(r).passed());
  // right modules: act(g x) = act(x) act(g)
  const auto gx = action_of(r, alg::basis_vector(Q, 4, 3));
  CHECK(gx == compose(r.actions[2], r.actions[1]));

  CHECK_THROWS_AS(ternary_action_left(q, reg, reg, reg), InputError);
  CHECK_THROWS_AS(ternary_action_right(q, reg, reg, reg), InputError);
}

TEST_CASE("on a commutative algebra the right product is the left one read oppositely") {
  const auto h = zoo::group_algebra(zoo::cyclic(3), F7);
  const auto q = functors::qheap_from_hopf(h);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t c = 0; c < 3; ++c) {
        const auto ra = right_dual(h, z3_character(h, a));
        const auto lb = z3_character(h, b);
        const auto rc = right_dual(h, z3_character(h, c));
        CHECK(to_opposite(ternary_action_right(q, ra, lb, rc)) ==
              ternary_action_left(q, to_opposite(ra), to_opposite(lb), to_opposite(rc)));
      }
}

TEST_CASE("duals") {
  for (const auto& fx : zoo::hopf_fleet()) {
    INFO(fx.name);
    CHECK(dual_module(fx.hopf, trivial(fx.hopf), DualVariant::LeftViaS) == trivial(fx.hopf));
  }
  const auto h = zoo::group_algebra(zoo::cyclic(3), F7);
  for (std::size_t k = 0; k < 3; ++k)
    CHECK(dual_module(h, z3_character(h, k), DualVariant::LeftViaS) ==
          z3_character(h, (3 - k) % 3));

  const auto sw = zoo::sweedler_hopf(Q);
  const auto p = pointed_module(sw, 2, Scalar(Q, -1), Scalar::one(Q));
  const auto dd = dual_module(sw, dual_module(sw, p, DualVariant::LeftViaS), DualVariant::LeftViaS);
  CHECK(verify_module(dd).passed());
  CHECK(!(dd == p));
  CHECK(is_yes(modules_isomorphic(dd, p)));
  CHECK_THROWS_AS(dual_module(sw, right_dual(sw, p), DualVariant::LeftViaS), InputError);
}

TEST_CASE("rigid lozenge agrees with the ternary product") {
  const auto z3 = zoo::group_algebra(zoo::cyclic(3), F7);
  const auto q3 = functors::qheap_from_hopf(z3);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t c = 0; c < 3; ++c) {
        const auto l = lozenge_rigid(z3, z3_character(z3, a), z3_character(z3, b),
                                     z3_character(z3, c));
        CHECK(l == z3_character(z3, (a + 2 * b + c) % 3));
        CHECK(l == ternary_action_left(q3, z3_character(z3, a),
                                       right_dual(z3, z3_character(z3, b)), z3_character(z3, c)));
      }
  for (const auto& fx : zoo::hopf_fleet()) {
    INFO(fx.name);
    const auto q = functors::qheap_from_hopf(fx.hopf);
    const auto t = trivial(fx.hopf);
    CHECK(lozenge_rigid(fx.hopf, t, t, t) == t);
  }
  const auto sw = zoo::sweedler_hopf(Q);
  const auto reg = regular_module(sw.alg);
  const auto l = lozenge_rigid(sw, reg, reg, reg);
  CHECK(l.dim == 64);
  CHECK(l == ternary_action_left(functors::qheap_from_hopf(sw), reg, right_dual(sw, reg), reg));
}

TEST_CASE("module isomorphism") {
  const auto z2 = zoo::group_algebra(zoo::cyclic(2), Q);
  const auto reg = regular_module(z2.alg);
  const auto s = sign_module(z2);
  CHECK(is_yes(modules_isomorphic(reg, reg)));
  const auto sum = direct_sum(trivial(z2), s);
  const auto r = modules_isomorphic(reg, sum);
  REQUIRE(is_yes(r));
  REQUIRE(r.witness);
  for (std::size_t i = 0; i < 2; ++i)
    CHECK(compose(*r.witness, reg.actions[i]) == compose(sum.actions[i], *r.witness));
  CHECK(modules_isomorphic(trivial(z2), s).verdict == IsoResult::Verdict::No);
  CHECK(modules_isomorphic(reg, s).verdict == IsoResult::Verdict::No);

  const auto z3 = zoo::group_algebra(zoo::cyclic(3), F7);
  CHECK(modules_isomorphic(z3_character(z3, 1), z3_character(z3, 2)).verdict ==
        IsoResult::Verdict::No);

  const auto sw = zoo::sweedler_hopf(Q);
  const auto p = pointed_module(sw, 2, Scalar(Q, -1), Scalar::one(Q));
  const auto pm = pointed_module(sw, 2, Scalar(Q, -1), Scalar(Q, -1));
  CHECK(modules_isomorphic(p, pm).verdict == IsoResult::Verdict::No);
  CHECK(verdict_name(IsoResult::Verdict::Unknown) == "unknown");
}

TEST_CASE("para-associativity on commutative examples") {
  const auto z2 = zoo::group_algebra(zoo::cyclic(2), Q);
  const auto q = functors::qheap_from_hopf(z2);
  const auto s = sign_module(z2), t = trivial(z2);
  const auto reg = regular_module(z2.alg);
  const auto rep = check_para_associativity(q, s, right_dual(z2, reg), t, right_dual(z2, s), reg);
  CHECK(rep.passed());
  const auto rep1 = check_para_associativity(q, t, right_dual(z2, t), t, right_dual(z2, t), t);
  CHECK(rep1.checks().size() == 3);
  CHECK(rep1.passed());
}

TEST_CASE("Sweedler para-associativity holds only up to the twist") {
  const auto sw = zoo::sweedler_hopf(Q);
  const auto q = functors::qheap_from_hopf(sw);
  const auto p = pointed_module(sw, 2, Scalar(Q, -1), Scalar::one(Q));
  const auto t = right_dual(sw, trivial(sw));
  const auto rep = check_para_associativity(q, p, t, p, t, p);
  CHECK(rep.find("outer")->passed);
  CHECK(rep.find("middle_twisted")->passed);
  CHECK(!rep.find("middle")->passed);
  CHECK(rep.find("middle")->witness->size() == 3);

  const auto reg = regular_module(sw.alg);
  CHECK_THROWS_AS(check_para_associativity(q, reg, right_dual(sw, reg), reg, right_dual(sw, reg), reg),
                  InputError);
}

TEST_CASE("the twist is the square of the antipode") {
  auto fleet = zoo::hopf_fleet();
  for (auto& fx : zoo::hopf_fleet_f7()) fleet.push_back(fx);
  for (const auto& fx : fleet) {
    INFO(fx.name);
    const auto theta = grunspan_map(functors::qheap_from_hopf(fx.hopf));
    REQUIRE(theta);
    CHECK(*theta == compose(fx.hopf.antipode, fx.hopf.antipode));
  }
}

TEST_CASE("monoidal structure from the heap") {
  for (const auto& fx : zoo::hopf_fleet()) {
    INFO(fx.name);
    const auto ms = fixtures::left_modules(fx);
    for (const auto& a : ms)
      for (const auto& b : ms) CHECK(monoidal_from_heapy(fx.hopf, a, b).passed());
  }
  const auto sw = zoo::sweedler_hopf(Q);
  const auto p = pointed_module(sw, 2, Scalar(Q, -1), Scalar::one(Q));
  CHECK(verify_module(tensor_product(sw, p, p)).passed());
  CHECK(tensor_product(sw, p, p).dim == 4);
}

TEST_CASE("unit probe") {
  const auto sw = zoo::sweedler_hopf(Q);
  const auto p = pointed_module(sw, 2, Scalar(Q, -1), Scalar::one(Q));
  const auto u = unit_probe(sw, p);
  CHECK(u.left_dim == 4);
  CHECK(u.right_dim == 4);
  CHECK(u.left_vs_unit.verdict == IsoResult::Verdict::No);
  const auto z2 = zoo::group_algebra(zoo::cyclic(2), Q);
  const auto v = unit_probe(z2, trivial(z2));
  CHECK(v.left_dim == 1);
  CHECK(is_yes(v.left_vs_unit));
  CHECK(is_yes(v.right_vs_q));
}

TEST_CASE("to_opposite is an involution") {
  const auto sw = zoo::sweedler_hopf(Q);
  const auto p = pointed_module(sw, 2, Scalar(Q, -1), Scalar::one(Q));
  const auto o = to_opposite(p);
  CHECK(o.side == Side::Right);
  CHECK(o.over == alg::opposite_algebra(sw.alg));
  CHECK(verify_module(o).passed());
  CHECK(to_opposite(o) == p);
  const auto pb = pullback(p, sw.alg, compose(sw.antipode, sw.antipode));
  CHECK(verify_module(pb).passed());
  CHECK(is_yes(modules_isomorphic(pb, p)));
}
