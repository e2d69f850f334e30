#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "uhecke/satake.hpp"

using namespace uhecke;

namespace {

LPoly T(int i, int e = 1) { return LPoly::variable(SymLaurent::var_name(i), e); }

}  // namespace

TEST_CASE("witt index from (d, eps)") {
  CHECK(HermitianSpaceDesc{2, Sign::plus}.witt() == 2);
  CHECK(HermitianSpaceDesc{2, Sign::minus}.witt() == 1);
  CHECK(HermitianSpaceDesc{1, Sign::minus}.witt() == 0);
}

TEST_CASE("invariance check on construction") {
  CHECK_THROWS(SymLaurent(1, T(1)));                      // not inversion-stable
  CHECK_NOTHROW(SymLaurent(1, T(1) + T(1, -1)));
  CHECK_THROWS(SymLaurent(2, T(1) + T(1, -1)));           // not swap-stable
  CHECK_NOTHROW(SymLaurent(2, T(1) + T(1, -1) + T(2) + T(2, -1)));
  CHECK_THROWS(SymLaurent(1, LPoly::variable("Y")));      // stray variable
  CHECK_NOTHROW(SymLaurent::constant(0, Rat(2)));
}

TEST_CASE("symmetrize orbit sums") {
  CHECK(symmetrize(2, T(1)).poly() ==
        T(1) + T(1, -1) + T(2) + T(2, -1));
  CHECK(symmetrize(2, T(1) * T(2)).poly() ==
        T(1) * T(2) + T(1, -1) * T(2) + T(1) * T(2, -1) +
            T(1, -1) * T(2, -1));
  // Orbits with different q-exponents stay separate.
  LPoly q = LPoly::variable("q");
  CHECK(symmetrize(1, q * T(1) + T(1, -1)).poly() ==
        q * (T(1) + T(1, -1)) + T(1) + T(1, -1));
  // Symmetrization fixes invariants.
  SymLaurent F = symmetrize(2, T(1, 2) + q * T(1) * T(2));
  CHECK(symmetrize(2, F.poly()) == F);
}

TEST_CASE("theta homomorphisms on small invariants") {
  // r = 1, eps = -, d = 1: witt 0, so T_1 goes to the constant slot q^{+1}.
  SymLaurent F(1, T(1) + T(1, -1));
  HermitianSpaceDesc V{1, Sign::minus};
  SymLaurent img = theta_left(F, V, 1);
  CHECK(img.rank() == 0);
  CHECK(img.poly() ==
        LPoly::variable("q", 1) + LPoly::variable("q", -1));
  // Upper reading agrees on invariants.
  CHECK(theta_left(F, V, 1, SignReading::upper) == img);

  // r = 2, eps = -, d = 2: witt 1, m = 1; T_1 survives, T_2 -> q slot.
  SymLaurent G = symmetrize(2, T(1));
  HermitianSpaceDesc V2{2, Sign::minus};
  SymLaurent img2 = theta_left(G, V2, 2);
  CHECK(img2.rank() == 1);
  CHECK(img2.poly() == T(1) + T(1, -1) + LPoly::variable("q", 1) +
                           LPoly::variable("q", -1));
  CHECK(theta_left(G, V2, 2, SignReading::upper) == img2);

  // theta_right renames and evaluates the first s - m slots.
  HermitianSpaceDesc V3{3, Sign::minus};  // witt 2, with r = 1: m = 1
  SymLaurent H = symmetrize(2, T(1));
  SymLaurent img3 = theta_right(H, V3, 1);
  CHECK(img3.rank() == 1);
  // Lower reading: first slot -> q^{-(2*1-(-1))} = q^{-3}.
  CHECK(img3.poly() == T(1) + T(1, -1) + LPoly::variable("q", -3) +
                           LPoly::variable("q", 3));
  CHECK(theta_right(H, V3, 1, SignReading::upper) == img3);
}

TEST_CASE("eval of invariants at parameters") {
  SymLaurent F(1, T(1) + T(1, -1));
  RFunc u = RFunc::variable("q", 2);
  CHECK(eval_params(F, {u}) ==
        RFunc::variable("q", 2) + RFunc::variable("q", -2));
  // Invariance: inverting the parameter does not change the value.
  SymLaurent G = symmetrize(2, T(1) * T(2, -1));
  RFunc u1 = RFunc::variable("u1");
  RFunc u2 = RFunc::variable("u2");
  CHECK(eval_params(G, {u1, u2}) == eval_params(G, {u1.inverse(), u2}));
  CHECK(eval_params(G, {u1, u2}) == eval_params(G, {u2, u1}));
  CHECK_THROWS(eval_params(G, {u1, RFunc()}));  // zero parameter
}

TEST_CASE("diagonal ideal membership, eps = +") {
  for (int r : {1, 2}) {
    HermitianSpaceDesc V{r, Sign::plus};
    REQUIRE(V.witt() == r);
    SymLaurent F = symmetrize(r, T(1, 2)) + SymLaurent::constant(r, Rat(5));
    TensorElement member{r, r,
                         {{F, SymLaurent::constant(r, Rat(1))},
                          {SymLaurent::constant(r, Rat(-1)), F}}};
    CHECK(ideal_member(member, V, r));
    TensorElement nonmember{r, r, {{F, SymLaurent::constant(r, Rat(1))}}};
    CHECK(!ideal_member(nonmember, V, r));
    TensorElement zero{r, r, {}};
    CHECK(ideal_member(zero, V, r));
  }
}
