#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "uhecke/hecke.hpp"

using namespace uhecke;

namespace {

RFunc qp(int e) { return RFunc::variable("q", e); }

}  // namespace

TEST_CASE("quadratic relations of the generators") {
  for (int r : {1, 2, 3}) {
    // C-generator: T^2 = (q - 1) T + q.
    SignedPermutation c = generator(r, 0);
    HeckeElement lhs = t_mul(c, c);
    HeckeElement rhs = HeckeElement::basis(c).scaled(qp(1) - RFunc(Rat(1)));
    rhs += HeckeElement::unit(r).scaled(qp(1));
    CHECK(lhs == rhs);
    // A-generators: T^2 = (q^2 - 1) T + q^2.
    for (int i = 1; i < num_generators(r); ++i) {
      SignedPermutation a = generator(r, i);
      HeckeElement l2 = t_mul(a, a);
      HeckeElement r2 = HeckeElement::basis(a).scaled(qp(2) - RFunc(Rat(1)));
      r2 += HeckeElement::unit(r).scaled(qp(2));
      CHECK(l2 == r2);
    }
  }
}

TEST_CASE("length-additive products multiply in the group") {
  for (int r : {2, 3}) {
    const auto& elems = group_elements(r);
    for (const auto& u : elems) {
      for (const auto& v : elems) {
        if (length(compose(u.perm, v.perm)) !=
            length(u.perm) + length(v.perm))
          continue;
        HeckeElement prod = t_mul(u.perm, v.perm);
        CHECK(prod == HeckeElement::basis(compose(u.perm, v.perm)));
      }
    }
  }
}

TEST_CASE("associativity on random triples") {
  std::mt19937 rng(13);
  const auto& elems = group_elements(2);
  std::uniform_int_distribution<size_t> pick(0, elems.size() - 1);
  for (int t = 0; t < 200; ++t) {
    HeckeElement a = HeckeElement::basis(elems[pick(rng)].perm);
    HeckeElement b = HeckeElement::basis(elems[pick(rng)].perm);
    HeckeElement c = HeckeElement::basis(elems[pick(rng)].perm);
    CHECK(elem_mul(elem_mul(a, b), c) == elem_mul(a, elem_mul(b, c)));
  }
}

TEST_CASE("unit acts as identity") {
  const auto& elems = group_elements(2);
  for (const auto& w : elems) {
    HeckeElement b = HeckeElement::basis(w.perm);
    CHECK(elem_mul(HeckeElement::unit(2), b) == b);
    CHECK(elem_mul(b, HeckeElement::unit(2)) == b);
  }
}

TEST_CASE("character values and multiplicativity") {
  // Generator values.
  CHECK(kappa_generator(Sign::plus, 0) == qp(1));
  CHECK(kappa_generator(Sign::minus, 0) == RFunc(Rat(-1)));
  CHECK(kappa_generator(Sign::plus, 1) == qp(2));
  CHECK(kappa_generator(Sign::minus, 1) == qp(2));
  // Exhaustive multiplicativity for r <= 2, both signs.
  for (int r : {1, 2}) {
    const auto& elems = group_elements(r);
    for (const auto& u : elems) {
      for (const auto& v : elems) {
        HeckeElement prod = t_mul(u.perm, v.perm);
        for (Sign eps : {Sign::plus, Sign::minus}) {
          CHECK(kappa_value(eps, prod) ==
                kappa_value(eps, HeckeElement::basis(u.perm)) *
                    kappa_value(eps, HeckeElement::basis(v.perm)));
        }
      }
    }
  }
  // Sampled pairs at r = 3.
  std::mt19937 rng(17);
  const auto& elems3 = group_elements(3);
  std::uniform_int_distribution<size_t> pick(0, elems3.size() - 1);
  for (int t = 0; t < 100; ++t) {
    const auto& u = elems3[pick(rng)].perm;
    const auto& v = elems3[pick(rng)].perm;
    HeckeElement prod = t_mul(u, v);
    for (Sign eps : {Sign::plus, Sign::minus}) {
      CHECK(kappa_value(eps, prod) ==
            kappa_value(eps, HeckeElement::basis(u)) *
                kappa_value(eps, HeckeElement::basis(v)));
    }
  }
}

TEST_CASE("block indicators partition the group") {
  for (int r : {1, 2, 3}) {
    HeckeElement sum(r);
    for (int i = 0; i <= r; ++i) sum += block_indicator(r, i);
    // Every basis element appears exactly once with coefficient 1.
    for (const auto& w : group_elements(r))
      CHECK(sum.coeff(w.perm) == RFunc(Rat(1)));
  }
}

TEST_CASE("rank-1 eigenvector closed form") {
  // f = T_e - q^{-1} T_c satisfies f T_c = -f (hand computation from the
  // quadratic relation).
  HeckeElement f = eigenvector(1, Sign::minus);
  HeckeElement expected = HeckeElement::unit(1);
  expected += HeckeElement::basis(generator(1, 0)).scaled(-qp(-1));
  CHECK(f == expected);
  HeckeElement fc = elem_mul(f, HeckeElement::basis(generator(1, 0)));
  CHECK(fc == f.scaled(RFunc(Rat(-1))));
  // Plus sign: f = T_e + T_c, eigenvalue q.
  HeckeElement fp = eigenvector(1, Sign::plus);
  HeckeElement fpc = elem_mul(fp, HeckeElement::basis(generator(1, 0)));
  CHECK(fpc == fp.scaled(qp(1)));
}

TEST_CASE("eigenvector property and dimension for r <= 2") {
  for (int r : {1, 2}) {
    for (Sign eps : {Sign::plus, Sign::minus}) {
      CHECK(eigenspace_dimension(r, eps) == 1);
      HeckeElement f = eigenvector(r, eps);
      CHECK(f.coeff(SignedPermutation::identity(r)) == RFunc(Rat(1)));
      for (int g = 0; g < num_generators(r); ++g) {
        HeckeElement fg =
            elem_mul(f, HeckeElement::basis(generator(r, g)));
        CHECK(fg == f.scaled(kappa_generator(eps, g)));
      }
    }
  }
}

TEST_CASE("idempotent squares to itself for r <= 2") {
  for (int r : {1, 2}) {
    for (Sign eps : {Sign::plus, Sign::minus}) {
      HeckeElement e = idempotent(r, eps);
      CHECK(elem_mul(e, e) == e);
      CHECK(kappa_value(eps, e) == RFunc(Rat(1)));
    }
  }
}

TEST_CASE("kappa of the rank-1 eigenvectors") {
  // kappa^-(T_e - q^{-1} T_c) = 1 + q^{-1}.
  CHECK(kappa_value(Sign::minus, eigenvector(1, Sign::minus)) ==
        RFunc(Rat(1)) + qp(-1));
  CHECK(kappa_value(Sign::plus, eigenvector(1, Sign::plus)) ==
        RFunc(Rat(1)) + qp(1));
}
