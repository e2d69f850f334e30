#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <set>

#include "doctest.h"
#include "uhecke/weyl.hpp"

using namespace uhecke;

namespace {

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

long binom(int n, int k) {
  long b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

}  // namespace

TEST_CASE("group enumeration sizes and distinctness") {
  for (int r = 1; r <= 4; ++r) {
    auto elems = enumerate_group(r);
    CHECK(static_cast<long>(elems.size()) == (1L << r) * factorial(r));
    std::set<SignedPermutation> seen;
    for (const auto& e : elems) seen.insert(e.perm);
    CHECK(seen.size() == elems.size());
  }
  CHECK_THROWS_AS(enumerate_group(7), std::domain_error);
}

TEST_CASE("length formula matches BFS word length") {
  for (int r = 1; r <= 3; ++r) {
    for (const auto& e : enumerate_group(r)) {
      CHECK(length(e.perm) == static_cast<int>(e.reduced_word.size()));
      CHECK(evaluate_word(r, e.reduced_word) == e.perm);
    }
  }
}

TEST_CASE("longest element") {
  for (int r = 1; r <= 4; ++r) {
    int max_len = 0;
    for (const auto& e : enumerate_group(r))
      max_len = std::max(max_len, length(e.perm));
    CHECK(max_len == r * r);  // hyperoctahedral longest element
  }
}

TEST_CASE("generator relations") {
  int r = 3;
  auto c = generator(r, 0);
  auto a1 = generator(r, 1);
  auto a2 = generator(r, 2);
  auto id = SignedPermutation::identity(r);
  CHECK(compose(c, c) == id);
  CHECK(compose(a1, a1) == id);
  // Type-C braid relation (c a1)^4 = e and (a1 a2)^3 = e; c and a2 commute.
  auto ca1 = compose(c, a1);
  CHECK(compose(compose(ca1, ca1), compose(ca1, ca1)) == id);
  auto a12 = compose(a1, a2);
  CHECK(compose(a12, compose(a12, a12)) == id);
  CHECK(compose(c, a2) == compose(a2, c));
}

TEST_CASE("group laws on random samples") {
  std::mt19937 rng(5);
  auto elems = enumerate_group(3);
  std::uniform_int_distribution<size_t> pick(0, elems.size() - 1);
  for (int t = 0; t < 300; ++t) {
    const auto& a = elems[pick(rng)].perm;
    const auto& b = elems[pick(rng)].perm;
    const auto& c = elems[pick(rng)].perm;
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(compose(a, a.inverse()) == SignedPermutation::identity(3));
    // Length is subadditive and congruent mod 2.
    CHECK(length(compose(a, b)) <= length(a) + length(b));
    CHECK((length(compose(a, b)) - length(a) - length(b)) % 2 == 0);
  }
}

TEST_CASE("parabolic double cosets") {
  for (int r = 1; r <= 4; ++r) {
    auto blocks = parabolic_double_cosets(r);
    REQUIRE(static_cast<int>(blocks.size()) == r + 1);
    long total = 0;
    for (int i = 0; i <= r; ++i) {
      // Block i consists of the elements with exactly i negative entries.
      CHECK(static_cast<long>(blocks[i].size()) ==
            binom(r, i) * factorial(r));
      for (const auto& w : blocks[i]) CHECK(w.negatives() == i);
      total += blocks[i].size();
    }
    CHECK(total == (1L << r) * factorial(r));
  }
}

TEST_CASE("one line notation rendering") {
  SignedPermutation w = compose(generator(2, 0), generator(2, 1));
  // c then a1 as left-to-right word: evaluate_word(2, {0, 1}).
  SignedPermutation v = evaluate_word(2, {0, 1});
  CHECK(v.rank == 2);
  CHECK(SignedPermutation::negate_coord(2, 1).str() == "[-1, 2]");
}
