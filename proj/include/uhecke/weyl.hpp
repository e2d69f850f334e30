#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "uhecke/rat.hpp"

namespace uhecke {

// Element of the hyperoctahedral group {+-1}^r x| S_r in signed one-line
// notation: img[i] is the signed image of i+1, and the absolute values form
// a permutation of 1..r.
struct SignedPermutation {
  int rank = 0;
  std::vector<int> img;

  static SignedPermutation identity(int r);
  // w_i: sign change in coordinate i (1-based).
  static SignedPermutation negate_coord(int r, int i);
  // w'_{(i,i+1)}: transposition of coordinates i, i+1 (1-based i).
  static SignedPermutation adjacent_swap(int r, int i);

  SignedPermutation inverse() const;
  int negatives() const;  // number of negative entries

  bool operator==(const SignedPermutation& o) const {
    return rank == o.rank && img == o.img;
  }
  bool operator<(const SignedPermutation& o) const { return img < o.img; }

  std::string str() const;  // e.g. "[-2, 1]"
};

SignedPermutation compose(const SignedPermutation& a,
                          const SignedPermutation& b);

// Generator index: 0 is the sign-change generator C = w_1; i >= 1 is the
// adjacent swap A_i = w'_{(i,i+1)}.
using GenIndex = int;
SignedPermutation generator(int r, GenIndex g);
int num_generators(int r);

// Coxeter length via the signed-permutation inversion count
// inv + neg + nsp (cross-validated against the Cayley-graph BFS).
int length(const SignedPermutation& w);

struct WeylElement {
  SignedPermutation perm;
  std::vector<GenIndex> reduced_word;  // evaluates left-to-right to perm
};

inline constexpr int kDefaultRankBound = 6;

// All 2^r r! elements with reduced words attached, by BFS over the Cayley
// graph. Throws std::domain_error above the rank bound.
std::vector<WeylElement> enumerate_group(int r,
                                         int bound = kDefaultRankBound);

// Partition of W_r into the S_r double cosets S_r (w_1...w_i) S_r,
// i = 0..r, in increasing i.
std::vector<std::vector<SignedPermutation>> parabolic_double_cosets(int r);

SignedPermutation evaluate_word(int r, const std::vector<GenIndex>& word);

}  // namespace uhecke
