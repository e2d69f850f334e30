#pragma once

#include <string>
#include <utility>
#include <vector>

#include "uhecke/lpoly.hpp"
#include "uhecke/rfunc.hpp"
#include "uhecke/sign.hpp"

namespace uhecke {

// Descriptor of a hermitian space of even dimension 2d with sign eps.
// The Witt index s is determined by 2d - 2s = 1 - (eps 1).
struct HermitianSpaceDesc {
  int d = 1;
  Sign eps = Sign::plus;

  int witt() const { return d - (1 - sign_one(eps)) / 2; }
};

// W_m-invariant Laurent polynomial in T_1..T_m with coefficients that may
// involve q: invariance under every inversion T_i -> T_i^{-1} and under all
// permutations of the T_i is checked on construction.
class SymLaurent {
 public:
  SymLaurent() : rank_(0) {}
  SymLaurent(int m, const LPoly& p);  // throws if p is not invariant

  static std::string var_name(int i);  // "T1", "T2", ...
  static SymLaurent constant(int m, const Rat& c);

  int rank() const { return rank_; }
  const LPoly& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }

  friend SymLaurent operator+(const SymLaurent& a, const SymLaurent& b);
  friend SymLaurent operator-(const SymLaurent& a, const SymLaurent& b);
  friend SymLaurent operator*(const SymLaurent& a, const SymLaurent& b);
  SymLaurent operator-() const;

  bool operator==(const SymLaurent& o) const;
  bool operator!=(const SymLaurent& o) const { return !(*this == o); }

  std::string str() const { return poly_.str(); }

 private:
  int rank_;
  LPoly poly_;
};

// Checks W_m-invariance of a Laurent polynomial in T_1..T_m.
bool is_hyperoctahedral_invariant(int m, const LPoly& p);

// Orbit-sum symmetrization: each monomial orbit of the input contributes its
// full W_m-orbit exactly once, weighted by the input coefficient of the
// orbit's leading monomial.
SymLaurent symmetrize(int m, const LPoly& p);

// The two sign readings of the substitution homomorphisms; they agree on
// invariant inputs.
enum class SignReading { lower, upper };

// Rank-r invariants to rank-m invariants, m = min{r, witt}:
// lower reading sends T_i -> T_i^{-1} (i <= m) and
// T_{m+k} -> q^{-(2(k-1)+(eps 1))}; upper reading negates all exponents.
SymLaurent theta_left(const SymLaurent& F, const HermitianSpaceDesc& V, int r,
                      SignReading reading = SignReading::lower);

// Rank-s invariants to rank-m invariants: lower reading sends the first
// s - m variables to q^{-(2j-(eps 1))} (j = 1..s-m) and renames the last m
// variables to T_1..T_m; upper reading negates all exponents.
SymLaurent theta_right(const SymLaurent& G, const HermitianSpaceDesc& V, int r,
                       SignReading reading = SignReading::lower);

// Finite sum of pure tensors (left rank r) x (right rank s).
struct TensorElement {
  int r = 0;
  int s = 0;
  std::vector<std::pair<SymLaurent, SymLaurent>> terms;
};

// Membership in the kernel ideal of theta_left (x) theta_right.
bool ideal_member(const TensorElement& t, const HermitianSpaceDesc& V, int r);

// Evaluation T_i -> u_i (all u_i nonzero); well defined up to permutation
// and inversion of the parameters by invariance.
RFunc eval_params(const SymLaurent& F, const std::vector<RFunc>& u);

}  // namespace uhecke
