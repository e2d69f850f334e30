#pragma once

#include <map>
#include <string>

#include "uhecke/rfunc.hpp"
#include "uhecke/sign.hpp"
#include "uhecke/weyl.hpp"

namespace uhecke {

// Element of the finite Hecke algebra with unequal parameters: the
// C-generator satisfies T^2 = (q-1)T + q and each A-generator satisfies
// T^2 = (q^2-1)T + q^2. Coefficients are rational functions in q.
class HeckeElement {
 public:
  explicit HeckeElement(int r) : rank_(r) {}

  static HeckeElement unit(int r);  // T_e
  static HeckeElement basis(const SignedPermutation& w);

  int rank() const { return rank_; }
  const std::map<SignedPermutation, RFunc>& coeffs() const { return coeffs_; }

  RFunc coeff(const SignedPermutation& w) const;
  void add_term(const SignedPermutation& w, const RFunc& c);

  bool is_zero() const { return coeffs_.empty(); }

  HeckeElement operator-() const;
  friend HeckeElement operator+(const HeckeElement& a, const HeckeElement& b);
  friend HeckeElement operator-(const HeckeElement& a, const HeckeElement& b);
  HeckeElement& operator+=(const HeckeElement& o) { return *this = *this + o; }
  HeckeElement& operator-=(const HeckeElement& o) { return *this = *this - o; }
  HeckeElement scaled(const RFunc& c) const;

  bool operator==(const HeckeElement& o) const;
  bool operator!=(const HeckeElement& o) const { return !(*this == o); }

  std::string str() const;

 private:
  int rank_;
  std::map<SignedPermutation, RFunc> coeffs_;
};

// Quadratic-relation parameter p_s of a generator: q for C, q^2 for A_i.
RFunc hecke_parameter(GenIndex g);

// Group table with reduced words, cached per rank.
const std::vector<WeylElement>& group_elements(int r);
// Index of w in group_elements(r); the identity has index 0.
size_t group_index(const SignedPermutation& w);

// T_u * T_v in the T-basis.
HeckeElement t_mul(const SignedPermutation& u, const SignedPermutation& v);
// Bilinear extension of t_mul.
HeckeElement elem_mul(const HeckeElement& a, const HeckeElement& b);

// Value of the character kappa^eps on the generator T_g: the C-generator
// goes to q (eps = +) or -1 (eps = -); every A-generator goes to q^2.
RFunc kappa_generator(Sign eps, GenIndex g);
// Linear extension of kappa^eps, multiplicative over reduced words.
RFunc kappa_value(Sign eps, const HeckeElement& a);

// Characteristic function of the i-th parabolic double-coset block.
HeckeElement block_indicator(int r, int i);

// The kappa^eps right-eigenvector with T_e coefficient 1, computed as a
// kernel and cross-checked against the closed block form
// sum_i (-q)^{((eps1)-1)i/2} * block_indicator(i).
HeckeElement eigenvector(int r, Sign eps);
// Dimension of the right kappa^eps-eigenspace (expected: 1).
int eigenspace_dimension(int r, Sign eps);

// e = f / kappa(f) where f = eigenvector(r, eps); satisfies e^2 = e.
HeckeElement idempotent(int r, Sign eps);

}  // namespace uhecke
