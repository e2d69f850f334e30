#pragma once

#include <map>
#include <string>

#include "uhecke/lpoly.hpp"

namespace uhecke {

// Rational function stored as an unreduced numerator/denominator pair.
// Equality is cross-multiplication; no canonical reduced form is maintained.
// reduce() applies cheap normalizations (monomial and content factors, and a
// gcd when both parts are univariate in the same variable) to keep
// intermediate results small during elimination.
class RFunc {
 public:
  RFunc() : num_(), den_(Rat(1)) {}
  explicit RFunc(const Rat& c) : num_(c), den_(Rat(1)) {}
  explicit RFunc(long c) : num_(Rat(c)), den_(Rat(1)) {}
  explicit RFunc(const LPoly& num) : num_(num), den_(Rat(1)) {}
  RFunc(const LPoly& num, const LPoly& den);

  static RFunc variable(const std::string& name, int exp = 1) {
    return RFunc(LPoly::variable(name, exp));
  }

  const LPoly& num() const { return num_; }
  const LPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RFunc operator-() const;
  friend RFunc operator+(const RFunc& a, const RFunc& b);
  friend RFunc operator-(const RFunc& a, const RFunc& b);
  friend RFunc operator*(const RFunc& a, const RFunc& b);
  friend RFunc operator/(const RFunc& a, const RFunc& b);
  RFunc& operator+=(const RFunc& o) { return *this = *this + o; }
  RFunc& operator-=(const RFunc& o) { return *this = *this - o; }
  RFunc& operator*=(const RFunc& o) { return *this = *this * o; }
  RFunc& operator/=(const RFunc& o) { return *this = *this / o; }

  RFunc inverse() const;
  RFunc pow(int e) const;  // any integer exponent

  // Cross-multiplication equality: num*o.den == o.num*den.
  bool operator==(const RFunc& o) const;
  bool operator!=(const RFunc& o) const { return !(*this == o); }

  // Full substitution of variables by rational functions. Variables absent
  // from the map are kept. Throws std::domain_error (pole error, reporting
  // the vanishing denominator) if the substituted denominator is zero, or if
  // a zero value meets a negative exponent.
  RFunc substitute(const std::map<std::string, RFunc>& assignments) const;

  // Replaces var^(2k) by factor^k * var^(2k) throughout; every occurrence of
  // var must have even exponent. Realizes shifts like s -> s + 1/2 on
  // X = q^{-s} without introducing square roots.
  RFunc scale_square(const std::string& var, const RFunc& factor_per_square) const;

  RFunc reduced() const;

  std::string str() const;

 private:
  LPoly num_;
  LPoly den_;
};

}  // namespace uhecke
