#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "uhecke/rat.hpp"

namespace uhecke {

// Multivariate Laurent polynomial over Q. Variables are kept sorted
// lexicographically; exponent vectors are parallel to the variable list and
// may be negative. Zero coefficients are never stored. Operations on
// operands with different variable lists extend both to the union first.
class LPoly {
 public:
  LPoly() = default;
  explicit LPoly(const Rat& c);
  explicit LPoly(long c) : LPoly(Rat(c)) {}

  static LPoly variable(const std::string& name, int exp = 1);
  // Single monomial c * prod vars[i]^exps[i]; vars need not be sorted.
  static LPoly monomial(const Rat& c, const std::vector<std::string>& vars,
                        const std::vector<int>& exps);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<std::vector<int>, Rat>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_value() const;  // requires is_constant()

  // Re-expresses this polynomial over a superset of its variables
  // (target sorted). Unknown target variables get exponent 0.
  LPoly aligned_to(const std::vector<std::string>& target) const;

  LPoly operator-() const;
  friend LPoly operator+(const LPoly& a, const LPoly& b);
  friend LPoly operator-(const LPoly& a, const LPoly& b);
  friend LPoly operator*(const LPoly& a, const LPoly& b);
  LPoly& operator+=(const LPoly& o) { return *this = *this + o; }
  LPoly& operator-=(const LPoly& o) { return *this = *this - o; }
  LPoly& operator*=(const LPoly& o) { return *this = *this * o; }

  LPoly pow(int e) const;  // e >= 0
  bool operator==(const LPoly& o) const;
  bool operator!=(const LPoly& o) const { return !(*this == o); }

  // Monomial substitution: each listed variable is replaced by
  // c * base^exp (a scaled power of another variable, or a constant when
  // base is empty). Stays inside LPoly since monomials are invertible.
  struct MonoSub {
    std::string base;  // empty means constant substitution
    int exp = 1;
    Rat coeff = Rat(1);
  };
  LPoly substitute_monomials(const std::map<std::string, MonoSub>& subs) const;

  // Drops variables whose exponent is zero in every term.
  LPoly pruned() const;

  // If at most one variable occurs with nonzero exponent, returns its name
  // (or empty string for a constant).
  std::optional<std::string> single_variable() const;

  // Gcd of all rational coefficients (positive; 0 for the zero polynomial).
  Rat content() const;

  int min_exponent(const std::string& var) const;
  int max_exponent(const std::string& var) const;

  // Coefficients of this polynomial viewed as a polynomial in `var`
  // (exponents from min to max), each an LPoly in the remaining variables.
  std::vector<LPoly> coeffs_in(const std::string& var) const;

  std::string str() const;

 private:
  void insert_term(std::vector<int> exps, const Rat& c);
  static void align(const LPoly& a, const LPoly& b, LPoly& oa, LPoly& ob);

  std::vector<std::string> vars_;
  std::map<std::vector<int>, Rat> terms_;
};

// Gcd of two univariate (or constant) Laurent polynomials in the same
// variable, monic, via the Euclidean algorithm. Used to keep single-variable
// rational functions small during elimination.
LPoly univariate_gcd(const LPoly& a, const LPoly& b);

// Exact division of univariate Laurent polynomials; aborts if not exact.
LPoly univariate_divexact(const LPoly& a, const LPoly& b);

}  // namespace uhecke
