#pragma once

#include <string>
#include <vector>

#include "uhecke/rat.hpp"

namespace uhecke {

// Element of Q(zeta_n) for a prime-power conductor n = p or p^2, stored on
// the power basis 1, zeta, ..., zeta^(phi(n)-1) and reduced modulo the n-th
// cyclotomic polynomial after every operation.
class CycScalar {
 public:
  CycScalar() : p_(0), k_(1) {}
  CycScalar(long p, int k);  // zero element of Q(zeta_{p^k})
  static CycScalar from_rat(long p, int k, const Rat& c);
  static CycScalar root_power(long p, int k, long e);  // zeta^(e mod n)

  long p() const { return p_; }
  int k() const { return k_; }
  long n() const;    // conductor p^k
  long phi() const;  // degree of the power basis

  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rat rational_value() const;  // requires is_rational()

  friend CycScalar operator+(const CycScalar& a, const CycScalar& b);
  friend CycScalar operator-(const CycScalar& a, const CycScalar& b);
  friend CycScalar operator*(const CycScalar& a, const CycScalar& b);
  CycScalar operator-() const;
  CycScalar& operator+=(const CycScalar& o) { return *this = *this + o; }
  CycScalar& operator-=(const CycScalar& o) { return *this = *this - o; }
  CycScalar& operator*=(const CycScalar& o) { return *this = *this * o; }
  CycScalar scaled(const Rat& r) const;

  // Galois conjugation zeta -> zeta^-1 (complex conjugation).
  CycScalar conj() const;

  // Multiplicative inverse (throws std::domain_error on zero).
  CycScalar inverse() const;

  bool operator==(const CycScalar& o) const;
  bool operator!=(const CycScalar& o) const { return !(*this == o); }

  std::string str() const;

 private:
  void reduce(std::vector<Rat>& raw) const;  // raw has length n

  long p_;
  int k_;
  std::vector<Rat> c_;  // length phi(n); empty for the uninitialized zero
};

}  // namespace uhecke
