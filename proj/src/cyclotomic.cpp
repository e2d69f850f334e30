#include "uhecke/cyclotomic.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace uhecke {

CycScalar::CycScalar(long p, int k) : p_(p), k_(k) {
  assert(p >= 2 && (k == 1 || k == 2));
  c_.assign(phi(), Rat(0));
}

long CycScalar::n() const {
  long m = p_;
  for (int i = 1; i < k_; ++i) m *= p_;
  return m;
}

long CycScalar::phi() const { return n() / p_ * (p_ - 1); }

CycScalar CycScalar::from_rat(long p, int k, const Rat& c) {
  CycScalar s(p, k);
  s.c_[0] = c;
  return s;
}

CycScalar CycScalar::root_power(long p, int k, long e) {
  CycScalar s(p, k);
  long m = s.n();
  e %= m;
  if (e < 0) e += m;
  std::vector<Rat> raw(m, Rat(0));
  raw[e] = 1;
  s.reduce(raw);
  s.c_.assign(raw.begin(), raw.begin() + s.phi());
  return s;
}

// Phi_{p}(x) = 1 + x + ... + x^{p-1};  Phi_{p^2}(x) = Phi_p(x^p).
// Reduction: first fold exponents mod n (zeta^n = 1), then eliminate degrees
// >= phi(n) using x^{phi} = -(sum of lower terms of the cyclotomic poly).
void CycScalar::reduce(std::vector<Rat>& raw) const {
  long m = n();
  long ph = phi();
  long step = m / p_;  // 1 for k=1, p for k=2
  assert(static_cast<long>(raw.size()) == m);
  for (long d = m - 1; d >= ph; --d) {
    Rat c = raw[d];
    if (c == 0) continue;
    raw[d] = 0;
    // x^d = x^{d-ph} * x^{ph}; x^{ph} = -(1 + x^{step} + ... + x^{(p-2)step})
    for (long j = 0; j <= p_ - 2; ++j) raw[d - ph + j * step] -= c;
  }
}

bool CycScalar::is_zero() const {
  for (const Rat& c : c_)
    if (c != 0) return false;
  return true;
}

bool CycScalar::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat CycScalar::rational_value() const {
  if (c_.empty()) return Rat(0);
  assert(is_rational());
  return c_[0];
}

CycScalar operator+(const CycScalar& a, const CycScalar& b) {
  assert(a.p_ == b.p_ && a.k_ == b.k_);
  CycScalar out = a;
  for (size_t i = 0; i < out.c_.size(); ++i) out.c_[i] += b.c_[i];
  return out;
}

CycScalar operator-(const CycScalar& a, const CycScalar& b) {
  assert(a.p_ == b.p_ && a.k_ == b.k_);
  CycScalar out = a;
  for (size_t i = 0; i < out.c_.size(); ++i) out.c_[i] -= b.c_[i];
  return out;
}

CycScalar CycScalar::operator-() const {
  CycScalar out = *this;
  for (Rat& c : out.c_) c = -c;
  return out;
}

CycScalar operator*(const CycScalar& a, const CycScalar& b) {
  assert(a.p_ == b.p_ && a.k_ == b.k_);
  CycScalar out(a.p_, a.k_);
  long m = out.n();
  std::vector<Rat> raw(m, Rat(0));
  long ph = out.phi();
  for (long i = 0; i < ph; ++i) {
    if (a.c_[i] == 0) continue;
    for (long j = 0; j < ph; ++j) {
      if (b.c_[j] == 0) continue;
      raw[(i + j) % m] += a.c_[i] * b.c_[j];
    }
  }
  out.reduce(raw);
  out.c_.assign(raw.begin(), raw.begin() + ph);
  return out;
}

CycScalar CycScalar::scaled(const Rat& r) const {
  CycScalar out = *this;
  for (Rat& c : out.c_) c *= r;
  return out;
}

CycScalar CycScalar::conj() const {
  CycScalar out(p_, k_);
  long m = n();
  std::vector<Rat> raw(m, Rat(0));
  for (long i = 0; i < phi(); ++i) {
    if (c_[i] == 0) continue;
    raw[(m - i) % m] += c_[i];
  }
  out.reduce(raw);
  out.c_.assign(raw.begin(), raw.begin() + phi());
  return out;
}

CycScalar CycScalar::inverse() const {
  if (is_zero()) throw std::domain_error("CycScalar: inverse of zero");
  long ph = phi();
  // Solve M c = e_0 where M is the multiplication-by-*this matrix on the
  // power basis.
  std::vector<std::vector<Rat>> m(ph, std::vector<Rat>(ph + 1, Rat(0)));
  for (long j = 0; j < ph; ++j) {
    CycScalar col = *this * root_power(p_, k_, j);
    for (long i = 0; i < ph; ++i) m[i][j] = col.c_[i];
  }
  m[0][ph] = 1;
  for (long c = 0, r = 0; c < ph && r < ph; ++c) {
    long pr = -1;
    for (long i = r; i < ph; ++i)
      if (m[i][c] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[pr], m[r]);
    Rat inv = 1 / m[r][c];
    for (long j = c; j <= ph; ++j) m[r][j] *= inv;
    for (long i = 0; i < ph; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (long j = c; j <= ph; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  CycScalar out(p_, k_);
  for (long i = 0; i < ph; ++i) out.c_[i] = m[i][ph];
  CycScalar check = *this * out;
  if (!(check == from_rat(p_, k_, Rat(1))))
    throw std::logic_error("CycScalar: inverse post-check failed");
  return out;
}

bool CycScalar::operator==(const CycScalar& o) const {
  if (c_.empty() || o.c_.empty()) return is_zero() && o.is_zero();
  if (p_ != o.p_ || k_ != o.k_)
    throw std::domain_error("CycScalar: conductor mismatch");
  return c_ == o.c_;
}

std::string CycScalar::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << (c_[i] < 0 ? " - " : " + ");
    else if (c_[i] < 0) os << "-";
    Rat a = c_[i] < 0 ? Rat(-c_[i]) : c_[i];
    if (i == 0) {
      os << rat_to_string(a);
    } else {
      if (a != 1) os << rat_to_string(a) << " ";
      os << "z" << n();
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

}  // namespace uhecke
