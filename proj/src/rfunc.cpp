#include "uhecke/rfunc.hpp"

#include <stdexcept>

namespace uhecke {

RFunc::RFunc(const LPoly& num, const LPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("RFunc: zero denominator");
}

RFunc RFunc::operator-() const {
  RFunc out = *this;
  out.num_ = -out.num_;
  return out;
}

RFunc operator+(const RFunc& a, const RFunc& b) {
  return RFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_).reduced();
}

RFunc operator-(const RFunc& a, const RFunc& b) {
  return RFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_).reduced();
}

RFunc operator*(const RFunc& a, const RFunc& b) {
  return RFunc(a.num_ * b.num_, a.den_ * b.den_).reduced();
}

RFunc operator/(const RFunc& a, const RFunc& b) {
  if (b.is_zero()) throw std::domain_error("RFunc: division by zero");
  return RFunc(a.num_ * b.den_, a.den_ * b.num_).reduced();
}

RFunc RFunc::inverse() const {
  if (is_zero()) throw std::domain_error("RFunc: inverse of zero");
  return RFunc(den_, num_);
}

RFunc RFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RFunc out(Rat(1));
  RFunc base = *this;
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

bool RFunc::operator==(const RFunc& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

namespace {

RFunc eval_lpoly(const LPoly& p, const std::map<std::string, RFunc>& assignments) {
  RFunc out;
  for (const auto& [e, c] : p.terms()) {
    RFunc term{LPoly(c)};
    for (size_t i = 0; i < p.vars().size(); ++i) {
      if (e[i] == 0) continue;
      auto it = assignments.find(p.vars()[i]);
      if (it == assignments.end()) {
        term *= RFunc(LPoly::variable(p.vars()[i], e[i]));
      } else {
        if (it->second.is_zero() && e[i] < 0)
          throw std::domain_error("pole error: zero substituted into " +
                                  p.vars()[i] + "^" + std::to_string(e[i]));
        term *= it->second.pow(e[i]);
      }
    }
    out += term;
  }
  return out;
}

}  // namespace

RFunc RFunc::substitute(const std::map<std::string, RFunc>& assignments) const {
  RFunc n = eval_lpoly(num_, assignments);
  RFunc d = eval_lpoly(den_, assignments);
  if (d.is_zero())
    throw std::domain_error("pole error: denominator " + den_.str() +
                            " vanishes under substitution");
  return (n / d).reduced();
}

RFunc RFunc::scale_square(const std::string& var,
                          const RFunc& factor_per_square) const {
  auto scale = [&](const LPoly& p) {
    RFunc out;
    auto it = std::find(p.vars().begin(), p.vars().end(), var);
    if (it == p.vars().end()) return RFunc(p);
    size_t idx = it - p.vars().begin();
    for (const auto& [e, c] : p.terms()) {
      if (e[idx] % 2 != 0)
        throw std::domain_error("scale_square: odd exponent of " + var);
      LPoly mono = LPoly::monomial(c, p.vars(), e);
      out += RFunc(mono) * factor_per_square.pow(e[idx] / 2);
    }
    return out;
  };
  RFunc n = scale(num_);
  RFunc d = scale(den_);
  return (n / d).reduced();
}

RFunc RFunc::reduced() const {
  LPoly n = num_.pruned();
  LPoly d = den_.pruned();
  if (n.is_zero()) return RFunc(LPoly(), LPoly(Rat(1)));

  // A pure-monomial denominator divides into the numerator exactly.
  if (d.terms().size() == 1) {
    const auto& [exps, coeff] = *d.terms().begin();
    std::vector<int> neg(exps.size());
    for (size_t i = 0; i < exps.size(); ++i) neg[i] = -exps[i];
    n = (n * LPoly::monomial(1 / coeff, d.vars(), neg)).pruned();
    d = LPoly(Rat(1));
  }

  // Cancel common monomial factors variable by variable.
  const std::vector<std::string> den_vars = d.vars();
  for (const std::string& v : den_vars) {
    bool in_num =
        std::find(n.vars().begin(), n.vars().end(), v) != n.vars().end();
    if (!in_num) continue;
    int k = std::min(n.min_exponent(v), d.min_exponent(v));
    if (k != 0) {
      LPoly m = LPoly::variable(v, -k);
      n = (n * m).pruned();
      d = (d * m).pruned();
    }
  }

  // Scale both parts by the denominator content (keeps coefficients small
  // and gives the denominator integer coefficients with gcd 1).
  Rat c = d.content();
  if (d.terms().begin()->second < 0) c = -c;
  if (c != 0 && c != 1) {
    Rat inv = 1 / c;
    LPoly scale(inv);
    n = n * scale;
    d = d * scale;
  }

  // Univariate gcd reduction when both parts live in one common variable.
  auto vn = n.single_variable();
  auto vd = d.single_variable();
  if (vn && vd && (vn->empty() || vd->empty() || *vn == *vd)) {
    if (!(d.is_constant() && d.constant_value() == 1)) {
      LPoly g = univariate_gcd(n, d);
      if (!g.is_constant()) {
        n = univariate_divexact(n, g);
        d = univariate_divexact(d, g);
      }
    }
  }
  RFunc out;
  out.num_ = n;
  out.den_ = d;
  return out;
}

std::string RFunc::str() const {
  LPoly one(Rat(1));
  if (den_ == one) return num_.str();
  std::string ns = num_.str();
  if (num_.terms().size() > 1) ns = "(" + ns + ")";
  std::string ds = den_.str();
  return ns + "/(" + ds + ")";
}

}  // namespace uhecke
