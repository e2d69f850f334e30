#include "uhecke/lpoly.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace uhecke {

LPoly::LPoly(const Rat& c) {
  if (c != 0) terms_[{}] = c;
}

LPoly LPoly::variable(const std::string& name, int exp) {
  LPoly p;
  p.vars_ = {name};
  p.terms_[{exp}] = Rat(1);
  return p;
}

LPoly LPoly::monomial(const Rat& c, const std::vector<std::string>& vars,
                      const std::vector<int>& exps) {
  assert(vars.size() == exps.size());
  if (c == 0) return LPoly();
  std::vector<size_t> order(vars.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return vars[a] < vars[b]; });
  LPoly p;
  std::vector<int> e;
  for (size_t i : order) {
    p.vars_.push_back(vars[i]);
    e.push_back(exps[i]);
  }
  p.terms_[e] = c;
  return p;
}

bool LPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  for (int e : terms_.begin()->first)
    if (e != 0) return false;
  return true;
}

Rat LPoly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  assert(is_constant());
  return terms_.begin()->second;
}

LPoly LPoly::aligned_to(const std::vector<std::string>& target) const {
  LPoly out;
  out.vars_ = target;
  for (const auto& [e, c] : terms_) {
    std::vector<int> ne(target.size(), 0);
    size_t j = 0;
    for (size_t i = 0; i < vars_.size(); ++i) {
      while (j < target.size() && target[j] != vars_[i]) ++j;
      assert(j < target.size());
      ne[j] = e[i];
    }
    out.terms_[ne] = c;
  }
  return out;
}

void LPoly::align(const LPoly& a, const LPoly& b, LPoly& oa, LPoly& ob) {
  if (a.vars_ == b.vars_) {
    oa = a;
    ob = b;
    return;
  }
  std::vector<std::string> u;
  std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(),
                 b.vars_.end(), std::back_inserter(u));
  oa = a.aligned_to(u);
  ob = b.aligned_to(u);
}

void LPoly::insert_term(std::vector<int> exps, const Rat& c) {
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(std::move(exps), c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LPoly LPoly::operator-() const {
  LPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LPoly operator+(const LPoly& a, const LPoly& b) {
  LPoly x, y;
  LPoly::align(a, b, x, y);
  for (const auto& [e, c] : y.terms_) x.insert_term(e, c);
  return x;
}

LPoly operator-(const LPoly& a, const LPoly& b) {
  LPoly x, y;
  LPoly::align(a, b, x, y);
  for (const auto& [e, c] : y.terms_) x.insert_term(e, -c);
  return x;
}

LPoly operator*(const LPoly& a, const LPoly& b) {
  LPoly x, y;
  LPoly::align(a, b, x, y);
  LPoly out;
  out.vars_ = x.vars_;
  for (const auto& [ea, ca] : x.terms_) {
    for (const auto& [eb, cb] : y.terms_) {
      std::vector<int> e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.insert_term(std::move(e), ca * cb);
    }
  }
  return out;
}

LPoly LPoly::pow(int e) const {
  assert(e >= 0);
  LPoly out(Rat(1));
  LPoly base = *this;
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

bool LPoly::operator==(const LPoly& o) const {
  LPoly x, y;
  align(*this, o, x, y);
  return x.terms_ == y.terms_;
}

LPoly LPoly::substitute_monomials(
    const std::map<std::string, MonoSub>& subs) const {
  LPoly out;
  for (const auto& [e, c] : terms_) {
    LPoly term(c);
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = subs.find(vars_[i]);
      if (it == subs.end()) {
        term *= LPoly::variable(vars_[i], e[i]);
      } else {
        const MonoSub& m = it->second;
        Rat c2 = 1;
        if (e[i] >= 0) {
          for (int k = 0; k < e[i]; ++k) c2 *= m.coeff;
        } else {
          if (m.coeff == 0)
            throw std::domain_error("substitution of 0 into negative power");
          for (int k = 0; k < -e[i]; ++k) c2 /= m.coeff;
        }
        if (m.base.empty())
          term *= LPoly(c2);
        else
          term *= LPoly::monomial(c2, {m.base}, {m.exp * e[i]});
      }
    }
    out += term;
  }
  return out.pruned();
}

LPoly LPoly::pruned() const {
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_)
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) used[i] = true;
  LPoly out;
  for (size_t i = 0; i < vars_.size(); ++i)
    if (used[i]) out.vars_.push_back(vars_[i]);
  for (const auto& [e, c] : terms_) {
    std::vector<int> ne;
    for (size_t i = 0; i < e.size(); ++i)
      if (used[i]) ne.push_back(e[i]);
    out.terms_[ne] = c;
  }
  return out;
}

std::optional<std::string> LPoly::single_variable() const {
  LPoly p = pruned();
  if (p.vars_.empty()) return std::string();
  if (p.vars_.size() == 1) return p.vars_[0];
  return std::nullopt;
}

Rat LPoly::content() const {
  mpz_class g = 0;
  mpz_class l = 1;
  for (const auto& [e, c] : terms_) {
    mpz_class num = c.get_num();
    mpz_class den = c.get_den();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
  }
  if (g == 0) return Rat(0);
  Rat r(g, l);
  r.canonicalize();
  return r;
}

int LPoly::min_exponent(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return 0;
  size_t idx = it - vars_.begin();
  bool first = true;
  int m = 0;
  for (const auto& [e, c] : terms_) {
    if (first || e[idx] < m) m = e[idx];
    first = false;
  }
  return m;
}

int LPoly::max_exponent(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return 0;
  size_t idx = it - vars_.begin();
  bool first = true;
  int m = 0;
  for (const auto& [e, c] : terms_) {
    if (first || e[idx] > m) m = e[idx];
    first = false;
  }
  return m;
}

std::vector<LPoly> LPoly::coeffs_in(const std::string& var) const {
  int lo = min_exponent(var);
  int hi = max_exponent(var);
  std::vector<LPoly> out(hi - lo + 1);
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) {
    out[0] = *this;
    return out;
  }
  size_t idx = it - vars_.begin();
  for (const auto& [e, c] : terms_) {
    std::vector<std::string> rest_vars;
    std::vector<int> rest_exps;
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (i == idx) continue;
      rest_vars.push_back(vars_[i]);
      rest_exps.push_back(e[i]);
    }
    out[e[idx] - lo] += LPoly::monomial(c, rest_vars, rest_exps);
  }
  return out;
}

std::string LPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat ac = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool any_var = false;
    std::ostringstream vs;
    for (size_t j = vars_.size(); j-- > 0;) {
      if (e[j] == 0) continue;
      if (any_var) vs << " ";
      vs << vars_[j];
      if (e[j] != 1) vs << "^" << e[j];
      any_var = true;
    }
    if (!any_var) {
      os << rat_to_string(ac);
    } else {
      if (ac != 1) os << rat_to_string(ac) << " ";
      os << vs.str();
    }
  }
  return os.str();
}

namespace {

// Dense coefficient vector of a univariate Laurent polynomial, shifted so
// degree 0 is the minimal exponent.
struct Dense {
  std::vector<Rat> c;  // c[0] is the lowest coefficient
  std::string var;
  int shift = 0;

  bool zero() const { return c.empty(); }
  int deg() const { return static_cast<int>(c.size()) - 1; }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
    size_t lead = 0;
    while (lead < c.size() && c[lead] == 0) ++lead;
    if (lead > 0) {
      c.erase(c.begin(), c.begin() + lead);
      shift += static_cast<int>(lead);
    }
  }
};

Dense to_dense(const LPoly& p, const std::string& var) {
  Dense d;
  d.var = var;
  if (p.is_zero()) return d;
  int lo = p.min_exponent(var);
  int hi = p.max_exponent(var);
  d.shift = lo;
  d.c.assign(hi - lo + 1, Rat(0));
  auto cs = p.coeffs_in(var);
  for (size_t i = 0; i < cs.size(); ++i) {
    if (!cs[i].is_zero()) d.c[i] = cs[i].constant_value();
  }
  return d;
}

LPoly from_dense(const Dense& d) {
  LPoly out;
  for (size_t i = 0; i < d.c.size(); ++i) {
    if (d.c[i] == 0) continue;
    if (d.var.empty())
      out += LPoly(d.c[i]);
    else
      out += LPoly::monomial(d.c[i], {d.var}, {d.shift + static_cast<int>(i)});
  }
  return out;
}

// Remainder of polynomial division, ignoring monomial shifts.
std::vector<Rat> poly_rem(std::vector<Rat> a, const std::vector<Rat>& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rat f = a.back() / b.back();
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

}  // namespace

LPoly univariate_gcd(const LPoly& a, const LPoly& b) {
  auto va = a.single_variable();
  auto vb = b.single_variable();
  if (!va || !vb) throw std::domain_error("univariate_gcd: multivariate input");
  std::string var = va->empty() ? *vb : *va;
  if (!va->empty() && !vb->empty() && *va != *vb)
    throw std::domain_error("univariate_gcd: different variables");
  if (a.is_zero() || b.is_zero()) return LPoly(Rat(1));
  Dense da = to_dense(a, var), db = to_dense(b, var);
  da.trim();
  db.trim();
  std::vector<Rat> x = da.c, y = db.c;
  while (!y.empty()) {
    std::vector<Rat> r = poly_rem(x, y);
    // strip trailing/leading zeros; leading zero strip is a monomial factor,
    // harmless for gcd purposes over Laurent polynomials
    size_t lead = 0;
    while (lead < r.size() && r[lead] == 0) ++lead;
    if (lead > 0) r.erase(r.begin(), r.begin() + lead);
    x = y;
    y = r;
  }
  if (x.empty()) return LPoly(Rat(1));
  Rat lc = x.back();
  for (Rat& c : x) c /= lc;
  Dense g;
  g.var = var;
  g.c = x;
  g.shift = 0;
  return from_dense(g);
}

LPoly univariate_divexact(const LPoly& a, const LPoly& b) {
  auto va = a.single_variable();
  auto vb = b.single_variable();
  if (!va || !vb)
    throw std::domain_error("univariate_divexact: multivariate input");
  std::string var = va->empty() ? *vb : *va;
  if (a.is_zero()) return LPoly();
  Dense da = to_dense(a, var), db = to_dense(b, var);
  da.trim();
  db.trim();
  if (db.zero()) throw std::domain_error("division by zero");
  std::vector<Rat> q(da.c.size() >= db.c.size()
                         ? da.c.size() - db.c.size() + 1
                         : 0,
                     Rat(0));
  std::vector<Rat> r = da.c;
  while (r.size() >= db.c.size() && !r.empty()) {
    Rat f = r.back() / db.c.back();
    size_t off = r.size() - db.c.size();
    q[off] = f;
    for (size_t i = 0; i < db.c.size(); ++i) r[off + i] -= f * db.c[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  if (!r.empty()) throw std::domain_error("univariate_divexact: not exact");
  Dense dq;
  dq.var = var;
  dq.c = q;
  dq.shift = da.shift - db.shift;
  return from_dense(dq);
}

}  // namespace uhecke
