#include "uhecke/satake.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace uhecke {

std::string SymLaurent::var_name(int i) {
  return "T" + std::to_string(i);
}

bool is_hyperoctahedral_invariant(int m, const LPoly& p) {
  for (int i = 1; i <= m; ++i) {
    std::map<std::string, LPoly::MonoSub> inv;
    inv[SymLaurent::var_name(i)] = {SymLaurent::var_name(i), -1, Rat(1)};
    if (p.substitute_monomials(inv) != p) return false;
  }
  for (int i = 1; i < m; ++i) {
    std::map<std::string, LPoly::MonoSub> swap;
    swap[SymLaurent::var_name(i)] = {SymLaurent::var_name(i + 1), 1, Rat(1)};
    swap[SymLaurent::var_name(i + 1)] = {SymLaurent::var_name(i), 1, Rat(1)};
    if (p.substitute_monomials(swap) != p) return false;
  }
  return true;
}

SymLaurent::SymLaurent(int m, const LPoly& p) : rank_(m), poly_(p.pruned()) {
  if (m < 0) throw std::invalid_argument("SymLaurent: negative rank");
  for (const auto& v : poly_.vars()) {
    if (v == "q") continue;
    bool ok = false;
    for (int i = 1; i <= m; ++i)
      if (v == var_name(i)) ok = true;
    if (!ok)
      throw std::invalid_argument("SymLaurent: stray variable " + v);
  }
  if (!is_hyperoctahedral_invariant(m, poly_))
    throw std::invalid_argument("SymLaurent: polynomial is not W-invariant");
}

SymLaurent SymLaurent::constant(int m, const Rat& c) {
  return SymLaurent(m, LPoly(c));
}

SymLaurent operator+(const SymLaurent& a, const SymLaurent& b) {
  if (a.rank_ != b.rank_) throw std::invalid_argument("SymLaurent: rank mismatch");
  return SymLaurent(a.rank_, a.poly_ + b.poly_);
}

SymLaurent operator-(const SymLaurent& a, const SymLaurent& b) {
  if (a.rank_ != b.rank_) throw std::invalid_argument("SymLaurent: rank mismatch");
  return SymLaurent(a.rank_, a.poly_ - b.poly_);
}

SymLaurent operator*(const SymLaurent& a, const SymLaurent& b) {
  if (a.rank_ != b.rank_) throw std::invalid_argument("SymLaurent: rank mismatch");
  return SymLaurent(a.rank_, a.poly_ * b.poly_);
}

SymLaurent SymLaurent::operator-() const { return SymLaurent(rank_, -poly_); }

bool SymLaurent::operator==(const SymLaurent& o) const {
  return rank_ == o.rank_ && poly_ == o.poly_;
}

namespace {

// Full W_m-orbit of a T-exponent vector (sign flips and permutations).
std::set<std::vector<int>> exponent_orbit(const std::vector<int>& e) {
  std::vector<int> base = e;
  std::sort(base.begin(), base.end());
  std::set<std::vector<int>> orbit;
  do {
    size_t m = base.size();
    for (size_t mask = 0; mask < (size_t{1} << m); ++mask) {
      std::vector<int> f = base;
      for (size_t i = 0; i < m; ++i)
        if (mask & (size_t{1} << i)) f[i] = -f[i];
      orbit.insert(std::move(f));
    }
  } while (std::next_permutation(base.begin(), base.end()));
  return orbit;
}

}  // namespace

SymLaurent symmetrize(int m, const LPoly& p) {
  // Split each term into its T-exponent part and a q-monomial coefficient,
  // then emit each W_m-orbit once.
  std::vector<std::string> tvars;
  for (int i = 1; i <= m; ++i) tvars.push_back(SymLaurent::var_name(i));
  std::set<std::vector<int>> done;
  LPoly out;
  for (const auto& [e, c] : p.terms()) {
    std::vector<int> texp(m, 0);
    int qexp = 0;
    for (size_t i = 0; i < p.vars().size(); ++i) {
      if (p.vars()[i] == "q") {
        qexp = e[i];
        continue;
      }
      auto it = std::find(tvars.begin(), tvars.end(), p.vars()[i]);
      if (it == tvars.end())
        throw std::invalid_argument("symmetrize: stray variable " + p.vars()[i]);
      texp[it - tvars.begin()] = e[i];
    }
    std::vector<int> key = texp;
    for (int& x : key) x = std::abs(x);
    std::sort(key.begin(), key.end());
    key.push_back(qexp);
    if (!done.insert(key).second) continue;
    for (const auto& f : exponent_orbit(texp)) {
      std::vector<std::string> vars = tvars;
      std::vector<int> exps = f;
      vars.push_back("q");
      exps.push_back(qexp);
      out += LPoly::monomial(c, vars, exps);
    }
  }
  return SymLaurent(m, out);
}

namespace {

int reading_sign(SignReading r) { return r == SignReading::lower ? -1 : 1; }

}  // namespace

SymLaurent theta_left(const SymLaurent& F, const HermitianSpaceDesc& V, int r,
                      SignReading reading) {
  if (F.rank() != r) throw std::invalid_argument("theta_left: rank mismatch");
  int s = V.witt();
  int m = std::min(r, s);
  int e1 = sign_one(V.eps);
  int rd = reading_sign(reading);
  std::map<std::string, LPoly::MonoSub> subs;
  for (int i = 1; i <= m; ++i)
    subs[SymLaurent::var_name(i)] = {SymLaurent::var_name(i), rd, Rat(1)};
  for (int k = 1; k <= r - m; ++k)
    subs[SymLaurent::var_name(m + k)] = {"q", rd * (2 * (k - 1) + e1), Rat(1)};
  return SymLaurent(m, F.poly().substitute_monomials(subs));
}

SymLaurent theta_right(const SymLaurent& G, const HermitianSpaceDesc& V, int r,
                       SignReading reading) {
  int s = V.witt();
  if (G.rank() != s) throw std::invalid_argument("theta_right: rank mismatch");
  int m = std::min(r, s);
  int e1 = sign_one(V.eps);
  int rd = reading_sign(reading);
  std::map<std::string, LPoly::MonoSub> subs;
  for (int j = 1; j <= s - m; ++j)
    subs[SymLaurent::var_name(j)] = {"q", rd * (2 * j - e1), Rat(1)};
  for (int i = 1; i <= m; ++i)
    subs[SymLaurent::var_name(s - m + i)] = {SymLaurent::var_name(i), -rd,
                                             Rat(1)};
  return SymLaurent(m, G.poly().substitute_monomials(subs));
}

bool ideal_member(const TensorElement& t, const HermitianSpaceDesc& V, int r) {
  int s = V.witt();
  int m = std::min(r, s);
  LPoly acc;
  for (const auto& [l, g] : t.terms) {
    if (l.rank() != t.r || g.rank() != t.s)
      throw std::invalid_argument("ideal_member: inconsistent tensor ranks");
    acc += (theta_left(l, V, r) * theta_right(g, V, r)).poly();
  }
  return SymLaurent(m, acc).is_zero();
}

RFunc eval_params(const SymLaurent& F, const std::vector<RFunc>& u) {
  if (static_cast<int>(u.size()) != F.rank())
    throw std::invalid_argument("eval_params: wrong number of parameters");
  std::map<std::string, RFunc> subs;
  for (size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero())
      throw std::invalid_argument("eval_params: zero Satake parameter");
    subs[SymLaurent::var_name(static_cast<int>(i) + 1)] = u[i];
  }
  return RFunc(F.poly()).substitute(subs).reduced();
}

}  // namespace uhecke
