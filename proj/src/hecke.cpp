#include "uhecke/hecke.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "uhecke/kernel_solve.hpp"

namespace uhecke {

namespace {

RFunc q_pow(int e) { return RFunc::variable("q", e); }

struct GroupTable {
  std::vector<WeylElement> elems;
  std::map<std::vector<int>, size_t> index;
};

const GroupTable& group_table(int r) {
  static std::map<int, GroupTable> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(r);
  if (it == cache.end()) {
    GroupTable t;
    t.elems = enumerate_group(r);
    for (size_t i = 0; i < t.elems.size(); ++i)
      t.index[t.elems[i].perm.img] = i;
    it = cache.emplace(r, std::move(t)).first;
  }
  return it->second;
}

}  // namespace

HeckeElement HeckeElement::unit(int r) {
  return basis(SignedPermutation::identity(r));
}

HeckeElement HeckeElement::basis(const SignedPermutation& w) {
  HeckeElement e(w.rank);
  e.coeffs_[w] = RFunc(Rat(1));
  return e;
}

RFunc HeckeElement::coeff(const SignedPermutation& w) const {
  auto it = coeffs_.find(w);
  return it == coeffs_.end() ? RFunc() : it->second;
}

void HeckeElement::add_term(const SignedPermutation& w, const RFunc& c) {
  if (w.rank != rank_) throw std::invalid_argument("HeckeElement: rank mismatch");
  auto it = coeffs_.find(w);
  if (it == coeffs_.end()) {
    if (!c.is_zero()) coeffs_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

HeckeElement HeckeElement::operator-() const {
  HeckeElement out(rank_);
  for (const auto& [w, c] : coeffs_) out.coeffs_.emplace(w, -c);
  return out;
}

HeckeElement operator+(const HeckeElement& a, const HeckeElement& b) {
  if (a.rank_ != b.rank_)
    throw std::invalid_argument("HeckeElement: rank mismatch");
  HeckeElement out = a;
  for (const auto& [w, c] : b.coeffs_) out.add_term(w, c);
  return out;
}

HeckeElement operator-(const HeckeElement& a, const HeckeElement& b) {
  return a + (-b);
}

HeckeElement HeckeElement::scaled(const RFunc& c) const {
  HeckeElement out(rank_);
  if (c.is_zero()) return out;
  for (const auto& [w, x] : coeffs_) {
    RFunc y = (x * c).reduced();
    if (!y.is_zero()) out.coeffs_.emplace(w, y);
  }
  return out;
}

bool HeckeElement::operator==(const HeckeElement& o) const {
  if (rank_ != o.rank_) return false;
  for (const auto& [w, c] : coeffs_)
    if (!(o.coeff(w) == c)) return false;
  for (const auto& [w, c] : o.coeffs_)
    if (coeffs_.find(w) == coeffs_.end() && !c.is_zero()) return false;
  return true;
}

std::string HeckeElement::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*T" << w.str();
  }
  return os.str();
}

RFunc hecke_parameter(GenIndex g) { return g == 0 ? q_pow(1) : q_pow(2); }

const std::vector<WeylElement>& group_elements(int r) {
  return group_table(r).elems;
}

size_t group_index(const SignedPermutation& w) {
  const GroupTable& t = group_table(w.rank);
  return t.index.at(w.img);
}

namespace {

// T_s * a for a generator s, by the Iwahori-Matsumoto rule.
HeckeElement gen_mul_left(GenIndex g, const HeckeElement& a) {
  int r = a.rank();
  SignedPermutation s = generator(r, g);
  RFunc p = hecke_parameter(g);
  RFunc pm1 = p - RFunc(Rat(1));
  HeckeElement out(r);
  for (const auto& [w, c] : a.coeffs()) {
    SignedPermutation sw = compose(s, w);
    if (length(sw) > length(w)) {
      out.add_term(sw, c);
    } else {
      out.add_term(sw, (p * c).reduced());
      out.add_term(w, (pm1 * c).reduced());
    }
  }
  return out;
}

// a * T_s for a generator s.
HeckeElement gen_mul_right(const HeckeElement& a, GenIndex g) {
  int r = a.rank();
  SignedPermutation s = generator(r, g);
  RFunc p = hecke_parameter(g);
  RFunc pm1 = p - RFunc(Rat(1));
  HeckeElement out(r);
  for (const auto& [w, c] : a.coeffs()) {
    SignedPermutation ws = compose(w, s);
    if (length(ws) > length(w)) {
      out.add_term(ws, c);
    } else {
      out.add_term(ws, (p * c).reduced());
      out.add_term(w, (pm1 * c).reduced());
    }
  }
  return out;
}

}  // namespace

HeckeElement t_mul(const SignedPermutation& u, const SignedPermutation& v) {
  if (u.rank != v.rank) throw std::invalid_argument("t_mul: rank mismatch");
  const GroupTable& t = group_table(u.rank);
  const auto& word = t.elems[t.index.at(u.img)].reduced_word;
  HeckeElement out = HeckeElement::basis(v);
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    out = gen_mul_left(*it, out);
  return out;
}

HeckeElement elem_mul(const HeckeElement& a, const HeckeElement& b) {
  if (a.rank() != b.rank())
    throw std::invalid_argument("elem_mul: rank mismatch");
  const GroupTable& t = group_table(a.rank());
  HeckeElement out(a.rank());
  for (const auto& [u, cu] : a.coeffs()) {
    const auto& word = t.elems[t.index.at(u.img)].reduced_word;
    HeckeElement part = b;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      part = gen_mul_left(*it, part);
    out += part.scaled(cu);
  }
  return out;
}

RFunc kappa_generator(Sign eps, GenIndex g) {
  if (g != 0) return q_pow(2);
  return eps == Sign::plus ? q_pow(1) : RFunc(Rat(-1));
}

RFunc kappa_value(Sign eps, const HeckeElement& a) {
  const GroupTable& t = group_table(a.rank());
  RFunc out;
  for (const auto& [w, c] : a.coeffs()) {
    RFunc v(Rat(1));
    for (GenIndex g : t.elems[t.index.at(w.img)].reduced_word)
      v *= kappa_generator(eps, g);
    out += (v * c).reduced();
  }
  return out.reduced();
}

HeckeElement block_indicator(int r, int i) {
  if (i < 0 || i > r) throw std::out_of_range("block_indicator: bad index");
  auto blocks = parabolic_double_cosets(r);
  HeckeElement out(r);
  for (const auto& w : blocks[i]) out.add_term(w, RFunc(Rat(1)));
  return out;
}

namespace {

// Rows of the right-eigenvector system: for each generator s and basis
// index x, sum_w c_w [coefficient of T_x in T_w T_s] - kappa(s) c_x = 0.
std::vector<std::vector<RFunc>> eigen_rows(int r, Sign eps) {
  const GroupTable& t = group_table(r);
  size_t n = t.elems.size();
  std::vector<std::vector<RFunc>> rows;
  for (GenIndex g = 0; g < num_generators(r); ++g) {
    RFunc kv = kappa_generator(eps, g);
    std::vector<std::vector<RFunc>> m(n, std::vector<RFunc>(n, RFunc()));
    for (size_t wi = 0; wi < n; ++wi) {
      HeckeElement prod =
          gen_mul_right(HeckeElement::basis(t.elems[wi].perm), g);
      for (const auto& [x, c] : prod.coeffs()) m[t.index.at(x.img)][wi] += c;
      m[wi][wi] -= kv;
    }
    for (auto& row : m) rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

int eigenspace_dimension(int r, Sign eps) {
  return static_cast<int>(solve_kernel(eigen_rows(r, eps)).size());
}

HeckeElement eigenvector(int r, Sign eps) {
  const GroupTable& t = group_table(r);
  auto basis = solve_kernel(eigen_rows(r, eps));
  if (basis.size() != 1)
    throw std::logic_error("eigenvector: eigenspace dimension is not 1");
  size_t e_idx = t.index.at(SignedPermutation::identity(r).img);
  RFunc ce = basis[0][e_idx];
  if (ce.is_zero())
    throw std::logic_error("eigenvector: vanishing T_e coefficient");
  HeckeElement out(r);
  for (size_t i = 0; i < basis[0].size(); ++i)
    out.add_term(t.elems[i].perm, (basis[0][i] / ce).reduced());

  // Cross-check against the closed block form.
  HeckeElement closed(r);
  for (int i = 0; i <= r; ++i) {
    RFunc weight(Rat(1));
    if (eps == Sign::minus)
      weight = RFunc(LPoly::monomial(Rat(i % 2 == 0 ? 1 : -1), {"q"}, {-i}));
    closed += block_indicator(r, i).scaled(weight);
  }
  if (!(out == closed))
    throw std::logic_error("eigenvector: closed block form mismatch");
  return out;
}

HeckeElement idempotent(int r, Sign eps) {
  HeckeElement f = eigenvector(r, eps);
  RFunc kv = kappa_value(eps, f);
  if (kv.is_zero())
    throw std::domain_error("idempotent: degenerate parameter, kappa(f) = 0");
  return f.scaled(kv.inverse());
}

}  // namespace uhecke
