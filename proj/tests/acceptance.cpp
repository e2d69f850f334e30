// Acceptance gate: runs every top-level criterion and prints one pass/fail
// line per criterion. Exit status is 0 iff all criteria pass.

#include <chrono>
#include <cstdio>
#include <string>

#include "uhecke/doubling.hpp"
#include "uhecke/hecke.hpp"
#include "uhecke/satake.hpp"
#include "uhecke/verify.hpp"
#include "uhecke/weilrep.hpp"

using namespace uhecke;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int n, bool pass, const std::string& what, Clock::time_point t0) {
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  std::printf("criterion %2d: %s  %s  (%.1f s)\n", n, pass ? "PASS" : "FAIL",
              what.c_str(), secs);
  std::fflush(stdout);
  if (!pass) ++failures;
}

RFunc qp(int e) { return RFunc::variable("q", e); }
RFunc xp(int e) { return RFunc::variable("X", e); }
RFunc qx(int a, int b) {
  return RFunc(LPoly::monomial(Rat(1), {"q", "X"}, {a, b}));
}

// 1. One-dimensional eigenspace matching the block-weight form, r <= 3.
void criterion_1() {
  auto t0 = Clock::now();
  bool ok = true;
  for (int r = 1; r <= 3 && ok; ++r) {
    for (Sign eps : {Sign::plus, Sign::minus}) {
      if (eigenspace_dimension(r, eps) != 1) ok = false;
      try {
        HeckeElement f = eigenvector(r, eps);  // cross-checks the block form
        HeckeElement closed(r);
        for (int i = 0; i <= r; ++i) {
          int e = (sign_one(eps) - 1) / 2 * i;  // 0 (plus) or -i (minus)
          RFunc w(LPoly::monomial(Rat(eps == Sign::minus && i % 2 ? -1 : 1),
                                  {"q"}, {e}));
          closed += block_indicator(r, i).scaled(w);
        }
        if (!(f == closed)) ok = false;
      } catch (...) {
        ok = false;
      }
    }
  }
  report(1, ok, "eigenspace dimension 1 and block-weight eigenvector, r<=3",
         t0);
}

// 2. Character multiplicativity on all basis pairs, r <= 3, both signs.
void criterion_2() {
  auto t0 = Clock::now();
  bool ok = true;
  for (int r = 1; r <= 3 && ok; ++r) {
    const auto& elems = group_elements(r);
    for (const auto& u : elems) {
      for (const auto& v : elems) {
        HeckeElement prod = t_mul(u.perm, v.perm);
        for (Sign eps : {Sign::plus, Sign::minus}) {
          if (!(kappa_value(eps, prod) ==
                kappa_value(eps, HeckeElement::basis(u.perm)) *
                    kappa_value(eps, HeckeElement::basis(v.perm)))) {
            ok = false;
          }
        }
      }
      if (!ok) break;
    }
  }
  report(2, ok, "character multiplicativity on all pairs, r<=3", t0);
}

// 3. The normalized eigenvector is idempotent, r <= 3.
void criterion_3() {
  auto t0 = Clock::now();
  bool ok = true;
  for (int r = 1; r <= 3 && ok; ++r) {
    for (Sign eps : {Sign::plus, Sign::minus}) {
      HeckeElement e = idempotent(r, eps);
      if (!(elem_mul(e, e) == e)) ok = false;
    }
  }
  report(3, ok, "idempotent squares to itself, r<=3", t0);
}

// 4. GK ratio of the raw products, r <= 4.
void criterion_4() {
  auto t0 = Clock::now();
  bool ok = true;
  for (int r = 1; r <= 4 && ok; ++r) {
    DoublingContext cm{r, Sign::minus, 0};
    DoublingContext cp{r, Sign::plus, 0};
    RFunc ratio =
        gk_constant(cm, GKForm::product) / gk_constant(cp, GKForm::product);
    RFunc expected = RFunc(LPoly::monomial(Rat(r % 2 ? -1 : 1), {"q"}, {-r})) *
                     zeta_F_at(2 * r) / zeta_F_at(0);
    if (!(ratio == expected)) ok = false;
  }
  report(4, ok, "GK ratio equals (-q)^-r zeta_F(2s+2r)/zeta_F(2s), r<=4", t0);
}

// 5. Zeta closed form: two assemblies agree (symbolic, r <= 3); the r = 1
// value matches the normative denominator and the report carries the
// discrepancy flag for the alternate printed denominator.
void criterion_5() {
  auto t0 = Clock::now();
  bool ok = true;
  for (int r = 1; r <= 3 && ok; ++r) {
    DoublingContext cm{r, Sign::minus, 0};
    DoublingContext cp{r, Sign::plus, 0};
    SatakeParams sigma = SatakeParams::symbolic(r);
    RFunc C = RFunc(LPoly(Rat(1)) + LPoly::variable("q"),
                    LPoly::variable("q") *
                        (LPoly(Rat(1)) + LPoly::variable("q", 2 * r - 1)));
    RFunc chain =
        RFunc(LPoly::monomial(Rat(r % 2 ? -1 : 1), {"q"}, {-r})) * C *
        zeta_F_at(2 * r) / zeta_F_at(0) * shift_half(l_factor(cp, sigma)) /
        abc(cp, ABC::b);
    if (!(chain == zeta_value(cm, sigma))) ok = false;
  }
  {
    DoublingContext cm{1, Sign::minus, 0};
    SatakeParams half = SatakeParams::from_half_integers({Rat(1, 2)});
    RFunc expected =
        -(RFunc(Rat(1)) + qx(-1, 2)) / (qp(2) * (RFunc(Rat(1)) - qx(-2, 2)));
    if (!(zeta_value(cm, half) == expected)) ok = false;
  }
  bool flagged = false;
  SuiteOptions opts;
  opts.rmax = 1;
  for (const auto& c : run_suite("zeta-identities", opts).checks) {
    if (c.id == "zeta-r1-half-value" && c.pass &&
        c.notes.find("1 - q^{-1-2s}") != std::string::npos &&
        c.notes.find("normative") != std::string::npos) {
      flagged = true;
    }
  }
  report(5, ok && flagged,
         "zeta value: both assemblies agree; denominator discrepancy flagged",
         t0);
}

// 6. Functional-equation constant, both signs, r <= 3, c in {-1, 0, 2}.
void criterion_6() {
  auto t0 = Clock::now();
  bool ok = true;
  for (int r = 1; r <= 3 && ok; ++r) {
    for (Sign eps : {Sign::plus, Sign::minus}) {
      for (int c : {-1, 0, 2}) {
        DoublingContext ctx{r, eps, c};
        RFunc b = abc(ctx, ABC::b);
        RFunc cf = abc(ctx, ABC::c);
        RFunc lhs = b / cf * normalized_intertwining_constant(ctx);
        int k = 4 * c * r + sign_one(eps) - 1;
        RFunc rhs =
            RFunc(Rat(sign_one(eps))) * xp(-k) * flip_s(b) / flip_s(cf);
        if (!(lhs == rhs)) ok = false;
      }
    }
  }
  report(6, ok, "functional equation constant, r<=3, c in {-1,0,2}", t0);
}

// 7. L-factor after pulling out the 1/2 slot; epsilon factor values.
void criterion_7() {
  auto t0 = Clock::now();
  bool ok = true;
  for (int r = 1; r <= 3 && ok; ++r) {
    DoublingContext cm{r, Sign::minus, 0};
    SatakeParams sigma = SatakeParams::symbolic(r - 1);
    SatakeParams with_half = sigma;
    with_half.u.push_back(qp(1));
    RFunc expected = (RFunc(Rat(1)) - qx(-1, 2)).inverse();
    for (const RFunc& u : sigma.u) {
      expected = expected *
                 ((RFunc(Rat(1)) - u * xp(2)) *
                  (RFunc(Rat(1)) - u.inverse() * xp(2)))
                     .inverse();
    }
    if (!(l_factor(cm, with_half) == expected)) ok = false;
  }
  {
    DoublingContext cm{1, Sign::minus, 0};
    SatakeParams half = SatakeParams::from_half_integers({Rat(1, 2)});
    RFunc em = epsilon_factor(cm, half);
    if (!(em == -qx(1, 2))) ok = false;
    // Value at s = 1/2 is exactly -1.
    RFunc at_half = em.scale_square("X", qp(-1))
                        .substitute({{"X", RFunc(Rat(1))}});
    if (!(at_half == RFunc(Rat(-1)))) ok = false;
  }
  report(7, ok, "L-factor with the 1/2 slot pulled out; epsilon = -q^{1-2s}",
         t0);
}

// 8. Theta parameters over the half-integer grid, eps = -, d = r, r <= 3.
void criterion_8() {
  auto t0 = Clock::now();
  bool ok = true;
  const Rat entries[] = {Rat(-1), Rat(-1, 2), Rat(0), Rat(1, 2), Rat(1)};
  for (int r = 1; r <= 3 && ok; ++r) {
    HermitianSpaceDesc V{r, Sign::minus};
    int m = std::min(r, V.witt());
    long npoints = 1;
    for (int i = 0; i < m; ++i) npoints *= 5;
    for (long pt = 0; pt < npoints && ok; ++pt) {
      std::vector<Rat> g;
      long rem = pt;
      for (int i = 0; i < m; ++i) {
        g.push_back(entries[rem % 5]);
        rem /= 5;
      }
      SatakeParams sigma = SatakeParams::from_half_integers(g);
      ThetaParamPair tp = theta_parameters(r, V, sigma);
      std::vector<RFunc> want_left = sigma.u;
      want_left.push_back(qp(1));
      auto match = [](std::vector<RFunc> got,
                      const std::vector<RFunc>& want) {
        if (got.size() != want.size()) return false;
        std::vector<bool> used(got.size(), false);
        for (const RFunc& w : want) {
          bool found = false;
          for (size_t i = 0; i < got.size() && !found; ++i) {
            if (!used[i] && (got[i] == w || got[i] == w.inverse())) {
              used[i] = true;
              found = true;
            }
          }
          if (!found) return false;
        }
        return true;
      };
      if (!match(tp.left.u, want_left)) ok = false;
      if (!match(tp.right.u, sigma.u)) ok = false;
      if (classify(tp.left, Sign::minus) != ReprClass::almost_unramified)
        ok = false;
    }
  }
  report(8, ok, "theta parameters (sigma + 1/2 slot, sigma) on the grid, r<=3",
         t0);
}

// 9. Vanishing orders at s0 = d - r, r <= 4.
void criterion_9() {
  auto t0 = Clock::now();
  bool ok = true;
  for (Sign eps : {Sign::plus, Sign::minus}) {
    for (int r = 1; r <= 4 && ok; ++r) {
      for (int s0 = 2; s0 >= (eps == Sign::plus ? -r : -r + 1); --s0) {
        HermitianSpaceDesc V{r + s0, eps};
        int want = s0 >= 0 ? 0 : 1;
        if (theta_vanishing_order(r, V) != want) ok = false;
      }
    }
  }
  report(9, ok, "vanishing order 0 at s0>=0 and 1 on the negative range, r<=4",
         t0);
}

// 10. Parameter-map compatibility and diagonal-ideal membership witnesses.
void criterion_10() {
  auto t0 = Clock::now();
  bool ok = true;
  for (int r = 2; r <= 3 && ok; ++r) {
    HermitianSpaceDesc V{r, Sign::minus};
    int m = std::min(r, V.witt());
    LPoly probe = LPoly::variable(SymLaurent::var_name(1), 2) +
                  LPoly::monomial(Rat(1), {"q", "T1", "T2"}, {1, 1, 1});
    SymLaurent F = symmetrize(r, probe) + SymLaurent::constant(r, Rat(3));
    std::vector<std::vector<Rat>> grids;
    if (m == 1)
      grids = {{Rat(0)}, {Rat(1, 2)}, {Rat(-1)}};
    else
      grids = {{Rat(0), Rat(1, 2)}, {Rat(1, 2), Rat(-1)},
               {Rat(-1, 2), Rat(1)}};
    for (const auto& g : grids) {
      SatakeParams sigma = SatakeParams::from_half_integers(g);
      ThetaParamPair tp = theta_parameters(r, V, sigma);
      RFunc lhs = eval_params(theta_left(F, V, r), sigma.u);
      RFunc rhs = eval_params(F, tp.left.u);
      if (!(lhs == rhs)) ok = false;
    }
  }
  for (int r = 1; r <= 3 && ok; ++r) {
    HermitianSpaceDesc V{r, Sign::plus};  // witt = r: the s = r diagonal case
    SymLaurent F = symmetrize(r, LPoly::variable("T1", 2)) +
                   SymLaurent::constant(r, Rat(5));
    TensorElement member{r, r,
                         {{F, SymLaurent::constant(r, Rat(1))},
                          {SymLaurent::constant(r, Rat(-1)), F}}};
    TensorElement nonmember{r, r, {{F, SymLaurent::constant(r, Rat(1))}}};
    if (!ideal_member(member, V, r)) ok = false;
    if (ideal_member(nonmember, V, r)) ok = false;
  }
  report(10, ok, "parameter-map compatibility and diagonal-ideal witnesses",
         t0);
}

// 11. Lattice generator lemma at p in {3, 5}, d = 1, eps = -.
void criterion_11() {
  auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  for (long p : {3L, 5L}) {
    GeneratorLemmaReport rep = verify_generator_lemma(p, 1, Sign::minus);
    if (!rep.support_identity || !rep.operator_identity) {
      ok = false;
      detail = rep.counterexample;
    }
  }
  report(11, ok, "generator lemma with support identity, p in {3,5}" +
                     (detail.empty() ? "" : " [" + detail + "]"),
         t0);
}

// 12. Borel invariants of the calibrated finite model at p = 3 and p = 5.
void criterion_12() {
  auto t0 = Clock::now();
  bool ok = true;
  std::string cal_note;
  for (long p : {3L, 5L}) {
    FiniteWeilModel model(p);
    WeilCalibration cal = model.calibrate();
    if (!cal.success) {
      ok = false;
      cal_note += " p=" + std::to_string(p) + ":" + cal.first_violation;
      continue;
    }
    cal_note += " p=" + std::to_string(p) + ":chi=" +
                det_twist_name(cal.chi) + ",gamma=" +
                std::to_string(cal.gamma);
    BorelInvariantsReport rep = borel_invariants(model);
    if (!(rep.dimension == 1 && rep.spanned_by_delta0 &&
          rep.eigenvalue_is_minus_one && rep.full_group_average_zero)) {
      ok = false;
      cal_note += " [" + rep.note + "]";
    }
  }
  report(12, ok, "Borel invariants 1-dimensional with eigenvalue -1;" +
                     cal_note,
         t0);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12();
  std::printf("%s (%d of 12 criteria failed)\n",
              failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
