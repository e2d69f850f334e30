#include "uhecke/doubling.hpp"

#include <stdexcept>

namespace uhecke {

namespace {

RFunc q_pow(int e) { return RFunc::variable("q", e); }
RFunc x_pow(int e) { return RFunc::variable("X", e); }

// 1 - q^a X^b as a rational function.
RFunc one_minus_qx(int a, int b) {
  return RFunc(Rat(1)) - RFunc(LPoly::monomial(Rat(1), {"q", "X"}, {a, b}));
}

}  // namespace

SatakeParams SatakeParams::from_half_integers(const std::vector<Rat>& sigma) {
  SatakeParams out;
  for (const Rat& s : sigma) {
    Rat e = s * 2;
    if (e.get_den() != 1)
      throw std::invalid_argument(
          "SatakeParams: entries must be half-integers");
    out.u.push_back(q_pow(static_cast<int>(e.get_num().get_si())));
  }
  return out;
}

SatakeParams SatakeParams::symbolic(int m) {
  SatakeParams out;
  for (int i = 1; i <= m; ++i)
    out.u.push_back(RFunc::variable("u" + std::to_string(i)));
  return out;
}

RFunc zeta_F_at(int k) { return one_minus_qx(-k, 2).inverse(); }

RFunc zeta_E_at(int k) { return one_minus_qx(-2 * k, 4).inverse(); }

RFunc shift_half(const RFunc& f) { return f.scale_square("X", q_pow(-1)); }

RFunc flip_s(const RFunc& f) {
  return f.substitute({{"X", x_pow(-1)}});
}

RFunc abc(const DoublingContext& ctx, ABC which) {
  int r = ctx.r;
  switch (which) {
    case ABC::a: {
      RFunc out(Rat(1));
      for (int i = 1; i <= 2 * r; ++i) {
        int sgn = i % 2 == 0 ? 1 : -1;
        out = out * (RFunc(Rat(1)) -
                     RFunc(LPoly::monomial(Rat(sgn), {"q", "X"}, {i - 1, 2})))
                       .inverse();
      }
      return out.reduced();
    }
    case ABC::b: {
      RFunc out(Rat(1));
      for (int i = 1; i <= 2 * r; ++i) {
        int sgn = i % 2 == 0 ? 1 : -1;
        out = out * (RFunc(Rat(1)) -
                     RFunc(LPoly::monomial(Rat(sgn), {"q", "X"}, {-i, 2})))
                       .inverse();
      }
      return out.reduced();
    }
    case ABC::c: {
      if (ctx.eps == Sign::plus) return RFunc(Rat(1));
      LPoly num = LPoly(Rat(1)) + LPoly::variable("q");
      LPoly den = LPoly::monomial(Rat(r % 2 == 0 ? 1 : -1), {"q"}, {r + 1}) *
                  (LPoly(Rat(1)) + LPoly::variable("q", 2 * r - 1)) *
                  (LPoly(Rat(1)) -
                   LPoly::monomial(Rat(1), {"q", "X"}, {-2 * r, 2}));
      return RFunc(num, den);
    }
  }
  throw std::logic_error("abc: unreachable");
}

RFunc l_factor(const DoublingContext& ctx, const SatakeParams& sigma) {
  if (sigma.rank() != ctx.r)
    throw std::invalid_argument("l_factor: rank mismatch");
  RFunc x2 = x_pow(2);
  RFunc out(Rat(1));
  // For eps = - the extra (1 - q^{1-2s}) numerator cancels against a
  // denominator factor whenever some parameter equals q^{+-1}; do the
  // cancellation symbolically so the reduced form stays visible.
  bool extra_numerator = ctx.eps == Sign::minus;
  RFunc qx = q_pow(1) * x2;
  for (const RFunc& u : sigma.u) {
    RFunc f1 = RFunc(Rat(1)) - u * x2;
    RFunc f2 = RFunc(Rat(1)) - u.inverse() * x2;
    if (extra_numerator && f1 == RFunc(Rat(1)) - qx) {
      extra_numerator = false;
      out = out * f2.inverse();
    } else if (extra_numerator && f2 == RFunc(Rat(1)) - qx) {
      extra_numerator = false;
      out = out * f1.inverse();
    } else {
      out = out * (f1 * f2).inverse();
    }
  }
  if (extra_numerator) out = out * one_minus_qx(1, 2);
  return out.reduced();
}

RFunc zeta_value(const DoublingContext& ctx, const SatakeParams& sigma) {
  return (abc(ctx, ABC::c) * shift_half(l_factor(ctx, sigma)) /
          abc(ctx, ABC::b))
      .reduced();
}

RFunc gk_constant(const DoublingContext& ctx, GKForm form) {
  int r = ctx.r;
  if (ctx.eps == Sign::plus) {
    RFunc out(Rat(1));
    for (int i = 1; i <= r; ++i)
      out = out * zeta_E_at(2 * i) / zeta_E_at(r + i);
    for (int i = 1; i <= r; ++i)
      out = out * zeta_F_at(2 * i - 1) / zeta_F_at(2 * i);
    return out.reduced();
  }
  if (form == GKForm::product) {
    RFunc out(Rat(1));
    for (int i = 1; i <= r; ++i) {
      for (int j = i + 1; j <= r; ++j) {
        out = out * one_minus_qx(-2 * (2 * r - i - j + 2), 4) /
              one_minus_qx(-2 * (2 * r - i - j + 1), 4);
      }
    }
    for (int i = 1; i <= r; ++i) {
      RFunc num =
          RFunc(LPoly::monomial(Rat(1), {"q", "X"}, {2 * i - 2 * r, 2})) -
          RFunc(Rat(1));
      RFunc den = q_pow(1) * one_minus_qx(2 * i - 2 * r - 1, 2);
      out = out * num / den;
    }
    return out.reduced();
  }
  // Closed form.
  RFunc out(LPoly::monomial(Rat(r % 2 == 0 ? 1 : -1), {"q"}, {-r}));
  for (int i = 1; i <= r; ++i)
    out = out * zeta_E_at(2 * i) / zeta_E_at(r + i);
  for (int i = 1; i <= r; ++i)
    out = out * zeta_F_at(2 * i - 1) / zeta_F_at(2 * i - 2);
  return out.reduced();
}

RFunc intertwining_constant(const DoublingContext& ctx) {
  int r = ctx.r;
  RFunc ab = abc(ctx, ABC::a) / abc(ctx, ABC::b);
  if (ctx.eps == Sign::plus) return ab.reduced();
  RFunc raw(Rat(1));
  for (int i = 1; i <= 2 * r; ++i) {
    for (int j = i + 1; j <= 2 * r; ++j) {
      raw = raw * one_minus_qx(-2 * (2 * r - i - j + 2), 4) /
            one_minus_qx(-2 * (2 * r - i - j + 1), 4);
    }
  }
  for (int i = 1; i <= 2 * r; ++i) {
    RFunc num =
        RFunc(LPoly::monomial(Rat(1), {"q", "X"}, {2 * i - 2 * r, 2})) -
        RFunc(Rat(1));
    RFunc den = q_pow(1) * one_minus_qx(2 * i - 2 * r - 1, 2);
    raw = raw * num / den;
  }
  RFunc c_here = abc(ctx, ABC::c);
  RFunc closed = -x_pow(2) * ab * c_here / flip_s(c_here);
  if (!(raw == closed))
    throw std::logic_error(
        "intertwining_constant: raw product disagrees with closed form");
  return closed.reduced();
}

RFunc normalized_intertwining_constant(const DoublingContext& ctx) {
  // q^{4crs} = X^{-4cr}.
  RFunc factor = x_pow(-4 * ctx.c * ctx.r);
  RFunc b = abc(ctx, ABC::b);
  RFunc a = abc(ctx, ABC::a);
  return (factor * flip_s(b) / a * intertwining_constant(ctx)).reduced();
}

ReprClass classify(const SatakeParams& sigma, Sign eps) {
  if (eps == Sign::plus) return ReprClass::unramified;
  for (const RFunc& u : sigma.u)
    if (u == q_pow(1) || u == q_pow(-1)) return ReprClass::almost_unramified;
  return ReprClass::neither;
}

std::string repr_class_name(ReprClass c) {
  switch (c) {
    case ReprClass::unramified:
      return "unramified";
    case ReprClass::almost_unramified:
      return "almost_unramified";
    case ReprClass::neither:
      return "neither";
  }
  return "?";
}

RFunc epsilon_factor(const DoublingContext& ctx, const SatakeParams& sigma) {
  // q^{2s-1} = q^{-1} X^{-2} per slot.
  RFunc y(LPoly::monomial(Rat(1), {"q", "X"}, {-1, -2}));
  if (ctx.eps == Sign::plus) return y.pow(2 * ctx.c * ctx.r);
  if (classify(sigma, Sign::minus) != ReprClass::almost_unramified)
    throw std::domain_error(
        "epsilon_factor: sigma must contain 1/2 or -1/2 when eps = -");
  return -y.pow(2 * ctx.c * ctx.r - 1);
}

ThetaParamPair theta_parameters(int r, const HermitianSpaceDesc& V,
                                const SatakeParams& sigma) {
  int s = V.witt();
  int m = std::min(r, s);
  if (sigma.rank() != m)
    throw std::invalid_argument("theta_parameters: rank mismatch");
  int e1 = sign_one(V.eps);
  ThetaParamPair out;
  for (const RFunc& u : sigma.u) out.left.u.push_back(u.inverse().reduced());
  for (int k = 1; k <= r - m; ++k)
    out.left.u.push_back(q_pow(-(2 * (k - 1) + e1)));
  for (int j = 1; j <= s - m; ++j)
    out.right.u.push_back(q_pow(-(2 * j - e1)));
  for (const RFunc& u : sigma.u) out.right.u.push_back(u);
  return out;
}

namespace {

// Coefficients of p (in q, X with only even X-exponents) as a polynomial in
// Y = X^2, lowest exponent first.
std::vector<LPoly> y_coefficients(const LPoly& p) {
  int lo = p.min_exponent("X");
  int hi = p.max_exponent("X");
  if (lo % 2 != 0 || hi % 2 != 0)
    throw std::logic_error("y_coefficients: odd X-exponent");
  auto cs = p.coeffs_in("X");
  std::vector<LPoly> out;
  for (int e = lo; e <= hi; e += 2) {
    if (e + 1 <= hi && !cs[e + 1 - lo].is_zero())
      throw std::logic_error("y_coefficients: odd X-exponent");
    out.push_back(cs[e - lo]);
  }
  return out;
}

// Order of vanishing at Y = t (a nonzero q-monomial) of the polynomial with
// the given Y-coefficients, by repeated synthetic division.
int order_at(std::vector<LPoly> c, const LPoly& t) {
  if (c.empty()) throw std::logic_error("order_at: zero polynomial");
  for (int ord = 0;; ++ord) {
    LPoly value;
    LPoly tp(Rat(1));
    for (const LPoly& ck : c) {
      value += ck * tp;
      tp *= t;
    }
    if (!value.is_zero()) return ord;
    // Synthetic division by (Y - t).
    std::vector<LPoly> b(c.size() - 1);
    LPoly carry;
    for (size_t k = c.size(); k-- > 1;) {
      carry = k + 1 == c.size() ? c[k] : c[k] + t * carry;
      b[k - 1] = carry;
    }
    c = std::move(b);
    if (ord > 8) throw std::logic_error("order_at: runaway order");
  }
}

}  // namespace

int theta_vanishing_order(int r, const HermitianSpaceDesc& V) {
  int s0 = V.d - r;
  int min_s0 = V.eps == Sign::plus ? -r : -r + 1;
  if (s0 < min_s0)
    throw std::domain_error("theta_vanishing_order: s0 below admissible range");
  DoublingContext ctx{r, V.eps, 0};
  RFunc f = (abc(ctx, ABC::c) / abc(ctx, ABC::b)).reduced();
  LPoly t = LPoly::monomial(Rat(1), {"q"}, {-2 * s0});
  int num_ord = order_at(y_coefficients(f.num()), t);
  int den_ord = order_at(y_coefficients(f.den()), t);
  return num_ord - den_ord;
}

}  // namespace uhecke
