#pragma once

#include <string>
#include <vector>

#include "uhecke/rfunc.hpp"
#include "uhecke/satake.hpp"
#include "uhecke/sign.hpp"

namespace uhecke {

// Satake parameters carried multiplicatively: entry u_i stands for q^{2 s_i}
// for a half-integer s_i, or is a fresh symbolic variable. All entries are
// nonzero rational functions in q (and possibly symbolic u-variables).
struct SatakeParams {
  std::vector<RFunc> u;

  int rank() const { return static_cast<int>(u.size()); }

  // u_i = q^{2 sigma_i} for half-integers sigma_i given as (num, den=2).
  static SatakeParams from_half_integers(const std::vector<Rat>& sigma);
  // Fresh symbolic parameters u1..um.
  static SatakeParams symbolic(int m);
};

struct DoublingContext {
  int r = 1;
  Sign eps = Sign::plus;
  int c = 0;  // conductor exponent of psi_F
};

// All L-factor values live in variables (q, X) with X = q^{-s}, plus any
// symbolic u-variables of the Satake parameters. Only even powers of X occur
// in a, b, L, c; epsilon factors may carry odd powers.

// zeta_F(2s + k) and zeta_E(2s + k) as rational functions of (q, X).
RFunc zeta_F_at(int k);
RFunc zeta_E_at(int k);

// The shift s -> s + 1/2 (realized as X^2 -> q^{-1} X^2) and s -> -s.
RFunc shift_half(const RFunc& f);
RFunc flip_s(const RFunc& f);

enum class ABC { a, b, c };
RFunc abc(const DoublingContext& ctx, ABC which);

// L^sigma_eps(s); invariant under permutation and inversion of the entries.
RFunc l_factor(const DoublingContext& ctx, const SatakeParams& sigma);

// Closed form c^r_eps(s) * L^sigma_eps(s + 1/2) / b_{2r}(s).
RFunc zeta_value(const DoublingContext& ctx, const SatakeParams& sigma);

enum class GKForm { product, closed };
// Gindikin-Karpelevich constant C^eps_{w'_r}(s): the raw zeta-ratio product
// or the telescoped closed form (they agree; for eps = + the two coincide by
// construction).
RFunc gk_constant(const DoublingContext& ctx, GKForm form);

// Scalar by which M(s) acts on the distinguished section; for eps = - the
// raw double product and the closed form -q^{-2s} (a/b)(c(s)/c(-s)) are both
// built and checked equal.
RFunc intertwining_constant(const DoublingContext& ctx);

// Scalar of the normalized operator q^{4crs} (b_{2r}(-s)/a_{2r}(s)) M(s).
RFunc normalized_intertwining_constant(const DoublingContext& ctx);

// The monomial epsilon factor; for eps = - the Satake parameter must
// contain q or q^{-1} (throws std::domain_error otherwise).
RFunc epsilon_factor(const DoublingContext& ctx, const SatakeParams& sigma);

enum class ReprClass { unramified, almost_unramified, neither };
ReprClass classify(const SatakeParams& sigma, Sign eps);
std::string repr_class_name(ReprClass c);

// The two theta parameter lists in exponentiated coordinates.
struct ThetaParamPair {
  SatakeParams left;   // rank r
  SatakeParams right;  // rank s
};
ThetaParamPair theta_parameters(int r, const HermitianSpaceDesc& V,
                                const SatakeParams& sigma);

// Order of vanishing of c^r_eps(s)/b_{2r}(s) at s_0 = d - r, computed by
// exact synthetic division in X^2. Throws std::domain_error for s_0 below
// the admissible range (-r for eps = +, -r+1 for eps = -).
int theta_vanishing_order(int r, const HermitianSpaceDesc& V);

}  // namespace uhecke
