#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "uhecke/cyclotomic.hpp"
#include "uhecke/sign.hpp"

namespace uhecke {

// The residue field F~ = F_p together with the quadratic extension model
// E~ = F_p[delta], delta^2 = nonresidue.
struct ResidueField {
  long p = 3;
  long nonresidue = 0;

  static ResidueField make(long p);
};

// Rank-2 (half-dimension d = 1) hermitian O_E-lattice in residue precision:
// scaled window coordinates live in (Z/p^2)[delta], the Gram matrix is
// diagonal with entries {1, p} (eps = -, dual index q^2) or {1, 1}
// (eps = +, self-dual).
struct ResidueHermitianLattice {
  long p = 3;
  long nonresidue = 0;
  Sign eps = Sign::minus;
  std::array<long, 2> gram{1, 3};

  static ResidueHermitianLattice make(long p, Sign eps);

  long mod() const { return p * p; }
  // The window A = w^{-1}Lambda / w Lambda has p^8 elements; a point is
  // encoded by its scaled coordinates (a1, b1, a2, b2), each in Z/p^2,
  // standing for x = p^{-1}((a1 + b1 d) e1 + (a2 + b2 d) e2).
  long window_size() const;
  std::array<long, 4> decode(long idx) const;
  long encode(const std::array<long, 4>& u) const;

  bool in_lambda(const std::array<long, 4>& u) const;
  // Membership in the dual lattice, decided by integrality of the pairing
  // against an O_E-basis of Lambda (scanned, not assumed).
  bool in_dual(const std::array<long, 4>& u) const;

  // Exponent e in Z/p^2 with psi_E((x, y)) = zeta_{p^2}^e for window points.
  long pairing_exponent(const std::array<long, 4>& ux,
                        const std::array<long, 4>& uy) const;
  // S in Z/p^2 with (x, x) = p^{-2} S (an F-valued hermitian square).
  long herm_square(const std::array<long, 4>& u) const;

  // Self-dual-measure constant of the Fourier transform on the window:
  // vol(w Lambda) = [Lambda^dual : Lambda]^{-1/2} / [Lambda : w Lambda].
  Rat fourier_constant() const;
};

// Function on the residue window with values in Q(zeta_{p^2}).
struct QuotientFunction {
  ResidueHermitianLattice lat;
  std::vector<CycScalar> values;  // window_size entries

  static QuotientFunction zero(const ResidueHermitianLattice& L);
};

QuotientFunction indicator_lambda(const ResidueHermitianLattice& L);
QuotientFunction indicator_dual(const ResidueHermitianLattice& L);
QuotientFunction delta_at(const ResidueHermitianLattice& L, long idx);

// Exact Fourier transform with the self-dual normalization, computed by
// four separable one-component passes.
QuotientFunction finite_fourier(const QuotientFunction& f);

// Hermitian inner product sum_x f(x) conj(g(x)).
CycScalar window_inner_product(const QuotientFunction& f,
                               const QuotientFunction& g);

struct GeneratorLemmaReport {
  long p = 0;
  int d = 1;
  Sign eps = Sign::minus;
  bool support_identity = false;
  bool operator_identity = false;
  bool pass = false;
  std::string counterexample;  // first offending window point, if any
};

// Exact verification of the lattice-generator identity on the residue
// window: the C-generator double-coset operator sends 1_Lambda to
// -1_Lambda (eps = -) resp. q * 1_Lambda (eps = +), and
// Lambda = {x in Lambda^dual : psi_F((x,x)) = 1} elementwise.
GeneratorLemmaReport verify_generator_lemma(long p, int d, Sign eps,
                                            bool parallel = true);

// ---------------------------------------------------------------------------
// Finite Weil model of U_2(F_p) acting on maps F_{p^2} -> Q(zeta_p).

struct Fp2Elt {
  long a = 0;
  long b = 0;  // a + b delta
};

struct UnitaryMat {
  std::array<std::array<Fp2Elt, 2>, 2> m;
};

enum class DetTwist { trivial, eta_norm, order2 };
std::string det_twist_name(DetTwist t);

struct WeilCalibration {
  bool success = false;
  DetTwist chi = DetTwist::trivial;
  int gamma = 1;
  std::vector<std::pair<DetTwist, int>> all_passing;
  std::string first_violation;  // for the failure report
};

class FiniteWeilModel {
 public:
  // Enumerates U_2(F_p) (no calibration yet).
  explicit FiniteWeilModel(long p);

  long p() const { return p_; }
  long nonresidue() const { return nonres_; }
  long dim() const { return p_ * p_; }
  const std::vector<UnitaryMat>& group() const { return group_; }
  const WeilCalibration& calibration() const { return calib_; }

  UnitaryMat mul(const UnitaryMat& a, const UnitaryMat& b) const;
  bool is_borel(const UnitaryMat& g) const;  // lower-left entry zero

  // Applies the calibrated operator omega(g) to a vector (length p^2).
  std::vector<CycScalar> apply(const UnitaryMat& g,
                               const std::vector<CycScalar>& v) const;
  std::vector<CycScalar> apply_with(DetTwist chi, int gamma,
                                    const UnitaryMat& g,
                                    const std::vector<CycScalar>& v) const;

  // Searches (chi, gamma); homomorphism property is checked on all pairs
  // for p = 3 and on sampled pairs (deterministic seed) plus all Borel
  // pairs for p = 5.
  WeilCalibration calibrate();

 private:
  long p_;
  long nonres_;
  std::vector<UnitaryMat> group_;
  WeilCalibration calib_;
};

struct BorelInvariantsReport {
  long p = 0;
  int dimension = -1;
  bool spanned_by_delta0 = false;
  // Normalized Bw1B eigenvalue (the raw big-cell sum divided by |B|).
  bool eigenvalue_is_minus_one = false;
  bool full_group_average_zero = false;
  bool pass = false;
  std::string note;
};

// Joint fixed space of the Borel operators plus the big-cell eigenvalue and
// full-group average checks (claim (a)).
BorelInvariantsReport borel_invariants(const FiniteWeilModel& model);

}  // namespace uhecke
