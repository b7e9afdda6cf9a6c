#ifndef HIGHERGPD_LINSYMP_HPP
#define HIGHERGPD_LINSYMP_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "highergpd/rational_linalg.hpp"
#include "highergpd/validation.hpp"

namespace hgpd {

/// Groupoid object in rational vector spaces: arrows G over objects M, with
/// comp acting on G (+) G and evaluated on the fiber product s g1 = t g2.
struct LinearGroupoid {
  int objects = 0;
  int arrows = 0;
  QMatrix src;   // objects x arrows
  QMatrix tgt;   // objects x arrows
  QMatrix unit;  // arrows x objects
  QMatrix inv;   // arrows x arrows
  QMatrix comp;  // arrows x 2 arrows

  /// Basis of G x_{s,t} G inside G (+) G.
  Subspace composable() const;
  bool operator==(const LinearGroupoid&) const = default;
};

/// The unique linear groupoid with these source, target and unit maps:
/// g1 . g2 = g1 + g2 - 1(s g1), g^-1 = 1(s g) + 1(t g) - g.
LinearGroupoid linear_groupoid(const QMatrix& src, const QMatrix& tgt, const QMatrix& unit);
ValidationReport validate_linear_groupoid(const LinearGroupoid& g);

/// Linear double groupoid with an alternating form omega on D. Conventions as
/// for DoubleGroupoid: over_v is D => V, over_h is D => H.
struct LinearDoubleGroupoid {
  std::string name;
  int dim_m = 0;
  LinearGroupoid side_v;  // V => M
  LinearGroupoid side_h;  // H => M
  LinearGroupoid over_v;  // D => V
  LinearGroupoid over_h;  // D => H
  QMatrix omega;          // dim D x dim D

  int dim_v() const { return side_v.arrows; }
  int dim_h() const { return side_h.arrows; }
  int dim_d() const { return over_v.arrows; }
  bool operator==(const LinearDoubleGroupoid&) const = default;
};

/// Groupoid laws of the four structures, corner conditions, source/target
/// homomorphism laws and the interchange law, each on a basis of the relevant
/// fiber product; omega must be alternating.
ValidationReport validate_linear_double_groupoid(const LinearDoubleGroupoid& l);

// Fixtures.

/// D = V (+) V* over V and over V*, M = 0, dim V = n. omega((a,x),(b,y)) =
/// y^T B a - x^T B b for an n x n matrix B (the identity when omitted).
LinearDoubleGroupoid vv_fixture(int n, std::optional<QMatrix> pairing = std::nullopt);
/// Invertible n x n matrix with small random rational entries.
QMatrix random_pairing(int n, std::uint64_t seed);
/// Every space zero.
LinearDoubleGroupoid linear_unit_fixture();
/// T*Q^k = Q^k (+) Q^k* over Q^k with fiberwise addition.
LinearGroupoid cotangent_groupoid(int k);
/// D = G x G over G (pair structure) and over M x M (product structure), with
/// omega = beta (+) -beta.
LinearDoubleGroupoid linear_pair_fixture(const LinearGroupoid& g, const QMatrix& beta,
                                         std::string name = "pair");

/// Basis of the alternating forms on D that are multiplicative for both
/// groupoid structures.
std::vector<QMatrix> multiplicative_forms(const LinearDoubleGroupoid& l);
/// Integer combination of `basis` with coefficients in [-3, 3].
QMatrix random_form(const std::vector<QMatrix>& basis, int dim, std::uint64_t seed);

/// Levels 0..3 of the bar construction as subspaces of the ambient products
///   W0 = M, W1 = V (+) H, W2 = V (+) D (+) H, W3 = V (+) D (+) D (+) D (+) H.
/// Face and degeneracy maps are ambient matrices (valid on the level
/// subspaces) and, in the `_coords` variants, matrices between level bases.
struct LinearBar {
  std::array<Subspace, 4> level;
  std::array<std::vector<QMatrix>, 4> face;          // face[q][i] : W_q -> W_{q-1}
  std::array<std::vector<QMatrix>, 3> degeneracy;    // degeneracy[q][i] : W_q -> W_{q+1}
  std::array<std::vector<QMatrix>, 4> face_coords;
  std::array<std::vector<QMatrix>, 3> degeneracy_coords;
  QMatrix nu;  // W2 ambient -> D, (theta, alpha, eta) -> alpha
};

/// Throws StructuralError when a map leaves its level.
LinearBar linear_bar_levels(const LinearDoubleGroupoid& l);

/// Alternating form on a subspace, in the subspace basis.
struct TwoForm {
  Subspace space;
  QMatrix matrix;

  int rank() const { return hgpd::rank(matrix); }
  /// Radical in ambient coordinates.
  Subspace kernel_ambient() const;
};

/// Omega = nu^* omega on W2.
TwoForm pullback_form(const LinearDoubleGroupoid& l, const LinearBar& bar);

struct MultiplicativityCheck {
  bool multiplicative = false;
  QMatrix residual;  // sum_i (-1)^i (f_i)^* Omega on W3, in the W3 basis
};

MultiplicativityCheck check_multiplicative(const LinearBar& bar, const TwoForm& omega);

struct KernelPullbacks {
  Subspace w10;  // (delta_0^1)^* ker Omega, ambient coordinates of W1
  Subspace w11;  // (delta_1^1)^* ker Omega
};

KernelPullbacks kernel_pullbacks(const LinearBar& bar, const TwoForm& omega);

struct ConditionResult {
  bool holds = false;
  std::string detail;
  QVector witness;  // ambient vector exhibiting a failure, empty when holds
};

struct ConditionReport {
  ConditionResult cond1;
  ConditionResult cond2;
  ConditionResult cond3;
  int dim_w1 = 0;
  int dim_w2 = 0;
  int rank_omega_d = 0;
  int rank_omega = 0;
  int dim_w00 = 0;
  int dim_w10 = 0;
  int dim_w11 = 0;

  bool all() const { return cond1.holds && cond2.holds && cond3.holds; }
};

/// (1) f_2 maps ker f_0 cap ker Omega isomorphically onto (delta_1^1)^* ker Omega,
/// (2) f_0 maps ker f_2 cap ker Omega isomorphically onto (delta_0^1)^* ker Omega,
/// (3) W1 = W00 (+) W10 (+) W11 with W00 the image of delta_0^0.
/// Throws InputError when Omega is not multiplicative.
ConditionReport check_conditions(const LinearBar& bar, const TwoForm& omega);

struct PairingReport {
  QMatrix matrix;  // <a_i, b_j> over the bases of W11 and W10
  Subspace w11;
  Subspace w10;
  bool nondegenerate = false;
};

/// <a, b> = Omega(delta_0^1 a, delta_1^1 b) for a in W11, b in W10. Throws
/// IdentificationUnavailable when condition (3) fails.
PairingReport pairing_matrix(const LinearBar& bar, const TwoForm& omega);
/// Throws InputError when a is not in W11 or b is not in W10.
Rational induced_pairing(const LinearBar& bar, const TwoForm& omega, const QVector& a, const QVector& b);

struct TheoremCheck {
  bool omega_nondegenerate = false;
  bool conditions = false;
  bool holds = false;  // omega_nondegenerate == conditions
  ConditionReport report;
};

/// Throws InputError when Omega is not multiplicative.
TheoremCheck verify_theorem(const LinearDoubleGroupoid& l);

}  // namespace hgpd

#endif
