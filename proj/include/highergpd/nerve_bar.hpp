#ifndef HIGHERGPD_NERVE_BAR_HPP
#define HIGHERGPD_NERVE_BAR_HPP

#include <array>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "highergpd/double_groupoid.hpp"
#include "highergpd/simplicial.hpp"

namespace hgpd {

struct TupleHash {
  std::size_t operator()(const Tuple& t) const noexcept;
};

/// Elements of one level in lexicographic order with reverse lookup.
class TupleLevel {
 public:
  TupleLevel() = default;
  explicit TupleLevel(std::vector<Tuple> elements);

  Index size() const { return static_cast<Index>(elements_.size()); }
  const Tuple& operator[](Index i) const { return elements_[static_cast<std::size_t>(i)]; }
  const std::vector<Tuple>& elements() const { return elements_; }
  std::optional<Index> find(const Tuple& t) const;

 private:
  std::vector<Tuple> elements_;
  std::unordered_map<Tuple, Index, TupleHash> index_;
};

/// Nerve of a groupoid: level q holds the composable q-tuples (level 0 the
/// objects as 1-tuples). Inner faces compose neighbours, outer faces drop an
/// end, degeneracies insert units.
struct GroupoidNerve {
  TruncSimplicialSet simplicial;
  std::vector<TupleLevel> levels;
};

GroupoidNerve nerve_with_elements(const FiniteGroupoid& g, int n);
TruncSimplicialSet nerve(const FiniteGroupoid& g, int n);

/// Double nerve N_{p,q}D. An element of bidegree (p, q) is stored as a flat
/// row-major array with max(p,1) rows and max(q,1) columns:
///   p, q >= 1: the p x q array of squares, s_H(a_ij) = t_H(a_i(j+1)) and
///              s_V(a_ij) = t_V(a_(i+1)j);
///   p = 0:     a composable q-tuple of V (q >= 1) or an object (q = 0);
///   q = 0:     a composable p-tuple of H.
/// Horizontal maps act on rows (composition ._V), vertical maps on columns
/// (composition ._H).
struct DoubleNerve {
  DoubleGroupoid groupoid;
  TruncBisimplicialSet bisimplicial;
  std::map<std::pair<int, int>, TupleLevel> elements;

  const TupleLevel& at(int p, int q) const;
};

DoubleNerve double_nerve_with_elements(const DoubleGroupoid& d, BidegreeRange range,
                                       Exec exec = Exec::parallel);
TruncBisimplicialSet double_nerve(const DoubleGroupoid& d, int n);

/// Bar construction. Level r consists of the tuples (x_0, ..., x_r) with
/// x_i in X_{i,r-i} and v_0(x_i) = h_{i+1}(x_{i+1}). Face i drops x_i,
/// applies v_{i-j} to x_j for j < i and h_i to x_j for j > i. Degeneracy i
/// applies mu_{i-j} to x_j for j <= i and inserts eta_i(x_j) for j >= i.
struct BarComplex {
  TruncSimplicialSet simplicial;
  std::vector<TupleLevel> components;  // raw (x_0, ..., x_r) per level
};

BarComplex bar_with_components(const TruncBisimplicialSet& x, int n, Exec exec = Exec::parallel);
TruncSimplicialSet bar(const TruncBisimplicialSet& x, int n);

/// Decoded simplex of the bar construction on a double nerve.
///   r = 0: an object m;
///   r = 1: (theta, eta) with s(theta) = t(eta);
///   r >= 2: theta, the triangular array alpha_ij (1 <= i <= j <= r-1) and eta.
/// alpha is stored row by row: (1,1), (1,2), ..., (1,r-1), (2,2), ...
struct WbarSimplex {
  int r = 0;
  Index m = 0;
  Index theta = 0;
  Index eta = 0;
  std::vector<Index> alpha;

  Index a(int i, int j) const { return alpha[static_cast<std::size_t>(offset(r, i, j))]; }
  Index& a(int i, int j) { return alpha[static_cast<std::size_t>(offset(r, i, j))]; }
  static int offset(int r, int i, int j);
  static int alpha_count(int r) { return r < 2 ? 0 : (r - 1) * r / 2; }

  bool operator==(const WbarSimplex&) const = default;
};

/// Bar construction on the double nerve of D, with the decoded view.
class WbarModel {
 public:
  WbarModel(const DoubleGroupoid& d, int n, Exec exec = Exec::parallel);

  const DoubleGroupoid& groupoid() const { return nerve_.groupoid; }
  const DoubleNerve& nerve() const { return nerve_; }
  const BarComplex& complex() const { return bar_; }
  const TruncSimplicialSet& simplicial() const { return bar_.simplicial; }
  int top() const { return bar_.simplicial.top(); }

  WbarSimplex decode(int r, Index x) const;
  /// Index of the simplex with the given decoded data, or nothing when the
  /// data violate a composability condition.
  std::optional<Index> encode(const WbarSimplex& s) const;

 private:
  DoubleNerve nerve_;
  BarComplex bar_;
};

/// The three faces of a decoded 2-simplex (theta, alpha, eta):
///   f_0 = (s_V alpha, eta), f_1 = (theta . t_V alpha, s_H alpha . eta),
///   f_2 = (theta, t_H alpha).
std::array<WbarSimplex, 3> wbar_face2(const DoubleGroupoid& d, const WbarSimplex& x);
/// Faces of a decoded 1-simplex: f_0 = s(eta), f_1 = t(theta).
std::array<WbarSimplex, 2> wbar_face1(const DoubleGroupoid& d, const WbarSimplex& x);
/// Degeneracies in decoded form:
///   d_0^0(m) = (1_m, 1_m), d_0^1(theta, eta) = (1, 1_V(theta), eta),
///   d_1^1(theta, eta) = (theta, 1_H(eta), 1).
WbarSimplex wbar_degeneracy0(const DoubleGroupoid& d, const WbarSimplex& x);
std::array<WbarSimplex, 2> wbar_degeneracy1(const DoubleGroupoid& d, const WbarSimplex& x);

}  // namespace hgpd

#endif
