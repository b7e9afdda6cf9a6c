#ifndef HIGHERGPD_DOUBLE_GROUPOID_HPP
#define HIGHERGPD_DOUBLE_GROUPOID_HPP

#include <optional>
#include <string>
#include <vector>

#include "highergpd/core_algebra.hpp"

namespace hgpd {

/// A finite double groupoid
///
///          D ==> H
///          ||    ||
///          V ==> M
///
/// Each square alpha in D is drawn with V-edges horizontal (pointing left)
/// and H-edges vertical (pointing up):
///
///              t_V(alpha)
///           +<-----------+
///           ^            ^
///  t_H(alpha)|   alpha    | s_H(alpha)
///           |            |
///           +<-----------+
///              s_V(alpha)
///
/// `over_v` is the groupoid D => V: source s_V, target t_V, and composition
/// a1 ._V a3 stacks a1 on top of a3 (defined when s_V a1 == t_V a3).
/// `over_h` is the groupoid D => H: source s_H, target t_H, and composition
/// a1 ._H a2 places a2 to the right of a1 (defined when s_H a1 == t_H a2).
/// Objects of `over_v` are indexed as the arrows of `side_v`, and objects of
/// `over_h` as the arrows of `side_h`.
struct DoubleGroupoid {
  std::string name;
  Index base_count = 0;  // |M|
  FiniteGroupoid side_v;  // V => M
  FiniteGroupoid side_h;  // H => M
  FiniteGroupoid over_v;  // D => V
  FiniteGroupoid over_h;  // D => H

  Index square_count() const { return over_v.arrow_count(); }

  Index s_v(Index a) const { return over_v.src(a); }
  Index t_v(Index a) const { return over_v.tgt(a); }
  Index s_h(Index a) const { return over_h.src(a); }
  Index t_h(Index a) const { return over_h.tgt(a); }
  Index unit_v(Index theta) const { return over_v.unit(theta); }
  Index unit_h(Index eta) const { return over_h.unit(eta); }
  Index inv_v(Index a) const { return over_v.inv(a); }
  Index inv_h(Index a) const { return over_h.inv(a); }
  Index comp_v(Index upper, Index lower) const { return over_v.compose(upper, lower); }
  Index comp_h(Index left, Index right) const { return over_h.compose(left, right); }

  /// s o s_V (bottom-right corner) and t o t_V (top-left corner).
  Index s2(Index a) const { return side_v.src(s_v(a)); }
  Index t2(Index a) const { return side_v.tgt(t_v(a)); }
};

/// Checks both groupoid structures, the corner conditions, the source/target
/// homomorphism laws, the interchange law, and that the double-source map
/// lands in V x_{s,s} H.
///
/// The target law for vertical products is checked in its evident form
/// t_H(a1 ._V a3) = t_H(a1) . t_H(a3).
ValidationReport validate_double_groupoid(const DoubleGroupoid& d, Exec exec = Exec::parallel);

/// An element (theta, eta) of V x_{s,s} H.
struct SidePair {
  Index theta = 0;
  Index eta = 0;
  bool operator==(const SidePair&) const = default;
};

struct FullnessResult {
  bool full = true;
  std::optional<SidePair> unhit;  // first fiber-product element without a preimage
};

/// Whether the double-source map (s_V, s_H) is onto V x_{s,s} H.
FullnessResult is_full(const DoubleGroupoid& d);

/// Lookup table for preimages of the double-source map.
class DoubleSourceIndex {
 public:
  explicit DoubleSourceIndex(const DoubleGroupoid& d);
  /// Smallest square with (s_V, s_H) == (theta, eta), if any.
  std::optional<Index> preimage(Index theta, Index eta) const;

 private:
  Index h_count_ = 0;
  std::vector<std::optional<Index>> first_;
};

/// D x_{s_V,t_V} D ... : the groupoid of horizontally composable q-tuples of
/// squares over V^{(q)}, with vertical composition entrywise.
FiniteGroupoid horizontal_tuple_groupoid(const DoubleGroupoid& d, int q);
/// The groupoid of vertically composable p-tuples over H^{(p)}.
FiniteGroupoid vertical_tuple_groupoid(const DoubleGroupoid& d, int p);

// Constructors.

/// G x G over G (pair structure) and over M x M (product structure).
DoubleGroupoid pair_double_groupoid(const FiniteGroupoid& g, std::string name = "pair");
/// D = V = G, H = the unit groupoid on the objects of G; D => V is trivial
/// and D => H is G itself.
DoubleGroupoid groupoid_as_double(const FiniteGroupoid& g, std::string name = "groupoid");
/// Every side is the unit groupoid on `objects` points.
DoubleGroupoid unit_double_groupoid(Index objects);
/// Restriction to the squares marked in `keep`; both side groupoids are kept.
/// Throws StructuralError if the selection is not closed.
DoubleGroupoid restrict_squares(const DoubleGroupoid& d, const std::vector<bool>& keep,
                                std::string name);
/// Smallest sub-double-groupoid with the same sides containing `generators`
/// and every unit square.
DoubleGroupoid generated_sub_double_groupoid(const DoubleGroupoid& d,
                                             const std::vector<Index>& generators,
                                             std::string name);

// Named fixtures.
DoubleGroupoid pair2_fixture();          // pair double groupoid of the pair groupoid on {0,1}
DoubleGroupoid pair2_nonfull_fixture();  // unit-generated sub-double-groupoid of PAIR2
DoubleGroupoid z2grp_fixture();          // Z/2 over V, trivial H
DoubleGroupoid unit_fixture(Index objects);

}  // namespace hgpd

#endif
