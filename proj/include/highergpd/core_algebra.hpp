#ifndef HIGHERGPD_CORE_ALGEBRA_HPP
#define HIGHERGPD_CORE_ALGEBRA_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "highergpd/parallel.hpp"
#include "highergpd/validation.hpp"

namespace hgpd {

using Index = std::int32_t;
using Tuple = std::vector<Index>;

/// A groupoid on finitely many objects and arrows, stored as lookup tables.
///
/// Composition follows the "after" convention: compose(a, b) = a . b is
/// defined iff src(a) == tgt(b), and then runs from src(b) to tgt(a).
/// Undefined composites are absent from the table; asking for one through
/// compose() throws UndefinedOperation.
class FiniteGroupoid {
 public:
  FiniteGroupoid() = default;

  /// Takes the tables as given; use validate_groupoid() to check them.
  /// `comp` is row-major arrow_count x arrow_count.
  FiniteGroupoid(Index objects, std::vector<Index> src, std::vector<Index> tgt,
                 std::vector<Index> unit, std::vector<Index> inv,
                 std::vector<std::optional<Index>> comp);

  /// Builds the composition table from `mul`, called on every pair with
  /// src(a) == tgt(b).
  static FiniteGroupoid from_rule(Index objects, std::vector<Index> src, std::vector<Index> tgt,
                                  std::vector<Index> unit, std::vector<Index> inv,
                                  const std::function<Index(Index, Index)>& mul);

  Index object_count() const { return objects_; }
  Index arrow_count() const { return static_cast<Index>(src_.size()); }

  Index src(Index a) const { return src_[static_cast<std::size_t>(a)]; }
  Index tgt(Index a) const { return tgt_[static_cast<std::size_t>(a)]; }
  Index unit(Index m) const { return unit_[static_cast<std::size_t>(m)]; }
  Index inv(Index a) const { return inv_[static_cast<std::size_t>(a)]; }

  bool composable(Index a, Index b) const { return src(a) == tgt(b); }
  std::optional<Index> try_compose(Index a, Index b) const;
  Index compose(Index a, Index b) const;

  /// Arrows whose target is `m`, ascending.
  const std::vector<Index>& arrows_into(Index m) const { return into_[static_cast<std::size_t>(m)]; }
  /// Arrows whose source is `m`, ascending.
  const std::vector<Index>& arrows_out_of(Index m) const { return out_of_[static_cast<std::size_t>(m)]; }

  const std::vector<Index>& src_table() const { return src_; }
  const std::vector<Index>& tgt_table() const { return tgt_; }
  const std::vector<Index>& unit_table() const { return unit_; }
  const std::vector<Index>& inv_table() const { return inv_; }
  const std::vector<std::optional<Index>>& comp_table() const { return comp_; }

  bool operator==(const FiniteGroupoid& o) const;

  /// Overwrites one composition entry. Used to build corrupted fixtures.
  void set_composite(Index a, Index b, std::optional<Index> value);
  void set_inverse(Index a, Index value) { inv_[static_cast<std::size_t>(a)] = value; }

 private:
  void build_incidence();

  Index objects_ = 0;
  std::vector<Index> src_, tgt_, unit_, inv_;
  std::vector<std::optional<Index>> comp_;
  std::vector<std::vector<Index>> into_, out_of_;
};

/// Checks table consistency and every groupoid axiom exhaustively.
ValidationReport validate_groupoid(const FiniteGroupoid& g, Exec exec = Exec::parallel);

/// All (g_1, ..., g_q) with src(g_i) == tgt(g_{i+1}), in lexicographic order.
std::vector<Tuple> composable_tuples(const FiniteGroupoid& g, int q);

// Standard examples.
FiniteGroupoid unit_groupoid(Index objects);
/// Arrow x*n + y runs from y to x.
FiniteGroupoid pair_groupoid(Index objects);
/// Z/n as a one-object groupoid; arrow k is the residue k.
FiniteGroupoid cyclic_group(Index order);
/// Arrow (a, b) is stored at a * |G2| + b; objects likewise.
FiniteGroupoid product_groupoid(const FiniteGroupoid& g1, const FiniteGroupoid& g2);

struct GroupoidIsomorphism {
  std::vector<Index> objects;
  std::vector<Index> arrows;
};

/// Searches for an isomorphism by backtracking; intended for small groupoids.
std::optional<GroupoidIsomorphism> find_isomorphism(const FiniteGroupoid& a, const FiniteGroupoid& b);

}  // namespace hgpd

#endif
