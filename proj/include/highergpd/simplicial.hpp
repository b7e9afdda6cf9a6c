#ifndef HIGHERGPD_SIMPLICIAL_HPP
#define HIGHERGPD_SIMPLICIAL_HPP

#include <map>
#include <utility>
#include <vector>

#include "highergpd/core_algebra.hpp"

namespace hgpd {

using IndexMap = std::vector<Index>;

/// Simplicial set truncated at level N: finite levels X_0..X_N, faces
/// f_i^q : X_q -> X_{q-1} (0 <= i <= q <= N) and degeneracies
/// d_i^q : X_q -> X_{q+1} (0 <= i <= q < N), all as index maps.
class TruncSimplicialSet {
 public:
  TruncSimplicialSet() = default;
  /// faces[q] holds q+1 maps for q >= 1 (faces[0] is empty);
  /// degeneracies[q] holds q+1 maps for q < N.
  TruncSimplicialSet(std::vector<Index> sizes, std::vector<std::vector<IndexMap>> faces,
                     std::vector<std::vector<IndexMap>> degeneracies);

  int top() const { return static_cast<int>(sizes_.size()) - 1; }
  Index size(int q) const { return sizes_[static_cast<std::size_t>(q)]; }
  const std::vector<Index>& sizes() const { return sizes_; }

  Index face(int q, int i, Index x) const {
    return faces_[static_cast<std::size_t>(q)][static_cast<std::size_t>(i)][static_cast<std::size_t>(x)];
  }
  Index degeneracy(int q, int i, Index x) const {
    return degens_[static_cast<std::size_t>(q)][static_cast<std::size_t>(i)][static_cast<std::size_t>(x)];
  }
  const IndexMap& face_map(int q, int i) const {
    return faces_[static_cast<std::size_t>(q)][static_cast<std::size_t>(i)];
  }
  const IndexMap& degeneracy_map(int q, int i) const {
    return degens_[static_cast<std::size_t>(q)][static_cast<std::size_t>(i)];
  }
  const std::vector<std::vector<IndexMap>>& faces() const { return faces_; }
  const std::vector<std::vector<IndexMap>>& degeneracies() const { return degens_; }

  /// Overwrites one entry; used to build corrupted inputs.
  void set_face(int q, int i, Index x, Index value);
  void set_degeneracy(int q, int i, Index x, Index value);

  /// Levels 0..n with the maps among them.
  TruncSimplicialSet truncated(int n) const;

  bool operator==(const TruncSimplicialSet&) const = default;

 private:
  std::vector<Index> sizes_;
  std::vector<std::vector<IndexMap>> faces_;
  std::vector<std::vector<IndexMap>> degens_;
};

/// Exhaustive check of the face/face, degeneracy/degeneracy (i <= j) and
/// face/degeneracy identities within the stored range.
ValidationReport validate_simplicial(const TruncSimplicialSet& x, Exec exec = Exec::parallel);

/// Which bidegrees are stored: p <= max_p, q <= max_q, p + q <= max_total.
struct BidegreeRange {
  int max_p = 0;
  int max_q = 0;
  int max_total = 0;

  bool contains(int p, int q) const {
    return p >= 0 && q >= 0 && p <= max_p && q <= max_q && p + q <= max_total;
  }
  /// Everything with p + q <= n.
  static BidegreeRange triangle(int n) { return {n, n, n}; }
  /// Everything with p, q <= n.
  static BidegreeRange box(int n) { return {n, n, 2 * n}; }
  bool operator==(const BidegreeRange&) const = default;
};

/// Bisimplicial set stored over a downward-closed range of bidegrees.
///
/// Horizontal maps change p: h_i : X_{p,q} -> X_{p-1,q} and
/// eta_i : X_{p,q} -> X_{p+1,q}, 0 <= i <= p. Vertical maps change q:
/// v_j : X_{p,q} -> X_{p,q-1} and mu_j : X_{p,q} -> X_{p,q+1}, 0 <= j <= q.
/// A map is stored whenever its source and target bidegrees are.
class TruncBisimplicialSet {
 public:
  struct Level {
    Index size = 0;
    std::vector<IndexMap> h, v, eta, mu;
    bool operator==(const Level&) const = default;
  };

  TruncBisimplicialSet() = default;
  TruncBisimplicialSet(BidegreeRange range, std::map<std::pair<int, int>, Level> levels);

  const BidegreeRange& range() const { return range_; }
  bool has(int p, int q) const { return range_.contains(p, q); }
  const Level& level(int p, int q) const;
  Level& level_mut(int p, int q);
  Index size(int p, int q) const { return level(p, q).size; }

  Index h(int p, int q, int i, Index x) const {
    return level(p, q).h[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)];
  }
  Index v(int p, int q, int j, Index x) const {
    return level(p, q).v[static_cast<std::size_t>(j)][static_cast<std::size_t>(x)];
  }
  Index eta(int p, int q, int i, Index x) const {
    return level(p, q).eta[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)];
  }
  Index mu(int p, int q, int j, Index x) const {
    return level(p, q).mu[static_cast<std::size_t>(j)][static_cast<std::size_t>(x)];
  }

  const std::map<std::pair<int, int>, Level>& levels() const { return levels_; }
  bool operator==(const TruncBisimplicialSet&) const = default;

 private:
  BidegreeRange range_;
  std::map<std::pair<int, int>, Level> levels_;
};

/// Rows and columns are checked as simplicial sets, then the four
/// commutation families between horizontal and vertical maps.
ValidationReport validate_bisimplicial(const TruncBisimplicialSet& x, Exec exec = Exec::parallel);

/// Level q is X_{q,q}; face i is h_i v_i and degeneracy i is eta_i mu_i.
/// Defaults to the deepest level the storage supports.
TruncSimplicialSet diagonal(const TruncBisimplicialSet& x, int n = -1);

/// X_{p,q} = A_p x B_q with horizontal maps from A and vertical maps from B.
/// The pair (a, b) is stored at a * |B_q| + b.
TruncBisimplicialSet external_product(const TruncSimplicialSet& a, const TruncSimplicialSet& b);

/// Level maps phi_q : X_q -> Y_q commuting with all faces and degeneracies.
ValidationReport check_simplicial_map(const TruncSimplicialSet& x, const TruncSimplicialSet& y,
                                      const std::vector<IndexMap>& maps);
/// As check_simplicial_map, and additionally each phi_q is a bijection.
ValidationReport check_simplicial_isomorphism(const TruncSimplicialSet& x,
                                              const TruncSimplicialSet& y,
                                              const std::vector<IndexMap>& maps);

/// The constant simplicial set on `points` points.
TruncSimplicialSet constant_simplicial(Index points, int n);

/// Whether every face map is onto.
bool faces_surjective(const TruncSimplicialSet& x);

}  // namespace hgpd

#endif
