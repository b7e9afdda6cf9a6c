#ifndef HIGHERGPD_HOMOLOGY_HPP
#define HIGHERGPD_HOMOLOGY_HPP

#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "highergpd/simplicial.hpp"

namespace hgpd {

using Integer = boost::multiprecision::cpp_int;

/// Column-sparse integer matrix; each column lists (row, value) by row.
struct SparseMatrix {
  Index rows = 0;
  Index cols = 0;
  std::vector<std::vector<std::pair<Index, long long>>> columns;
};

using DenseMatrix = std::vector<std::vector<Integer>>;

DenseMatrix to_dense(const SparseMatrix& m);

struct SmithResult {
  Index rank = 0;
  std::vector<Integer> torsion;  // invariant factors greater than 1, ascending
  bool operator==(const SmithResult&) const = default;
};

/// Unit-pivot elimination on the sparse matrix, then a dense Smith normal
/// form of the remaining block.
SmithResult smith(const SparseMatrix& m);
/// Dense Smith normal form of the whole matrix.
SmithResult smith_dense(DenseMatrix m);

/// Free chain complex with simplex bases. boundary[q] maps degree q to q-1
/// (boundary[0] is the zero map to nothing).
struct ChainComplex {
  std::vector<Index> ranks;
  std::vector<SparseMatrix> boundary;
  bool normalized = false;

  int top() const { return static_cast<int>(ranks.size()) - 1; }
};

/// Alternating face sums. In normalized mode the basis is the nondegenerate
/// simplices and degenerate faces are dropped.
ChainComplex chains(const TruncSimplicialSet& x, bool normalized = true);

/// Tot_n = sum over p + q = n of X_{p,q}, differential d_h + (-1)^p d_v.
/// Degrees run up to the largest n with every X_{p,q}, p + q <= n, stored;
/// `max_degree` caps this when non-negative. In normalized mode elements in
/// the image of any eta_i or mu_j are quotiented.
ChainComplex total_complex(const TruncBisimplicialSet& x, bool normalized = false, int max_degree = -1);

/// Whether every composite boundary[q-1] * boundary[q] vanishes.
bool boundary_squares_to_zero(const ChainComplex& c);

struct DegreeHomology {
  Index betti = 0;
  std::vector<Integer> torsion;
  /// "Z^2 + Z/2", "Z", "0".
  std::string to_string() const;
  bool operator==(const DegreeHomology&) const = default;
};

struct HomologyResult {
  std::vector<DegreeHomology> degrees;  // 0..max_degree
  /// Degrees above max_degree are not determined by the stored levels.
  bool truncation_bounded = true;

  std::string to_string() const;
  bool operator==(const HomologyResult& o) const { return degrees == o.degrees; }
};

/// Homology up to max_degree; needs the boundary out of max_degree + 1.
/// Throws DegreeOutOfRange otherwise.
HomologyResult homology(const ChainComplex& c, int max_degree, Exec exec = Exec::parallel);

struct ComparisonReport {
  int max_degree = 0;
  HomologyResult diagonal;
  HomologyResult bar;
  HomologyResult total;
  std::vector<bool> agree;  // per degree
  bool all_agree = false;
};

/// Homology of diag(X), of the bar construction on X and of Tot(X) up to
/// max_degree. X must store every X_{p,q} with p, q <= max_degree + 1.
ComparisonReport compare(const TruncBisimplicialSet& x, int max_degree, Exec exec = Exec::parallel);

}  // namespace hgpd

#endif
