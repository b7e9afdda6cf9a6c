#ifndef HIGHERGPD_RATIONAL_LINALG_HPP
#define HIGHERGPD_RATIONAL_LINALG_HPP

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hgpd {

using Rational = boost::multiprecision::cpp_rational;
using QVector = std::vector<Rational>;

/// Dense row-major matrix over the rationals.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols);
  /// Rows given as lists; all rows must have the same length.
  static QMatrix from_rows(const std::vector<std::vector<Rational>>& rows, int cols = 0);
  static QMatrix identity(int n);
  static QMatrix from_columns(const std::vector<QVector>& cols, int rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  const Rational& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }

  QVector column(int c) const;
  QVector row(int r) const;
  QMatrix transpose() const;
  /// Columns [c0, c0 + n).
  QMatrix columns(int c0, int n) const;
  QMatrix block(int r0, int c0, int nr, int nc) const;
  bool is_zero() const;

  QMatrix operator*(const QMatrix& o) const;
  QVector operator*(const QVector& v) const;
  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  QMatrix operator-() const;
  QMatrix scaled(const Rational& s) const;
  bool operator==(const QMatrix&) const = default;

  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

/// [a | b]
QMatrix hstack(const QMatrix& a, const QMatrix& b);
/// [a ; b]
QMatrix vstack(const QMatrix& a, const QMatrix& b);
/// Block diagonal.
QMatrix direct_sum(const QMatrix& a, const QMatrix& b);

/// Reduced row echelon form; `pivots` receives the pivot columns.
QMatrix rref(QMatrix m, std::vector<int>* pivots = nullptr);
int rank(const QMatrix& m);
/// Basis of the null space as columns.
QMatrix kernel(const QMatrix& m);
/// Basis of the column space (a subset of the columns of m).
QMatrix image(const QMatrix& m);
/// The unique x with a x = b; a must have full column rank and b must lie in
/// its column space. Throws StructuralError otherwise.
QMatrix solve(const QMatrix& a, const QMatrix& b);

/// M^T F M: the pullback of the bilinear form F along M.
QMatrix pullback(const QMatrix& form, const QMatrix& map);
bool is_antisymmetric(const QMatrix& m);

/// Linear subspace of Q^ambient spanned by the columns of `basis`, which
/// have full column rank.
class Subspace {
 public:
  Subspace() = default;
  /// Keeps a column basis of the span of `spanning`.
  Subspace(int ambient, const QMatrix& spanning);
  static Subspace whole(int ambient);
  static Subspace zero(int ambient);
  /// {x : m x = 0}
  static Subspace null_space(const QMatrix& m);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.cols(); }
  const QMatrix& basis() const { return basis_; }

  bool contains(const QVector& v) const;
  bool contains(const Subspace& o) const;
  bool operator==(const Subspace& o) const;
  /// Coordinates of the columns of m in this basis.
  QMatrix coordinates(const QMatrix& m) const;

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  /// Image under a linear map out of the ambient space.
  Subspace mapped(const QMatrix& m) const;

 private:
  int ambient_ = 0;
  QMatrix basis_;
};

}  // namespace hgpd

#endif
