#include "highergpd/rational_linalg.hpp"

#include <sstream>

#include "highergpd/errors.hpp"

namespace hgpd {

QMatrix::QMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rational>>& rows, int cols) {
  if (!rows.empty()) cols = static_cast<int>(rows[0].size());
  QMatrix m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows_; ++r) {
    if (static_cast<int>(rows[static_cast<std::size_t>(r)].size()) != cols)
      throw InputError("ragged matrix rows");
    for (int c = 0; c < cols; ++c) m(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }
  return m;
}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& cols, int rows) {
  QMatrix m(rows, static_cast<int>(cols.size()));
  for (int c = 0; c < m.cols_; ++c)
    for (int r = 0; r < rows; ++r) m(r, c) = cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
  return m;
}

QVector QMatrix::column(int c) const {
  QVector v(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) v[static_cast<std::size_t>(r)] = (*this)(r, c);
  return v;
}

QVector QMatrix::row(int r) const {
  return QVector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

QMatrix QMatrix::columns(int c0, int n) const { return block(0, c0, rows_, n); }

QMatrix QMatrix::block(int r0, int c0, int nr, int nc) const {
  QMatrix b(nr, nc);
  for (int r = 0; r < nr; ++r)
    for (int c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

bool QMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) throw StructuralError("matrix product dimension mismatch");
  QMatrix p(rows_, o.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (a == 0) continue;
      for (int c = 0; c < o.cols_; ++c) p(r, c) += a * o(k, c);
    }
  return p;
}

QVector QMatrix::operator*(const QVector& v) const {
  if (static_cast<int>(v.size()) != cols_) throw StructuralError("matrix-vector dimension mismatch");
  QVector out(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out[static_cast<std::size_t>(r)] += (*this)(r, c) * v[static_cast<std::size_t>(c)];
  return out;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw StructuralError("matrix sum dimension mismatch");
  QMatrix s = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] += o.data_[i];
  return s;
}

QMatrix QMatrix::operator-(const QMatrix& o) const { return *this + (-o); }

QMatrix QMatrix::operator-() const { return scaled(-1); }

QMatrix QMatrix::scaled(const Rational& s) const {
  QMatrix m = *this;
  for (auto& x : m.data_) x *= s;
  return m;
}

std::string QMatrix::to_string() const {
  std::ostringstream os;
  for (int r = 0; r < rows_; ++r) {
    os << "[";
    for (int c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
    os << "]\n";
  }
  return os.str();
}

QMatrix hstack(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows()) throw StructuralError("hstack row mismatch");
  QMatrix m(a.rows(), a.cols() + b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    for (int c = 0; c < b.cols(); ++c) m(r, a.cols() + c) = b(r, c);
  }
  return m;
}

QMatrix vstack(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.cols()) throw StructuralError("vstack column mismatch");
  QMatrix m(a.rows() + b.rows(), a.cols());
  for (int c = 0; c < a.cols(); ++c) {
    for (int r = 0; r < a.rows(); ++r) m(r, c) = a(r, c);
    for (int r = 0; r < b.rows(); ++r) m(a.rows() + r, c) = b(r, c);
  }
  return m;
}

QMatrix direct_sum(const QMatrix& a, const QMatrix& b) {
  QMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  for (int r = 0; r < b.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c) m(a.rows() + r, a.cols() + c) = b(r, c);
  return m;
}

QMatrix rref(QMatrix m, std::vector<int>* pivots) {
  if (pivots) pivots->clear();
  int lead = 0;
  for (int c = 0; c < m.cols() && lead < m.rows(); ++c) {
    int p = lead;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != lead)
      for (int k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(lead, k));
    const Rational inv = 1 / m(lead, c);
    for (int k = c; k < m.cols(); ++k) m(lead, k) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == lead || m(r, c) == 0) continue;
      const Rational f = m(r, c);
      for (int k = c; k < m.cols(); ++k) m(r, k) -= f * m(lead, k);
    }
    if (pivots) pivots->push_back(c);
    ++lead;
  }
  return m;
}

int rank(const QMatrix& m) {
  std::vector<int> piv;
  rref(m, &piv);
  return static_cast<int>(piv.size());
}

QMatrix kernel(const QMatrix& m) {
  std::vector<int> piv;
  const QMatrix r = rref(m, &piv);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int p : piv) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<QVector> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    QVector v(static_cast<std::size_t>(m.cols()));
    v[static_cast<std::size_t>(f)] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i)
      v[static_cast<std::size_t>(piv[i])] = -r(static_cast<int>(i), f);
    basis.push_back(std::move(v));
  }
  return QMatrix::from_columns(basis, m.cols());
}

QMatrix image(const QMatrix& m) {
  std::vector<int> piv;
  rref(m, &piv);
  QMatrix out(m.rows(), static_cast<int>(piv.size()));
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (int r = 0; r < m.rows(); ++r) out(r, static_cast<int>(i)) = m(r, piv[i]);
  return out;
}

QMatrix solve(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows()) throw StructuralError("solve dimension mismatch");
  std::vector<int> piv;
  const QMatrix r = rref(hstack(a, b), &piv);
  for (std::size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] >= a.cols()) throw StructuralError("right-hand side outside the column space");
    if (piv[i] != static_cast<int>(i)) throw StructuralError("solve needs full column rank");
  }
  if (static_cast<int>(piv.size()) != a.cols()) throw StructuralError("solve needs full column rank");
  return r.block(0, a.cols(), a.cols(), b.cols());
}

QMatrix pullback(const QMatrix& form, const QMatrix& map) { return map.transpose() * form * map; }

bool is_antisymmetric(const QMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = r; c < m.cols(); ++c)
      if (m(r, c) != -m(c, r)) return false;
  return true;
}

Subspace::Subspace(int ambient, const QMatrix& spanning) : ambient_(ambient) {
  if (spanning.rows() != ambient) throw StructuralError("spanning set has the wrong ambient dimension");
  basis_ = image(spanning);
}

Subspace Subspace::whole(int ambient) { return Subspace(ambient, QMatrix::identity(ambient)); }

Subspace Subspace::zero(int ambient) { return Subspace(ambient, QMatrix(ambient, 0)); }

Subspace Subspace::null_space(const QMatrix& m) { return Subspace(m.cols(), kernel(m)); }

bool Subspace::contains(const QVector& v) const {
  return rank(hstack(basis_, QMatrix::from_columns({v}, ambient_))) == dim();
}

bool Subspace::contains(const Subspace& o) const { return rank(hstack(basis_, o.basis_)) == dim(); }

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && dim() == o.dim() && contains(o);
}

QMatrix Subspace::coordinates(const QMatrix& m) const { return solve(basis_, m); }

Subspace Subspace::sum(const Subspace& o) const { return Subspace(ambient_, hstack(basis_, o.basis_)); }

Subspace Subspace::intersect(const Subspace& o) const {
  const QMatrix k = kernel(hstack(basis_, -o.basis_));
  return Subspace(ambient_, basis_ * k.block(0, 0, dim(), k.cols()));
}

Subspace Subspace::mapped(const QMatrix& m) const { return Subspace(m.rows(), m * basis_); }

}  // namespace hgpd
