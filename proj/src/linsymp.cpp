#include "highergpd/linsymp.hpp"

#include <algorithm>
#include <initializer_list>
#include <random>
#include <numeric>

#include "highergpd/errors.hpp"

namespace hgpd {

namespace {

// Coordinate blocks of an ambient direct sum.
class Blocks {
 public:
  explicit Blocks(std::vector<int> sizes) : sizes_(std::move(sizes)) {
    offsets_.push_back(0);
    for (int s : sizes_) offsets_.push_back(offsets_.back() + s);
  }
  int total() const { return offsets_.back(); }
  // Projection onto block k.
  QMatrix p(int k) const {
    QMatrix m(sizes_[static_cast<std::size_t>(k)], total());
    for (int i = 0; i < sizes_[static_cast<std::size_t>(k)]; ++i) m(i, offsets_[static_cast<std::size_t>(k)] + i) = 1;
    return m;
  }

 private:
  std::vector<int> sizes_;
  std::vector<int> offsets_;
};

QMatrix stack(std::initializer_list<QMatrix> parts) {
  auto it = parts.begin();
  QMatrix m = *it;
  for (++it; it != parts.end(); ++it) m = vstack(m, *it);
  return m;
}

// g1 . g2 for linear expressions g1, g2 in some ambient space.
QMatrix comp(const LinearGroupoid& g, const QMatrix& x, const QMatrix& y) { return g.comp * vstack(x, y); }

std::string dims(const QMatrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

void expect_shape(ValidationReport& rep, const std::string& what, const QMatrix& m, int r, int c) {
  if (m.rows() != r || m.cols() != c)
    rep.add_structural("shape:" + what, what + " is " + dims(m) + ", expected " + std::to_string(r) + "x" + std::to_string(c));
}

void expect_equal(ValidationReport& rep, const std::string& rule, const QMatrix& a, const QMatrix& b) {
  if (!(a == b)) rep.add_axiom(rule, {}, "linear identity fails on a basis vector");
}

}  // namespace

Subspace LinearGroupoid::composable() const {
  return Subspace::null_space(hstack(src, -tgt));
}

LinearGroupoid linear_groupoid(const QMatrix& src, const QMatrix& tgt, const QMatrix& unit) {
  LinearGroupoid g;
  g.objects = src.rows();
  g.arrows = src.cols();
  g.src = src;
  g.tgt = tgt;
  g.unit = unit;
  const QMatrix id = QMatrix::identity(g.arrows);
  g.inv = unit * src + unit * tgt - id;
  g.comp = hstack(id - unit * src, id);
  return g;
}

ValidationReport validate_linear_groupoid(const LinearGroupoid& g) {
  ValidationReport rep;
  expect_shape(rep, "src", g.src, g.objects, g.arrows);
  expect_shape(rep, "tgt", g.tgt, g.objects, g.arrows);
  expect_shape(rep, "unit", g.unit, g.arrows, g.objects);
  expect_shape(rep, "inv", g.inv, g.arrows, g.arrows);
  expect_shape(rep, "comp", g.comp, g.arrows, 2 * g.arrows);
  if (!rep.ok()) return rep;

  const int n = g.arrows;
  const QMatrix id = QMatrix::identity(n);
  const QMatrix ido = QMatrix::identity(g.objects);
  expect_equal(rep, "unit-source", g.src * g.unit, ido);
  expect_equal(rep, "unit-target", g.tgt * g.unit, ido);

  const Blocks two({n, n});
  const QMatrix c2 = g.composable().basis();
  expect_equal(rep, "composition-source", g.src * g.comp * c2, g.src * two.p(1) * c2);
  expect_equal(rep, "composition-target", g.tgt * g.comp * c2, g.tgt * two.p(0) * c2);
  expect_equal(rep, "unit-left", comp(g, g.unit * g.tgt, id), id);
  expect_equal(rep, "unit-right", comp(g, id, g.unit * g.src), id);
  expect_equal(rep, "inverse-source", g.src * g.inv, g.tgt);
  expect_equal(rep, "inverse-target", g.tgt * g.inv, g.src);
  expect_equal(rep, "inverse-right", comp(g, id, g.inv), g.unit * g.tgt);
  expect_equal(rep, "inverse-left", comp(g, g.inv, id), g.unit * g.src);

  const Blocks three({n, n, n});
  const QMatrix c3 = kernel(vstack(g.src * three.p(0) - g.tgt * three.p(1), g.src * three.p(1) - g.tgt * three.p(2)));
  const QMatrix x = three.p(0) * c3, y = three.p(1) * c3, z = three.p(2) * c3;
  expect_equal(rep, "associativity", comp(g, comp(g, x, y), z), comp(g, x, comp(g, y, z)));
  return rep;
}

ValidationReport validate_linear_double_groupoid(const LinearDoubleGroupoid& l) {
  ValidationReport rep;
  const auto& V = l.side_v;
  const auto& H = l.side_h;
  const auto& DV = l.over_v;
  const auto& DH = l.over_h;
  if (V.objects != l.dim_m) rep.add_structural("side-objects:V", "V must lie over M");
  if (H.objects != l.dim_m) rep.add_structural("side-objects:H", "H must lie over M");
  if (DV.objects != V.arrows) rep.add_structural("square-objects:V", "D over V must have V as objects");
  if (DH.objects != H.arrows) rep.add_structural("square-objects:H", "D over H must have H as objects");
  if (DV.arrows != DH.arrows) rep.add_structural("square-count", "both structures must share D");
  expect_shape(rep, "omega", l.omega, DV.arrows, DV.arrows);
  if (!rep.ok()) return rep;
  rep.merge(validate_linear_groupoid(V), "V:");
  rep.merge(validate_linear_groupoid(H), "H:");
  rep.merge(validate_linear_groupoid(DV), "D/V:");
  rep.merge(validate_linear_groupoid(DH), "D/H:");
  if (rep.has_structural()) return rep;
  if (!is_antisymmetric(l.omega)) rep.add_axiom("omega-alternating", {}, "omega is not antisymmetric");

  expect_equal(rep, "corners:s.sH=s.sV", H.src * DH.src, V.src * DV.src);
  expect_equal(rep, "corners:t.tH=t.tV", H.tgt * DH.tgt, V.tgt * DV.tgt);
  expect_equal(rep, "corners:t.sH=s.tV", H.tgt * DH.src, V.src * DV.tgt);
  expect_equal(rep, "corners:s.tH=t.sV", H.src * DH.tgt, V.tgt * DV.src);

  const int d = l.dim_d();
  const Blocks two({d, d});
  const QMatrix ch = DH.composable().basis();
  const QMatrix a = two.p(0) * ch, b = two.p(1) * ch;
  expect_equal(rep, "homomorphism:sV", DV.src * comp(DH, a, b), comp(V, DV.src * a, DV.src * b));
  expect_equal(rep, "homomorphism:tV", DV.tgt * comp(DH, a, b), comp(V, DV.tgt * a, DV.tgt * b));
  const QMatrix cv = DV.composable().basis();
  const QMatrix u = two.p(0) * cv, w = two.p(1) * cv;
  expect_equal(rep, "homomorphism:sH", DH.src * comp(DV, u, w), comp(H, DH.src * u, DH.src * w));
  expect_equal(rep, "homomorphism:tH", DH.tgt * comp(DV, u, w), comp(H, DH.tgt * u, DH.tgt * w));

  // a11 a12 / a21 a22
  const Blocks four({d, d, d, d});
  const QMatrix q = kernel(stack({DH.src * four.p(0) - DH.tgt * four.p(1), DV.src * four.p(0) - DV.tgt * four.p(2),
                                  DH.src * four.p(2) - DH.tgt * four.p(3), DV.src * four.p(1) - DV.tgt * four.p(3)}));
  const QMatrix a11 = four.p(0) * q, a12 = four.p(1) * q, a21 = four.p(2) * q, a22 = four.p(3) * q;
  expect_equal(rep, "interchange", comp(DV, comp(DH, a11, a12), comp(DH, a21, a22)),
               comp(DH, comp(DV, a11, a21), comp(DV, a12, a22)));
  return rep;
}

LinearDoubleGroupoid vv_fixture(int n, std::optional<QMatrix> pairing) {
  const QMatrix b = pairing ? *pairing : QMatrix::identity(n);
  if (b.rows() != n || b.cols() != n) throw InputError("pairing matrix must be n x n");
  LinearDoubleGroupoid l;
  l.name = "VV" + std::to_string(n);
  l.dim_m = 0;
  const QMatrix to_point(0, n), from_point(n, 0);
  l.side_v = linear_groupoid(to_point, to_point, from_point);
  l.side_h = l.side_v;
  const QMatrix id = QMatrix::identity(n), zero(n, n);
  const QMatrix first = hstack(id, zero), second = hstack(zero, id);
  l.over_v = linear_groupoid(first, first, first.transpose());
  l.over_h = linear_groupoid(second, second, second.transpose());
  l.omega = vstack(hstack(zero, b.transpose()), hstack(-b, zero));
  return l;
}

LinearDoubleGroupoid linear_unit_fixture() {
  LinearDoubleGroupoid l;
  l.name = "unit";
  const QMatrix z(0, 0);
  l.side_v = l.side_h = l.over_v = l.over_h = linear_groupoid(z, z, z);
  l.omega = z;
  return l;
}

LinearGroupoid cotangent_groupoid(int k) {
  const QMatrix base = hstack(QMatrix::identity(k), QMatrix(k, k));
  return linear_groupoid(base, base, base.transpose());
}

QMatrix random_pairing(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  while (true) {
    QMatrix b(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) b(r, c) = Rational(num(rng), den(rng));
    if (rank(b) == n) return b;
  }
}

std::vector<QMatrix> multiplicative_forms(const LinearDoubleGroupoid& l) {
  const int d = l.dim_d();
  std::vector<QMatrix> elementary;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      QMatrix e(d, d);
      e(i, j) = 1;
      e(j, i) = -1;
      elementary.push_back(std::move(e));
    }
  // One column per elementary form: the defect m^*F - pr1^*F - pr2^*F on
  // each fiber product, flattened.
  std::vector<QVector> columns;
  int rows = 0;
  for (const QMatrix& e : elementary) {
    QVector col;
    for (const LinearGroupoid* g : {&l.over_v, &l.over_h}) {
      const QMatrix k = g->composable().basis();
      const QMatrix defect = pullback(e, g->comp * k) - pullback(direct_sum(e, e), k);
      for (int r = 0; r < defect.rows(); ++r)
        for (int c = 0; c < defect.cols(); ++c) col.push_back(defect(r, c));
    }
    rows = static_cast<int>(col.size());
    columns.push_back(std::move(col));
  }
  std::vector<QMatrix> out;
  if (elementary.empty()) return out;
  const QMatrix ker = kernel(QMatrix::from_columns(columns, rows));
  for (int c = 0; c < ker.cols(); ++c) {
    QMatrix f(d, d);
    for (std::size_t e = 0; e < elementary.size(); ++e) f = f + elementary[e].scaled(ker(static_cast<int>(e), c));
    out.push_back(std::move(f));
  }
  return out;
}

QMatrix random_form(const std::vector<QMatrix>& basis, int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  QMatrix f(dim, dim);
  for (const QMatrix& b : basis) f = f + b.scaled(coeff(rng));
  return f;
}

namespace {

LinearGroupoid linear_pair_groupoid(int k) {
  const QMatrix id = QMatrix::identity(k), zero(k, k);
  return linear_groupoid(hstack(zero, id), hstack(id, zero), vstack(id, id));
}

}  // namespace

LinearDoubleGroupoid linear_pair_fixture(const LinearGroupoid& g, const QMatrix& beta, std::string name) {
  LinearDoubleGroupoid l;
  l.name = std::move(name);
  l.dim_m = g.objects;
  l.side_v = g;
  l.side_h = linear_pair_groupoid(g.objects);
  l.over_v = linear_pair_groupoid(g.arrows);
  l.over_h = linear_groupoid(direct_sum(g.src, g.src), direct_sum(g.tgt, g.tgt), direct_sum(g.unit, g.unit));
  l.omega = direct_sum(beta, -beta);
  return l;
}

LinearBar linear_bar_levels(const LinearDoubleGroupoid& l) {
  const auto rep = validate_linear_double_groupoid(l);
  if (rep.has_structural()) throw StructuralError("dimension mismatch in structure maps:\n" + rep.to_string());
  const auto& V = l.side_v;
  const auto& H = l.side_h;
  const auto& DV = l.over_v;
  const auto& DH = l.over_h;
  const int m = l.dim_m, v = l.dim_v(), h = l.dim_h(), d = l.dim_d();
  const Blocks b1({v, h}), b2({v, d, h}), b3({v, d, d, d, h});

  LinearBar bar;
  bar.level[0] = Subspace::whole(m);
  bar.level[1] = Subspace::null_space(V.src * b1.p(0) - H.tgt * b1.p(1));
  {
    const QMatrix th = b2.p(0), al = b2.p(1), et = b2.p(2);
    bar.level[2] = Subspace::null_space(
        vstack(V.src * th - V.tgt * DV.tgt * al, V.src * DV.src * al - H.tgt * et));
  }
  {
    const QMatrix th = b3.p(0), a1 = b3.p(1), a2 = b3.p(2), a3 = b3.p(3), et = b3.p(4);
    bar.level[3] = Subspace::null_space(stack({V.src * th - V.tgt * DV.tgt * a1, DH.src * a1 - DH.tgt * a2,
                                               DV.src * a2 - DV.tgt * a3, V.src * DV.src * a3 - H.tgt * et}));
  }

  {
    const QMatrix th = b1.p(0), et = b1.p(1);
    bar.face[1] = {H.src * et, V.tgt * th};
    bar.degeneracy[0] = {vstack(V.unit, H.unit)};
    bar.degeneracy[1] = {stack({V.unit * V.tgt * th, DV.unit * th, et}),
                         stack({th, DH.unit * et, H.unit * H.src * et})};
  }
  {
    const QMatrix th = b2.p(0), al = b2.p(1), et = b2.p(2);
    bar.face[2] = {vstack(DV.src * al, et),
                   vstack(comp(V, th, DV.tgt * al), comp(H, DH.src * al, et)),
                   vstack(th, DH.tgt * al)};
    bar.degeneracy[2] = {
        stack({V.unit * V.tgt * th, DV.unit * th, DV.unit * DV.tgt * al, al, et}),
        stack({th, DH.unit * DH.tgt * al, al, DV.unit * DV.src * al, et}),
        stack({th, al, DH.unit * DH.src * al, DH.unit * et, H.unit * H.src * et})};
    bar.nu = al;
  }
  {
    const QMatrix th = b3.p(0), a1 = b3.p(1), a2 = b3.p(2), a3 = b3.p(3), et = b3.p(4);
    bar.face[3] = {stack({DV.src * a1, a3, et}),
                   stack({comp(V, th, DV.tgt * a1), comp(DV, a2, a3), et}),
                   stack({th, comp(DH, a1, a2), comp(H, DH.src * a3, et)}),
                   stack({th, a1, DH.tgt * a3})};
  }

  for (int q = 1; q <= 3; ++q)
    for (const auto& f : bar.face[static_cast<std::size_t>(q)])
      bar.face_coords[static_cast<std::size_t>(q)].push_back(
          bar.level[static_cast<std::size_t>(q - 1)].coordinates(f * bar.level[static_cast<std::size_t>(q)].basis()));
  for (int q = 0; q <= 2; ++q)
    for (const auto& s : bar.degeneracy[static_cast<std::size_t>(q)])
      bar.degeneracy_coords[static_cast<std::size_t>(q)].push_back(
          bar.level[static_cast<std::size_t>(q + 1)].coordinates(s * bar.level[static_cast<std::size_t>(q)].basis()));
  return bar;
}

Subspace TwoForm::kernel_ambient() const {
  return Subspace(space.ambient(), space.basis() * hgpd::kernel(matrix));
}

TwoForm pullback_form(const LinearDoubleGroupoid& l, const LinearBar& bar) {
  return {bar.level[2], pullback(l.omega, bar.nu * bar.level[2].basis())};
}

MultiplicativityCheck check_multiplicative(const LinearBar& bar, const TwoForm& omega) {
  const int k3 = bar.level[3].dim();
  MultiplicativityCheck out;
  out.residual = QMatrix(k3, k3);
  for (int i = 0; i <= 3; ++i) {
    const QMatrix term = pullback(omega.matrix, bar.face_coords[3][static_cast<std::size_t>(i)]);
    out.residual = i % 2 == 0 ? out.residual + term : out.residual - term;
  }
  out.multiplicative = out.residual.is_zero();
  return out;
}

namespace {

// (delta_i^1)^* ker Omega in W1 coordinates.
QMatrix pullback_kernel(const LinearBar& bar, const TwoForm& omega, int i) {
  return kernel(omega.matrix * bar.degeneracy_coords[1][static_cast<std::size_t>(i)]);
}

QVector ambient_vector(const Subspace& level, const QVector& coords) { return level.basis() * coords; }

QVector unit_vector(int n, int i) {
  QVector e(static_cast<std::size_t>(n));
  e[static_cast<std::size_t>(i)] = 1;
  return e;
}

// Whether `face` maps the subspace `domain` (W2 coordinates) isomorphically
// onto `target` (W1 coordinates).
ConditionResult iso_condition(const LinearBar& bar, const QMatrix& domain, const QMatrix& face, const QMatrix& target) {
  ConditionResult r;
  const QMatrix img = face * domain;
  const int k1 = bar.level[1].dim();
  const QMatrix lost = kernel(img);
  if (lost.cols() > 0) {
    r.detail = "not injective";
    r.witness = ambient_vector(bar.level[2], domain * lost.column(0));
    return r;
  }
  const Subspace image_space(k1, img), target_space(k1, target);
  for (int j = 0; j < target.cols(); ++j)
    if (!image_space.contains(target.column(j))) {
      r.detail = "target vector not in the image";
      r.witness = ambient_vector(bar.level[1], target.column(j));
      return r;
    }
  for (int j = 0; j < img.cols(); ++j)
    if (!target_space.contains(img.column(j))) {
      r.detail = "image leaves the target";
      r.witness = ambient_vector(bar.level[1], img.column(j));
      return r;
    }
  r.holds = true;
  return r;
}

struct Decomposition {
  ConditionResult result;
  QMatrix w00, w10, w11;  // W1 coordinates
};

Decomposition decomposition(const LinearBar& bar, const TwoForm& omega) {
  Decomposition d;
  const int k1 = bar.level[1].dim();
  d.w00 = image(bar.degeneracy_coords[0][0]);
  d.w10 = pullback_kernel(bar, omega, 0);
  d.w11 = pullback_kernel(bar, omega, 1);
  const QMatrix all = hstack(hstack(d.w00, d.w10), d.w11);
  const QMatrix overlap = kernel(all);
  if (overlap.cols() > 0) {
    const QVector c = overlap.column(0);
    QVector first(c.begin(), c.begin() + d.w00.cols());
    QVector v = d.w00 * first;
    if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; })) {
      QVector second(c.begin() + d.w00.cols(), c.begin() + d.w00.cols() + d.w10.cols());
      v = d.w10 * second;
    }
    d.result.detail = "sum is not direct";
    d.result.witness = ambient_vector(bar.level[1], v);
    return d;
  }
  if (all.cols() < k1) {
    const Subspace span(k1, all);
    for (int i = 0; i < k1; ++i)
      if (!span.contains(unit_vector(k1, i))) {
        d.result.detail = "subspaces do not span level 1";
        d.result.witness = ambient_vector(bar.level[1], unit_vector(k1, i));
        break;
      }
    return d;
  }
  d.result.holds = true;
  return d;
}

}  // namespace

KernelPullbacks kernel_pullbacks(const LinearBar& bar, const TwoForm& omega) {
  const auto& w1 = bar.level[1];
  return {Subspace(w1.ambient(), w1.basis() * pullback_kernel(bar, omega, 0)),
          Subspace(w1.ambient(), w1.basis() * pullback_kernel(bar, omega, 1))};
}

ConditionReport check_conditions(const LinearBar& bar, const TwoForm& omega) {
  if (!check_multiplicative(bar, omega).multiplicative) throw InputError("Omega is not multiplicative");
  ConditionReport r;
  const QMatrix& f0 = bar.face_coords[2][0];
  const QMatrix& f2 = bar.face_coords[2][2];
  const QMatrix k1 = kernel(vstack(f0, omega.matrix));
  const QMatrix k0 = kernel(vstack(f2, omega.matrix));
  const auto dec = decomposition(bar, omega);
  r.cond1 = iso_condition(bar, k1, f2, dec.w11);
  r.cond2 = iso_condition(bar, k0, f0, dec.w10);
  r.cond3 = dec.result;
  r.dim_w1 = bar.level[1].dim();
  r.dim_w2 = bar.level[2].dim();
  r.rank_omega = omega.rank();
  r.dim_w00 = dec.w00.cols();
  r.dim_w10 = dec.w10.cols();
  r.dim_w11 = dec.w11.cols();
  return r;
}

PairingReport pairing_matrix(const LinearBar& bar, const TwoForm& omega) {
  const auto dec = decomposition(bar, omega);
  if (!dec.result.holds)
    throw IdentificationUnavailable("level 1 does not split as W00 + W10 + W11 (" + dec.result.detail + ")");
  PairingReport p;
  const auto& w1 = bar.level[1];
  p.w11 = Subspace(w1.ambient(), w1.basis() * dec.w11);
  p.w10 = Subspace(w1.ambient(), w1.basis() * dec.w10);
  const QMatrix left = bar.degeneracy_coords[1][0] * w1.coordinates(p.w11.basis());
  const QMatrix right = bar.degeneracy_coords[1][1] * w1.coordinates(p.w10.basis());
  p.matrix = left.transpose() * omega.matrix * right;
  p.nondegenerate = p.matrix.rows() == p.matrix.cols() && rank(p.matrix) == p.matrix.rows();
  return p;
}

Rational induced_pairing(const LinearBar& bar, const TwoForm& omega, const QVector& a, const QVector& b) {
  const auto p = pairing_matrix(bar, omega);
  if (!p.w11.contains(a)) throw InputError("first argument is not in W11");
  if (!p.w10.contains(b)) throw InputError("second argument is not in W10");
  const auto& w1 = bar.level[1];
  const QVector ea = bar.degeneracy_coords[1][0] * w1.coordinates(QMatrix::from_columns({a}, w1.ambient())).column(0);
  const QVector eb = bar.degeneracy_coords[1][1] * w1.coordinates(QMatrix::from_columns({b}, w1.ambient())).column(0);
  const QVector ob = omega.matrix * eb;
  return std::inner_product(ea.begin(), ea.end(), ob.begin(), Rational(0));
}

TheoremCheck verify_theorem(const LinearDoubleGroupoid& l) {
  const LinearBar bar = linear_bar_levels(l);
  const TwoForm omega = pullback_form(l, bar);
  TheoremCheck t;
  t.report = check_conditions(bar, omega);
  t.report.rank_omega_d = rank(l.omega);
  t.omega_nondegenerate = t.report.rank_omega_d == l.dim_d();
  t.conditions = t.report.all();
  t.holds = t.omega_nondegenerate == t.conditions;
  return t;
}

}  // namespace hgpd
