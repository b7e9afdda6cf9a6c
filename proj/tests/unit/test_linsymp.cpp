#include "doctest.h"

#include <random>

#include "highergpd/errors.hpp"
#include "highergpd/linsymp.hpp"

using namespace hgpd;

namespace {

QMatrix random_matrix(std::mt19937& rng, int r, int c) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  QMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = Rational(num(rng), den(rng));
  return m;
}

QMatrix antisymmetrize(const QMatrix& m) { return m - m.transpose(); }

// Ambient W1 vector (X, Y) for the VV fixtures.
QVector w1_vector(const QVector& x, const QVector& y) {
  QVector v = x;
  v.insert(v.end(), y.begin(), y.end());
  return v;
}

struct Built {
  LinearDoubleGroupoid l;
  LinearBar bar;
  TwoForm omega;
};

Built build(LinearDoubleGroupoid l) {
  LinearBar bar = linear_bar_levels(l);
  TwoForm omega = pullback_form(l, bar);
  return {std::move(l), std::move(bar), std::move(omega)};
}

// Rank one n x n matrices with entries in {-1, 0, 1, 2}.
std::vector<QMatrix> rank_one_family(int n) {
  std::vector<QMatrix> out;
  const int cells = n * n;
  for (long code = 0;; ++code) {
    long c = code;
    QMatrix m(n, n);
    for (int i = 0; i < cells; ++i) {
      m(i / n, i % n) = static_cast<int>(c % 4) - 1;
      c /= 4;
    }
    if (c > 0) break;
    if (rank(m) == 1) out.push_back(m);
  }
  return out;
}

}  // namespace

TEST_CASE("rational linear algebra") {
  const QMatrix a = QMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(a) == 2);
  const QMatrix k = kernel(a);
  CHECK(k.cols() == 1);
  CHECK((a * k).is_zero());
  CHECK(image(a).cols() == 2);
  const QMatrix b = QMatrix::from_rows({{Rational(1, 2), 0}, {0, 3}});
  CHECK(solve(b, QMatrix::from_rows({{1}, {1}})) == QMatrix::from_rows({{2}, {Rational(1, 3)}}));
  CHECK_THROWS_AS(solve(QMatrix::from_rows({{1}, {0}}), QMatrix::from_rows({{0}, {1}})), StructuralError);

  const Subspace x(3, QMatrix::from_rows({{1, 0}, {0, 1}, {0, 0}}));
  const Subspace y(3, QMatrix::from_rows({{0, 0}, {1, 0}, {0, 1}}));
  CHECK(x.intersect(y).dim() == 1);
  CHECK(x.intersect(y).contains(QVector{0, 1, 0}));
  CHECK(x.sum(y) == Subspace::whole(3));
  CHECK_FALSE(x == y);
  CHECK(Subspace::null_space(a).dim() == 1);
}

TEST_CASE("pullback commutes with composition") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const QMatrix form = antisymmetrize(random_matrix(rng, 4, 4));
    const QMatrix f = random_matrix(rng, 4, 3);
    const QMatrix g = random_matrix(rng, 3, 5);
    CHECK(pullback(form, f * g) == pullback(pullback(form, f), g));
    CHECK(is_antisymmetric(pullback(form, f * g)));
  }
}

TEST_CASE("linear fixtures are valid") {
  CHECK(validate_linear_double_groupoid(vv_fixture(1)).ok());
  CHECK(validate_linear_double_groupoid(vv_fixture(3)).ok());
  CHECK(validate_linear_double_groupoid(linear_unit_fixture()).ok());
  const auto pair = linear_pair_fixture(cotangent_groupoid(2), vv_fixture(2).omega);
  const auto rep = validate_linear_double_groupoid(pair);
  CHECK_MESSAGE(rep.ok(), rep.to_string());
  CHECK(validate_linear_groupoid(cotangent_groupoid(3)).ok());
}

TEST_CASE("broken linear structures are reported") {
  auto l = vv_fixture(1);
  l.over_v.comp(0, 0) += 1;
  CHECK_FALSE(validate_linear_double_groupoid(l).ok());
  auto skew = vv_fixture(1);
  skew.omega(0, 1) = 5;
  CHECK(validate_linear_double_groupoid(skew).mentions("omega-alternating"));
  auto shape = vv_fixture(1);
  shape.omega = QMatrix(3, 3);
  CHECK(validate_linear_double_groupoid(shape).has_structural());
  CHECK_THROWS_AS(linear_bar_levels(shape), StructuralError);
}

TEST_CASE("bar levels of the vector space fixtures") {
  for (int n = 1; n <= 3; ++n) {
    const auto bar = linear_bar_levels(vv_fixture(n));
    CHECK(bar.level[0].dim() == 0);
    CHECK(bar.level[1].dim() == 2 * n);
    CHECK(bar.level[2].dim() == 4 * n);
    CHECK(bar.level[3].dim() == 6 * n);
  }
  const auto unit = linear_bar_levels(linear_unit_fixture());
  for (const auto& level : unit.level) CHECK(level.dim() == 0);
  const auto pair = linear_bar_levels(linear_pair_fixture(cotangent_groupoid(1), vv_fixture(1).omega));
  // W1 = G x_{s,t} (M x M), W2 adds a square with two free corners
  CHECK(pair.level[0].dim() == 1);
  CHECK(pair.level[1].dim() == 3);
}

TEST_CASE("linear bar maps satisfy the simplicial identities") {
  for (const auto& l : {vv_fixture(2), linear_pair_fixture(cotangent_groupoid(1), vv_fixture(1).omega),
                        linear_unit_fixture()}) {
    const auto bar = linear_bar_levels(l);
    const auto& f = bar.face_coords;
    const auto& s = bar.degeneracy_coords;
    auto id = [&](int q) { return QMatrix::identity(bar.level[static_cast<std::size_t>(q)].dim()); };
    for (int q = 2; q <= 3; ++q)
      for (int j = 1; j <= q; ++j)
        for (int i = 0; i < j; ++i)
          CHECK(f[q - 1][i] * f[q][j] == f[q - 1][j - 1] * f[q][i]);
    for (int q = 0; q <= 2; ++q)
      for (int i = 0; i <= q; ++i) {
        CHECK(f[q + 1][i] * s[q][i] == id(q));
        CHECK(f[q + 1][i + 1] * s[q][i] == id(q));
        for (int j = 0; j <= q + 1; ++j) {
          if (j < i && q >= 1) CHECK(f[q + 1][j] * s[q][i] == s[q - 1][i - 1] * f[q][j]);
          if (j > i + 1 && q >= 1) CHECK(f[q + 1][j] * s[q][i] == s[q - 1][i] * f[q][j - 1]);
        }
      }
  }
}

TEST_CASE("Omega on the vector space fixture") {
  const auto b = build(vv_fixture(1));
  CHECK(is_antisymmetric(b.omega.matrix));
  CHECK(b.omega.rank() == 2);
  // nondegenerate omega: ker Omega = ker nu
  CHECK(b.omega.kernel_ambient() == Subspace::null_space(b.bar.nu).intersect(b.bar.level[2]));
  const auto zero = build(vv_fixture(1, QMatrix(1, 1)));
  CHECK(zero.omega.matrix.is_zero());
  for (int n = 1; n <= 3; ++n) {
    const auto r = build(vv_fixture(n, random_pairing(n, 100 + static_cast<std::uint64_t>(n))));
    CHECK(r.bar.level[2].dim() - r.omega.rank() ==
          Subspace::null_space(r.bar.nu).intersect(r.bar.level[2]).dim());
  }
}

TEST_CASE("multiplicativity residual") {
  for (const auto& l : {vv_fixture(1), vv_fixture(2), vv_fixture(1, QMatrix(1, 1)), linear_unit_fixture(),
                        linear_pair_fixture(cotangent_groupoid(2), vv_fixture(2).omega)}) {
    const auto b = build(l);
    const auto m = check_multiplicative(b.bar, b.omega);
    CHECK(m.multiplicative);
    CHECK(m.residual.is_zero());
  }
  // pair the two V-side coordinates of D = V (+) V*
  auto l = vv_fixture(2);
  l.omega(0, 1) += 1;
  l.omega(1, 0) -= 1;
  CHECK(validate_linear_double_groupoid(l).ok());
  const auto b = build(l);
  const auto m = check_multiplicative(b.bar, b.omega);
  CHECK_FALSE(m.multiplicative);
  CHECK_FALSE(m.residual.is_zero());
  CHECK(is_antisymmetric(m.residual));
  CHECK_THROWS_AS(check_conditions(b.bar, b.omega), InputError);
  CHECK_THROWS_AS(verify_theorem(l), InputError);
}

TEST_CASE("kernel pullbacks") {
  const auto b = build(vv_fixture(1));
  const auto k = kernel_pullbacks(b.bar, b.omega);
  CHECK(k.w11 == Subspace(2, QMatrix::from_rows({{1}, {0}})));
  CHECK(k.w10 == Subspace(2, QMatrix::from_rows({{0}, {1}})));
  const auto z = build(vv_fixture(2, QMatrix(2, 2)));
  const auto kz = kernel_pullbacks(z.bar, z.omega);
  CHECK(kz.w10 == Subspace::whole(4));
  CHECK(kz.w11 == Subspace::whole(4));
  const auto r = build(vv_fixture(1, random_pairing(1, 5)));
  const auto kr = kernel_pullbacks(r.bar, r.omega);
  CHECK(kr.w10.dim() == 1);
  CHECK(kr.w11.dim() == 1);
}

TEST_CASE("face maps carry kernels into the pulled back kernels") {
  for (const auto& l : {vv_fixture(2), vv_fixture(2, QMatrix::from_rows({{1, 1}, {1, 1}})), vv_fixture(1, QMatrix(1, 1)),
                        linear_pair_fixture(cotangent_groupoid(2), vv_fixture(2).omega),
                        linear_pair_fixture(cotangent_groupoid(2), QMatrix(4, 4))}) {
    const auto b = build(l);
    REQUIRE(check_multiplicative(b.bar, b.omega).multiplicative);
    const auto& f = b.bar.face_coords[2];
    const auto& s = b.bar.degeneracy_coords[1];
    // Omega(d1 f2 v, d1 f2 u) = Omega(d0 f0 v, d0 f0 u) on all of W2
    CHECK(pullback(b.omega.matrix, s[1] * f[2]) == pullback(b.omega.matrix, s[0] * f[0]));
    const auto k = kernel_pullbacks(b.bar, b.omega);
    const auto& w2 = b.bar.level[2];
    auto ambient = [&](const QMatrix& coords) { return Subspace(w2.ambient(), w2.basis() * coords); };
    const Subspace k0 = ambient(kernel(vstack(f[0], b.omega.matrix)));
    const Subspace k2 = ambient(kernel(vstack(f[2], b.omega.matrix)));
    CHECK(k.w11.contains(k0.mapped(b.bar.face[2][2])));
    CHECK(k.w10.contains(k2.mapped(b.bar.face[2][0])));
    // the image of ker f0 alone is isotropic
    const QMatrix img = s[1] * f[2] * kernel(f[0]);
    CHECK(pullback(b.omega.matrix, img).is_zero());
  }
}

TEST_CASE("the image of ker f0 can leave the pulled back kernel when Omega is nonzero") {
  const auto b = build(vv_fixture(1));
  const auto k = kernel_pullbacks(b.bar, b.omega);
  const auto& w2 = b.bar.level[2];
  const Subspace ker_f0(w2.ambient(), w2.basis() * kernel(b.bar.face_coords[2][0]));
  CHECK_FALSE(k.w11.contains(ker_f0.mapped(b.bar.face[2][2])));
  // (theta, alpha, eta) = (0, (0, 1), 0) lies in ker f0 and f2 sends it to (0, 1)
  CHECK(ker_f0.contains(QVector{0, 0, 1, 0}));
  CHECK_FALSE(k.w11.contains(QVector{0, 1}));
}

TEST_CASE("conditions on the vector space fixture") {
  const auto b = build(vv_fixture(1));
  const auto c = check_conditions(b.bar, b.omega);
  CHECK(c.cond1.holds);
  CHECK(c.cond2.holds);
  CHECK(c.cond3.holds);
  CHECK(c.cond1.witness.empty());

  const auto z = build(vv_fixture(1, QMatrix(1, 1)));
  const auto cz = check_conditions(z.bar, z.omega);
  CHECK(cz.cond1.holds);
  CHECK(cz.cond2.holds);
  CHECK_FALSE(cz.cond3.holds);
  CHECK_FALSE(cz.cond3.witness.empty());

  const auto d = build(vv_fixture(2, QMatrix::from_rows({{1, 0}, {0, 0}})));
  CHECK_FALSE(check_conditions(d.bar, d.omega).all());
}

TEST_CASE("induced pairing") {
  const auto b = build(vv_fixture(2));
  const auto p = pairing_matrix(b.bar, b.omega);
  CHECK(p.nondegenerate);
  // <(X,0), (0,Y)> = Y(X)
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      QVector x(2), y(2);
      x[static_cast<std::size_t>(i)] = 1;
      y[static_cast<std::size_t>(j)] = 1;
      CHECK(induced_pairing(b.bar, b.omega, w1_vector(x, {0, 0}), w1_vector({0, 0}, y)) == (i == j ? 1 : 0));
    }
  auto l2 = vv_fixture(2);
  l2.omega = l2.omega.scaled(2);
  const auto b2 = build(l2);
  CHECK(pairing_matrix(b2.bar, b2.omega).matrix == p.matrix.scaled(2));
  CHECK(pairing_matrix(b2.bar, b2.omega).nondegenerate);
  CHECK_THROWS_AS(induced_pairing(b.bar, b.omega, w1_vector({0, 0}, {1, 0}), w1_vector({0, 0}, {1, 0})), InputError);

  const auto z = build(vv_fixture(1, QMatrix(1, 1)));
  CHECK_THROWS_AS(pairing_matrix(z.bar, z.omega), IdentificationUnavailable);
  CHECK_THROWS_AS(induced_pairing(z.bar, z.omega, {1, 0}, {0, 1}), IdentificationUnavailable);
}

TEST_CASE("pairing equals the form's own pairing matrix") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const QMatrix pairing = random_pairing(2, seed);
    const auto b = build(vv_fixture(2, pairing));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        QVector x(2), y(2);
        x[static_cast<std::size_t>(i)] = 1;
        y[static_cast<std::size_t>(j)] = 1;
        CHECK(induced_pairing(b.bar, b.omega, w1_vector(x, {0, 0}), w1_vector({0, 0}, y)) == pairing(j, i));
      }
  }
}

TEST_CASE("nondegeneracy is equivalent to the three conditions") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto t = verify_theorem(vv_fixture(1 + static_cast<int>(seed % 3), random_pairing(1 + static_cast<int>(seed % 3), seed)));
    CHECK(t.omega_nondegenerate);
    CHECK(t.conditions);
    CHECK(t.holds);
  }
  for (const auto& b : rank_one_family(2)) {
    const auto t = verify_theorem(vv_fixture(2, b));
    CHECK_FALSE(t.omega_nondegenerate);
    CHECK(t.report.rank_omega_d == 2);
    CHECK_FALSE(t.conditions);
    CHECK(t.holds);
  }
  CHECK(verify_theorem(vv_fixture(2, QMatrix(2, 2))).holds);
  const auto unit = verify_theorem(linear_unit_fixture());
  CHECK(unit.holds);
  CHECK(unit.conditions);
}

TEST_CASE("nondegeneracy is equivalent to the conditions on pair fixtures") {
  for (int k = 1; k <= 2; ++k) {
    const auto g = cotangent_groupoid(k);
    const auto nondeg = verify_theorem(linear_pair_fixture(g, vv_fixture(k, random_pairing(k, 7)).omega));
    CHECK(nondeg.omega_nondegenerate);
    CHECK(nondeg.conditions);
    CHECK(nondeg.holds);
    const auto zero = verify_theorem(linear_pair_fixture(g, QMatrix(2 * k, 2 * k)));
    CHECK_FALSE(zero.conditions);
    CHECK(zero.holds);
  }
  for (const auto& b : rank_one_family(2)) {
    const auto t = verify_theorem(linear_pair_fixture(cotangent_groupoid(2), vv_fixture(2, b).omega));
    CHECK(t.holds);
  }
}

TEST_CASE("space of multiplicative forms") {
  for (int n = 1; n <= 3; ++n) {
    const LinearDoubleGroupoid l = vv_fixture(n);
    const auto forms = multiplicative_forms(l);
    CHECK(forms.size() == static_cast<std::size_t>(n * n));
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      LinearDoubleGroupoid m = l;
      m.omega = random_form(forms, l.dim_d(), seed);
      CHECK(is_antisymmetric(m.omega));
      // Every such form is one of the omega_B.
      const QMatrix b = -m.omega.block(n, 0, n, n);
      CHECK(m.omega == vv_fixture(n, b).omega);
      const LinearBar bar = linear_bar_levels(m);
      CHECK(check_multiplicative(bar, pullback_form(m, bar)).multiplicative);
    }
  }
  CHECK(multiplicative_forms(linear_unit_fixture()).empty());
  const LinearDoubleGroupoid p = linear_pair_fixture(cotangent_groupoid(1), vv_fixture(1).omega);
  for (const QMatrix& f : multiplicative_forms(p)) {
    LinearDoubleGroupoid m = p;
    m.omega = f;
    const LinearBar bar = linear_bar_levels(m);
    CHECK(check_multiplicative(bar, pullback_form(m, bar)).multiplicative);
  }
}
