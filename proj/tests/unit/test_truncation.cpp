#include "doctest.h"

#include "highergpd/errors.hpp"
#include "highergpd/truncation.hpp"

using namespace hgpd;

namespace {

// Every hom-set of the pair groupoid on n objects has one element.
bool is_pair_groupoid(const FiniteGroupoid& g, Index n) {
  return find_isomorphism(g, pair_groupoid(n)).has_value();
}

void check_lemma_inverse(const DoubleGroupoid& d, const QuotientGroupoid& q) {
  const WbarModel w(d, 1);
  const auto& V = d.side_v;
  const auto& H = d.side_h;
  for (Index y = 0; y < w.simplicial().size(1); ++y) {
    const auto s = w.decode(1, y);
    WbarSimplex left{1, 0, V.unit(H.src(s.eta)), H.inv(s.eta), {}};
    WbarSimplex right{1, 0, V.inv(s.theta), H.unit(V.tgt(s.theta)), {}};
    const auto l = w.encode(left);
    const auto r = w.encode(right);
    REQUIRE(l.has_value());
    REQUIRE(r.has_value());
    CHECK(q.word_class({{y, true}}) == q.word_class({{*l, false}, {*r, false}}));
  }
}

}  // namespace

TEST_CASE("truncation of nerves returns the groupoid") {
  const auto g = cyclic_group(3);
  const auto q = truncate_full(nerve(g, 2));
  REQUIRE(q.groupoid.has_value());
  CHECK(validate_groupoid(*q.groupoid).ok());
  CHECK(*q.groupoid == g);
  const auto p = truncate_full(nerve(pair_groupoid(3), 2));
  CHECK(is_pair_groupoid(*p.groupoid, 3));
}

TEST_CASE("truncation of the fixtures") {
  const WbarModel pair(pair2_fixture(), 2);
  const auto qp = truncate_full(pair.simplicial());
  REQUIRE(qp.groupoid.has_value());
  CHECK(validate_groupoid(*qp.groupoid).ok());
  CHECK(is_pair_groupoid(*qp.groupoid, 2));
  // classes are exactly the endpoint pairs
  for (Index a = 0; a < pair.simplicial().size(1); ++a)
    for (Index b = 0; b < pair.simplicial().size(1); ++b) {
      const auto& x = pair.simplicial();
      const bool same_ends = x.face(1, 0, a) == x.face(1, 0, b) && x.face(1, 1, a) == x.face(1, 1, b);
      CHECK((qp.generator_class[static_cast<std::size_t>(a)] == qp.generator_class[static_cast<std::size_t>(b)]) == same_ends);
    }

  const auto qz = truncate_full(WbarModel(z2grp_fixture(), 2).simplicial());
  CHECK(find_isomorphism(*qz.groupoid, cyclic_group(2)).has_value());

  const auto qu = truncate_full(WbarModel(unit_fixture(3), 2).simplicial());
  CHECK(*qu.groupoid == unit_groupoid(3));
}

TEST_CASE("unfillable horns are rejected") {
  const WbarModel nf(pair2_nonfull_fixture(), 2);
  CHECK_THROWS_AS(truncate_full(nf.simplicial()), HornUnfillable);
}

TEST_CASE("word saturation agrees with the full truncation") {
  const WbarModel pair(pair2_fixture(), 2);
  const auto full = truncate_full(pair.simplicial());
  const auto words = truncate_words(pair.simplicial(), 4);
  CHECK(words.completeness == Completeness::exact);
  REQUIRE(words.groupoid.has_value());
  CHECK(validate_groupoid(*words.groupoid).ok());
  CHECK(*words.groupoid == *full.groupoid);
  CHECK(words.generator_class == full.generator_class);

  const auto z = WbarModel(z2grp_fixture(), 2).simplicial();
  CHECK(*truncate_words(z, 3).groupoid == *truncate_full(z).groupoid);
}

TEST_CASE("word saturation on the non-full fixture is bounded") {
  const WbarModel nf(pair2_nonfull_fixture(), 2);
  const auto q = truncate_words(nf.simplicial(), 4);
  CHECK(q.completeness == Completeness::saturation_bounded);
  CHECK_FALSE(q.groupoid.has_value());
  REQUIRE(q.obstruction.has_value());
  CHECK(q.obstruction->size() <= 2);
  bool irreducible_pair = false;
  for (const auto& w : q.representatives) irreducible_pair = irreducible_pair || w.size() == 2;
  CHECK(irreducible_pair);
  CHECK(groupoidize_double(pair2_nonfull_fixture()).completeness == Completeness::saturation_bounded);
}

TEST_CASE("inverse of a generator factors through the sides") {
  const auto d = pair2_fixture();
  check_lemma_inverse(d, groupoidize_double(d));
  check_lemma_inverse(d, truncate_words(WbarModel(d, 2).simplicial(), 4));
  const auto z = z2grp_fixture();
  check_lemma_inverse(z, groupoidize_double(z));
}

TEST_CASE("quotient respects composition and units") {
  for (const auto& d : {pair2_fixture(), z2grp_fixture(), unit_fixture(2)}) {
    const WbarModel w(d, 2);
    const auto& x = w.simplicial();
    const auto q = groupoidize_double(d);
    REQUIRE(q.groupoid.has_value());
    const auto& g = *q.groupoid;
    for (Index z = 0; z < x.size(2); ++z) {
      const Index a = q.generator_class[static_cast<std::size_t>(x.face(2, 2, z))];
      const Index b = q.generator_class[static_cast<std::size_t>(x.face(2, 0, z))];
      CHECK(g.try_compose(a, b) == q.generator_class[static_cast<std::size_t>(x.face(2, 1, z))]);
    }
    for (Index m = 0; m < x.size(0); ++m)
      CHECK(g.unit(m) == q.generator_class[static_cast<std::size_t>(x.degeneracy(0, 0, m))]);
  }
}

TEST_CASE("square relations hold in the groupoid of a double groupoid") {
  const auto d = pair2_fixture();
  const WbarModel w(d, 1);
  const auto q = groupoidize_double(d);
  const auto& V = d.side_v;
  const auto& H = d.side_h;
  for (Index a = 0; a < d.square_count(); ++a)
    for (Index theta = 0; theta < V.arrow_count(); ++theta)
      for (Index eta = 0; eta < H.arrow_count(); ++eta) {
        if (V.src(theta) != V.tgt(d.t_v(a)) || H.tgt(eta) != H.src(d.s_h(a))) continue;
        const auto lhs = w.encode({1, 0, V.compose(theta, d.t_v(a)), H.compose(d.s_h(a), eta), {}});
        const auto l1 = w.encode({1, 0, theta, d.t_h(a), {}});
        const auto l2 = w.encode({1, 0, d.s_v(a), eta, {}});
        REQUIRE(lhs.has_value());
        REQUIRE(l1.has_value());
        REQUIRE(l2.has_value());
        CHECK(q.word_class({{*lhs, false}}) == q.word_class({{*l1, false}, {*l2, false}}));
      }
}

TEST_CASE("word length must allow a relation") {
  CHECK_THROWS_AS(truncate_words(nerve(cyclic_group(2), 2), 1), InputError);
}
