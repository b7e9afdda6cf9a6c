#include "doctest.h"

#include "highergpd/double_groupoid.hpp"
#include "highergpd/nerve_bar.hpp"
#include "highergpd/simplicial.hpp"

using namespace hgpd;

TEST_CASE("nerve of Z/2") {
  const auto n = nerve(cyclic_group(2), 3);
  CHECK(n.sizes() == std::vector<Index>{1, 2, 4, 8});
  CHECK(validate_simplicial(n).ok());
  CHECK(faces_surjective(n));
}

TEST_CASE("nerve of the pair groupoid") {
  const auto n = nerve(pair_groupoid(2), 4);
  CHECK(n.sizes() == std::vector<Index>{2, 4, 8, 16, 32});
  CHECK(validate_simplicial(n, Exec::serial).ok());
}

TEST_CASE("corrupted face map is reported") {
  auto n = nerve(cyclic_group(3), 3);
  n.set_face(2, 1, 4, (n.face(2, 1, 4) + 1) % 3);
  const auto r = validate_simplicial(n);
  CHECK_FALSE(r.ok());
  CHECK(r.total() == validate_simplicial(n, Exec::serial).total());
}

TEST_CASE("double nerve of PAIR2") {
  const auto d = pair2_fixture();
  const auto dn = double_nerve_with_elements(d, BidegreeRange::triangle(3));
  CHECK(dn.bisimplicial.size(1, 1) == 16);
  CHECK(dn.bisimplicial.size(0, 0) == 2);
  CHECK(dn.bisimplicial.size(0, 2) == 8);
  CHECK(dn.bisimplicial.size(2, 0) == 8);
  // (p+1)(q+1) free object choices
  CHECK(dn.bisimplicial.size(1, 2) == 64);
  CHECK(dn.bisimplicial.size(2, 1) == 64);
  const auto r = validate_bisimplicial(dn.bisimplicial);
  CHECK_MESSAGE(r.ok(), r.to_string());
}

TEST_CASE("double nerve serial and parallel agree") {
  const auto d = pair2_fixture();
  const auto a = double_nerve_with_elements(d, BidegreeRange::triangle(3), Exec::serial);
  const auto b = double_nerve_with_elements(d, BidegreeRange::triangle(3), Exec::parallel);
  CHECK(a.bisimplicial == b.bisimplicial);
}

TEST_CASE("double nerves of other fixtures validate") {
  for (const auto& d : {pair2_nonfull_fixture(), z2grp_fixture(), unit_fixture(2)}) {
    CAPTURE(d.name);
    const auto r = validate_bisimplicial(double_nerve(d, 3));
    CHECK_MESSAGE(r.ok(), r.to_string());
  }
}

TEST_CASE("bar construction sizes on PAIR2") {
  const WbarModel w(pair2_fixture(), 3);
  CHECK(w.simplicial().size(0) == 2);
  CHECK(w.simplicial().size(1) == 8);
  CHECK(w.simplicial().size(2) == 64);
  CHECK(w.simplicial().size(3) == 1024);
  const auto r = validate_simplicial(w.simplicial());
  CHECK_MESSAGE(r.ok(), r.to_string());
}

TEST_CASE("bar of Z2GRP is the nerve of Z/2") {
  const WbarModel w(z2grp_fixture(), 4);
  CHECK(w.simplicial().sizes() == std::vector<Index>{1, 2, 4, 8, 16});
  CHECK(validate_simplicial(w.simplicial()).ok());
}

TEST_CASE("decode and encode are inverse") {
  for (const auto& d : {pair2_fixture(), pair2_nonfull_fixture(), z2grp_fixture()}) {
    const WbarModel w(d, 4);
    for (int r = 0; r <= 4; ++r)
      for (Index x = 0; x < w.simplicial().size(r); ++x) {
        const auto s = w.decode(r, x);
        const auto back = w.encode(s);
        REQUIRE(back.has_value());
        CHECK(*back == x);
      }
  }
}

TEST_CASE("decoded faces and degeneracies match the bar maps") {
  const auto d = pair2_fixture();
  const WbarModel w(d, 3);
  const auto& x = w.simplicial();
  for (Index e = 0; e < x.size(2); ++e) {
    const auto s = w.decode(2, e);
    const auto f = wbar_face2(d, s);
    for (int i = 0; i <= 2; ++i) CHECK(w.encode(f[static_cast<std::size_t>(i)]) == x.face(2, i, e));
  }
  for (Index e = 0; e < x.size(1); ++e) {
    const auto s = w.decode(1, e);
    const auto f = wbar_face1(d, s);
    for (int i = 0; i <= 1; ++i) CHECK(w.encode(f[static_cast<std::size_t>(i)]) == x.face(1, i, e));
    const auto g = wbar_degeneracy1(d, s);
    for (int i = 0; i <= 1; ++i)
      CHECK(w.encode(g[static_cast<std::size_t>(i)]) == x.degeneracy(1, i, e));
  }
  for (Index e = 0; e < x.size(0); ++e)
    CHECK(w.encode(wbar_degeneracy0(d, w.decode(0, e))) == x.degeneracy(0, 0, e));
}

TEST_CASE("diagonal and external product") {
  const auto n = nerve(cyclic_group(2), 3);
  const auto p = external_product(n, n);
  CHECK(validate_bisimplicial(p).ok());
  const auto diag = diagonal(p);
  CHECK(diag.size(2) == 16);
  CHECK(validate_simplicial(diag).ok());
  const auto dd = diagonal(double_nerve_with_elements(pair2_fixture(), BidegreeRange::box(2)).bisimplicial);
  CHECK(dd.top() == 2);
  CHECK(validate_simplicial(dd).ok());
}

TEST_CASE("identity map is an isomorphism") {
  const auto n = nerve(pair_groupoid(2), 3);
  std::vector<IndexMap> id;
  for (int q = 0; q <= 3; ++q) {
    IndexMap m;
    for (Index x = 0; x < n.size(q); ++x) m.push_back(x);
    id.push_back(m);
  }
  CHECK(check_simplicial_isomorphism(n, n, id).ok());
  id[1][0] = 1;
  CHECK_FALSE(check_simplicial_isomorphism(n, n, id).ok());
}
