#include "doctest.h"

#include "highergpd/double_groupoid.hpp"
#include "highergpd/errors.hpp"

using namespace hgpd;

TEST_CASE("built-in double groupoids validate") {
  for (const auto& d : {pair2_fixture(), pair2_nonfull_fixture(), z2grp_fixture(), unit_fixture(3),
                        pair_double_groupoid(pair_groupoid(3)),
                        groupoid_as_double(product_groupoid(pair_groupoid(2), cyclic_group(3)))}) {
    CAPTURE(d.name);
    const auto r = validate_double_groupoid(d, Exec::parallel);
    CHECK_MESSAGE(r.ok(), r.to_string());
    CHECK(validate_double_groupoid(d, Exec::serial).total() == r.total());
  }
}

TEST_CASE("fixture sizes and fullness") {
  const auto p = pair2_fixture();
  CHECK(p.base_count == 2);
  CHECK(p.side_v.arrow_count() == 4);
  CHECK(p.side_h.arrow_count() == 4);
  CHECK(p.square_count() == 16);
  CHECK(is_full(p).full);

  const auto n = pair2_nonfull_fixture();
  CHECK(n.square_count() == 6);
  const auto f = is_full(n);
  CHECK_FALSE(f.full);
  REQUIRE(f.unhit.has_value());
  CHECK(n.side_v.src(f.unhit->theta) == n.side_h.src(f.unhit->eta));

  CHECK(z2grp_fixture().square_count() == 2);
  CHECK(is_full(z2grp_fixture()).full);
  CHECK(is_full(unit_fixture(2)).full);
}

TEST_CASE("double-source index") {
  const auto d = pair2_fixture();
  const DoubleSourceIndex idx(d);
  for (Index a = 0; a < d.square_count(); ++a) {
    const auto pre = idx.preimage(d.s_v(a), d.s_h(a));
    REQUIRE(pre.has_value());
    CHECK(d.s_v(*pre) == d.s_v(a));
    CHECK(d.s_h(*pre) == d.s_h(a));
  }
}

TEST_CASE("tuple groupoids validate") {
  const auto d = pair2_fixture();
  for (int q = 1; q <= 3; ++q) {
    CHECK(validate_groupoid(horizontal_tuple_groupoid(d, q)).ok());
    CHECK(validate_groupoid(vertical_tuple_groupoid(d, q)).ok());
  }
  CHECK(horizontal_tuple_groupoid(d, 2).object_count() == 8);
}

TEST_CASE("corrupting a horizontal composite is detected") {
  auto d = z2grp_fixture();
  bool corrupted = false;
  for (Index a = 0; a < d.square_count() && !corrupted; ++a)
    for (Index b = 0; b < d.square_count() && !corrupted; ++b) {
      const auto c = d.over_h.try_compose(a, b);
      if (!c) continue;
      for (Index e = 0; e < d.square_count(); ++e)
        if (e != *c && d.s_h(e) == d.s_h(*c) && d.t_h(e) == d.t_h(*c)) {
          d.over_h.set_composite(a, b, e);
          corrupted = true;
          break;
        }
    }
  REQUIRE(corrupted);
  const auto r = validate_double_groupoid(d);
  CHECK_FALSE(r.ok());
  CHECK(r.total() == validate_double_groupoid(d, Exec::serial).total());
}

TEST_CASE("restricting to a non-closed selection throws") {
  const auto d = pair2_fixture();
  std::vector<bool> keep(static_cast<std::size_t>(d.square_count()), false);
  keep[0] = true;
  CHECK_THROWS_AS(restrict_squares(d, keep, "bad"), StructuralError);
}

TEST_CASE("sub-double-groupoid generated by all squares is everything") {
  const auto d = pair2_fixture();
  std::vector<Index> all;
  for (Index a = 0; a < d.square_count(); ++a) all.push_back(a);
  CHECK(generated_sub_double_groupoid(d, all, "all").square_count() == 16);
}
