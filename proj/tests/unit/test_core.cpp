#include "doctest.h"

#include "highergpd/core_algebra.hpp"
#include "highergpd/errors.hpp"

using namespace hgpd;

TEST_CASE("pair groupoid tables") {
  const auto g = pair_groupoid(3);
  CHECK(g.object_count() == 3);
  CHECK(g.arrow_count() == 9);
  // arrow x*n + y runs from y to x
  CHECK(g.src(1 * 3 + 2) == 2);
  CHECK(g.tgt(1 * 3 + 2) == 1);
  CHECK(g.compose(0 * 3 + 1, 1 * 3 + 2) == 0 * 3 + 2);
  CHECK_FALSE(g.try_compose(0 * 3 + 1, 2 * 3 + 2).has_value());
  CHECK_THROWS_AS(g.compose(0 * 3 + 1, 2 * 3 + 2), UndefinedOperation);
  CHECK(validate_groupoid(g).ok());
}

TEST_CASE("composable tuple counts") {
  CHECK(composable_tuples(pair_groupoid(2), 2).size() == 8);
  CHECK(composable_tuples(cyclic_group(2), 3).size() == 8);
  CHECK(composable_tuples(pair_groupoid(3), 2).size() == 27);
  CHECK(composable_tuples(unit_groupoid(4), 5).size() == 4);
}

TEST_CASE("standard groupoids validate serially and in parallel") {
  for (const auto& g : {unit_groupoid(3), pair_groupoid(4), cyclic_group(5),
                        product_groupoid(pair_groupoid(2), cyclic_group(3))}) {
    const auto a = validate_groupoid(g, Exec::serial);
    const auto b = validate_groupoid(g, Exec::parallel);
    CHECK(a.ok());
    CHECK(a.total() == b.total());
  }
}

TEST_CASE("corrupted inverse is reported with its witness") {
  auto g = cyclic_group(3);
  g.set_inverse(1, 1);
  const auto r = validate_groupoid(g);
  REQUIRE_FALSE(r.ok());
  CHECK(r.mentions("inverse"));
  bool cites = false;
  for (const auto& v : r.violations())
    if (v.rule.rfind("inverse", 0) == 0 && !v.witness.empty() && v.witness[0] == 1) cites = true;
  CHECK(cites);
}

TEST_CASE("corrupted composite breaks associativity or units") {
  auto g = cyclic_group(3);
  g.set_composite(1, 1, 0);
  const auto serial = validate_groupoid(g, Exec::serial);
  const auto parallel = validate_groupoid(g, Exec::parallel);
  CHECK_FALSE(serial.ok());
  CHECK(serial.violations() == parallel.violations());
  CHECK(serial.total() == parallel.total());
}

TEST_CASE("missing composite is structural") {
  auto g = pair_groupoid(2);
  g.set_composite(0, 0, std::nullopt);
  const auto r = validate_groupoid(g);
  CHECK_FALSE(r.ok());
}

TEST_CASE("isomorphism search") {
  CHECK(find_isomorphism(cyclic_group(4), cyclic_group(4)).has_value());
  CHECK_FALSE(find_isomorphism(cyclic_group(4), product_groupoid(cyclic_group(2), cyclic_group(2)))
                  .has_value());
  CHECK(find_isomorphism(product_groupoid(cyclic_group(2), cyclic_group(3)), cyclic_group(6))
            .has_value());
  CHECK_FALSE(find_isomorphism(pair_groupoid(2), product_groupoid(unit_groupoid(2), cyclic_group(2)))
                  .has_value());
}
