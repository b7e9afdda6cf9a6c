#include "doctest.h"

#include <random>

#include "highergpd/errors.hpp"
#include "highergpd/homology.hpp"
#include "highergpd/nerve_bar.hpp"

using namespace hgpd;

namespace {

DegreeHomology free_part(Index betti) { return {betti, {}}; }
DegreeHomology cyclic(long long n) { return {0, {Integer(n)}}; }

// Normalized bar complex of Z/n, built directly from tuples of non-identity
// residues.
std::vector<DegreeHomology> cyclic_group_homology(int n, int max_degree) {
  std::vector<std::vector<std::vector<int>>> basis(static_cast<std::size_t>(max_degree + 2));
  basis[0].push_back({});
  for (int q = 1; q <= max_degree + 1; ++q)
    for (const auto& t : basis[static_cast<std::size_t>(q - 1)])
      for (int g = 1; g < n; ++g) {
        auto u = t;
        u.push_back(g);
        basis[static_cast<std::size_t>(q)].push_back(u);
      }
  auto index_of = [&](int q, const std::vector<int>& t) -> long {
    for (std::size_t i = 0; i < basis[static_cast<std::size_t>(q)].size(); ++i)
      if (basis[static_cast<std::size_t>(q)][i] == t) return static_cast<long>(i);
    return -1;
  };
  std::vector<SmithResult> snf(static_cast<std::size_t>(max_degree + 2));
  for (int q = 1; q <= max_degree + 1; ++q) {
    const auto& rows = basis[static_cast<std::size_t>(q - 1)];
    const auto& cols = basis[static_cast<std::size_t>(q)];
    DenseMatrix m(rows.size(), std::vector<Integer>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const auto& t = cols[c];
      for (int i = 0; i <= q; ++i) {
        std::vector<int> f;
        if (i == 0) {
          f.assign(t.begin() + 1, t.end());
        } else if (i == q) {
          f.assign(t.begin(), t.end() - 1);
        } else {
          for (int j = 0; j < q; ++j) {
            if (j == i - 1) {
              f.push_back((t[static_cast<std::size_t>(j)] + t[static_cast<std::size_t>(j + 1)]) % n);
              ++j;
            } else {
              f.push_back(t[static_cast<std::size_t>(j)]);
            }
          }
        }
        const long r = index_of(q - 1, f);
        if (r >= 0) m[static_cast<std::size_t>(r)][c] += i % 2 == 0 ? 1 : -1;
      }
    }
    snf[static_cast<std::size_t>(q)] = smith_dense(m);
  }
  std::vector<DegreeHomology> out;
  for (int q = 0; q <= max_degree; ++q) {
    const Index r_out = q >= 1 ? snf[static_cast<std::size_t>(q)].rank : 0;
    out.push_back({static_cast<Index>(basis[static_cast<std::size_t>(q)].size()) - r_out -
                       snf[static_cast<std::size_t>(q + 1)].rank,
                   snf[static_cast<std::size_t>(q + 1)].torsion});
  }
  return out;
}

SparseMatrix random_sparse(std::mt19937& rng, Index rows, Index cols, double density, int spread) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> value(-spread, spread);
  SparseMatrix m{rows, cols, {}};
  m.columns.resize(static_cast<std::size_t>(cols));
  for (Index c = 0; c < cols; ++c)
    for (Index r = 0; r < rows; ++r)
      if (coin(rng) < density) {
        const int v = value(rng);
        if (v != 0) m.columns[static_cast<std::size_t>(c)].emplace_back(r, v);
      }
  return m;
}

TruncBisimplicialSet boxed_nerve(const DoubleGroupoid& d, int n) {
  return double_nerve_with_elements(d, BidegreeRange::box(n)).bisimplicial;
}

}  // namespace

TEST_CASE("smith normal form of small matrices") {
  CHECK(smith_dense({{2, 4}, {6, 8}}) == SmithResult{2, {Integer(2), Integer(4)}});
  CHECK(smith_dense({{2, 0}, {0, 3}}) == SmithResult{2, {Integer(6)}});
  CHECK(smith_dense({{0, 0}, {0, 0}}) == SmithResult{0, {}});
  CHECK(smith_dense({}) == SmithResult{0, {}});
  CHECK(smith_dense({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == SmithResult{2, {Integer(3)}});
}

TEST_CASE("sparse elimination agrees with the dense form") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<Index> dim(0, 14);
    const auto m = random_sparse(rng, dim(rng), dim(rng), 0.3, trial % 3 == 0 ? 6 : 1);
    CHECK(smith(m) == smith_dense(to_dense(m)));
  }
}

TEST_CASE("homology of a point and of contractible nerves") {
  const auto point = chains(constant_simplicial(1, 4));
  CHECK(point.ranks == std::vector<Index>{1, 0, 0, 0, 0});
  CHECK(homology(point, 3).degrees ==
        std::vector<DegreeHomology>{free_part(1), free_part(0), free_part(0), free_part(0)});
  const auto pair = homology(chains(nerve(pair_groupoid(3), 4)), 3);
  CHECK(pair.degrees == std::vector<DegreeHomology>{free_part(1), free_part(0), free_part(0), free_part(0)});
  const auto two_points = homology(chains(nerve(unit_groupoid(2), 2)), 1);
  CHECK(two_points.degrees == std::vector<DegreeHomology>{free_part(2), free_part(0)});
}

TEST_CASE("homology of cyclic group nerves") {
  const auto c2 = chains(nerve(cyclic_group(2), 5));
  CHECK(c2.ranks == std::vector<Index>{1, 1, 1, 1, 1, 1});
  const auto h2 = homology(c2, 4);
  CHECK(h2.degrees == std::vector<DegreeHomology>{free_part(1), cyclic(2), free_part(0), cyclic(2), free_part(0)});
  CHECK(h2.degrees == cyclic_group_homology(2, 4));
  CHECK(h2.to_string() == "H0 = Z\nH1 = Z/2\nH2 = 0\nH3 = Z/2\nH4 = 0\n");
  const auto h3 = homology(chains(nerve(cyclic_group(3), 4)), 3);
  CHECK(h3.degrees == cyclic_group_homology(3, 3));
  CHECK(h3.degrees[1] == cyclic(3));
  const auto h4 = homology(chains(nerve(cyclic_group(4), 4)), 3);
  CHECK(h4.degrees == cyclic_group_homology(4, 3));
}

TEST_CASE("normalized and unnormalized chains have the same homology") {
  for (const auto& x : {nerve(cyclic_group(2), 4), nerve(cyclic_group(3), 3), nerve(pair_groupoid(2), 3)}) {
    const auto n = chains(x, true);
    const auto u = chains(x, false);
    CHECK(boundary_squares_to_zero(n));
    CHECK(boundary_squares_to_zero(u));
    const int m = x.top() - 1;
    CHECK(homology(n, m) == homology(u, m));
  }
  const auto w = WbarModel(pair2_fixture(), 3).simplicial();
  CHECK(homology(chains(w, true), 2) == homology(chains(w, false), 2));
}

TEST_CASE("serial and parallel homology agree") {
  const auto c = chains(WbarModel(pair2_fixture(), 4).simplicial());
  CHECK(homology(c, 3, Exec::serial) == homology(c, 3, Exec::parallel));
}

TEST_CASE("homology of the classifying space of the fixtures") {
  const auto pair = homology(chains(WbarModel(pair2_fixture(), 4).simplicial()), 3);
  CHECK(pair.degrees == std::vector<DegreeHomology>{free_part(1), free_part(0), free_part(0), free_part(0)});
  const auto z = homology(chains(WbarModel(z2grp_fixture(), 4).simplicial()), 3);
  CHECK(z.degrees == cyclic_group_homology(2, 3));
}

TEST_CASE("degrees beyond the stored levels are rejected") {
  const auto c = chains(nerve(cyclic_group(2), 2));
  CHECK_THROWS_AS(homology(c, 2), DegreeOutOfRange);
  CHECK_THROWS_AS(homology(c, -1), DegreeOutOfRange);
  CHECK_NOTHROW(homology(c, 1));
}

TEST_CASE("total complex of a double nerve") {
  const auto x = double_nerve(z2grp_fixture(), 3);
  const auto t = total_complex(x);
  CHECK(boundary_squares_to_zero(t));
  CHECK(boundary_squares_to_zero(total_complex(x, true)));
  CHECK(homology(t, 2) == homology(total_complex(x, true), 2));
  CHECK(homology(t, 2).degrees == std::vector<DegreeHomology>{free_part(1), cyclic(2), free_part(0)});
}

TEST_CASE("total complex of an external product follows the Kunneth formula") {
  const auto x = external_product(nerve(cyclic_group(2), 3), nerve(pair_groupoid(2), 3));
  CHECK(homology(total_complex(x), 2).degrees ==
        std::vector<DegreeHomology>{free_part(1), cyclic(2), free_part(0)});
}

TEST_CASE("diagonal, bar and total homology agree") {
  for (const auto& d : {z2grp_fixture(), unit_fixture(1), unit_fixture(2)}) {
    const auto r = compare(boxed_nerve(d, 3), 2);
    CHECK(r.all_agree);
    CHECK(r.agree.size() == 3);
  }
  const auto r = compare(boxed_nerve(z2grp_fixture(), 3), 2);
  CHECK(r.total.degrees[1] == cyclic(2));
  const auto z3 = compare(boxed_nerve(z2grp_fixture(), 4), 3);
  CHECK(z3.all_agree);
  CHECK(z3.total.degrees[3] == cyclic(2));
  const auto p = compare(boxed_nerve(pair2_fixture(), 3), 2);
  CHECK(p.all_agree);
  CHECK(p.diagonal.degrees == std::vector<DegreeHomology>{free_part(1), free_part(0), free_part(0)});
  CHECK_THROWS_AS(compare(boxed_nerve(pair2_fixture(), 2), 2), DegreeOutOfRange);
}
