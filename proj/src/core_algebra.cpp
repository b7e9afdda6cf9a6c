#include "highergpd/core_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "highergpd/errors.hpp"

namespace hgpd {

FiniteGroupoid::FiniteGroupoid(Index objects, std::vector<Index> src, std::vector<Index> tgt,
                               std::vector<Index> unit, std::vector<Index> inv,
                               std::vector<std::optional<Index>> comp)
    : objects_(objects),
      src_(std::move(src)),
      tgt_(std::move(tgt)),
      unit_(std::move(unit)),
      inv_(std::move(inv)),
      comp_(std::move(comp)) {
  build_incidence();
}

FiniteGroupoid FiniteGroupoid::from_rule(Index objects, std::vector<Index> src,
                                         std::vector<Index> tgt, std::vector<Index> unit,
                                         std::vector<Index> inv,
                                         const std::function<Index(Index, Index)>& mul) {
  const std::size_t n = src.size();
  std::vector<std::optional<Index>> comp(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (src[a] == tgt[b]) comp[a * n + b] = mul(static_cast<Index>(a), static_cast<Index>(b));
  return FiniteGroupoid(objects, std::move(src), std::move(tgt), std::move(unit), std::move(inv),
                        std::move(comp));
}

void FiniteGroupoid::build_incidence() {
  into_.assign(static_cast<std::size_t>(std::max<Index>(objects_, 0)), {});
  out_of_.assign(into_.size(), {});
  const std::size_t n = std::min(src_.size(), tgt_.size());
  for (std::size_t a = 0; a < n; ++a) {
    if (tgt_[a] >= 0 && tgt_[a] < objects_)
      into_[static_cast<std::size_t>(tgt_[a])].push_back(static_cast<Index>(a));
    if (src_[a] >= 0 && src_[a] < objects_)
      out_of_[static_cast<std::size_t>(src_[a])].push_back(static_cast<Index>(a));
  }
}

std::optional<Index> FiniteGroupoid::try_compose(Index a, Index b) const {
  return comp_[static_cast<std::size_t>(a) * src_.size() + static_cast<std::size_t>(b)];
}

Index FiniteGroupoid::compose(Index a, Index b) const {
  auto c = try_compose(a, b);
  if (!c)
    throw UndefinedOperation("composite of arrows " + std::to_string(a) + " and " +
                             std::to_string(b) + " is undefined");
  return *c;
}

void FiniteGroupoid::set_composite(Index a, Index b, std::optional<Index> value) {
  comp_[static_cast<std::size_t>(a) * src_.size() + static_cast<std::size_t>(b)] = value;
}

bool FiniteGroupoid::operator==(const FiniteGroupoid& o) const {
  return objects_ == o.objects_ && src_ == o.src_ && tgt_ == o.tgt_ && unit_ == o.unit_ &&
         inv_ == o.inv_ && comp_ == o.comp_;
}

namespace {

bool in_range(Index v, Index n) { return v >= 0 && v < n; }

void check_table(ValidationReport& rep, const char* name, const std::vector<Index>& t,
                 std::size_t expected_len, Index range) {
  if (t.size() != expected_len) {
    rep.add_structural(std::string("table-size:") + name,
                       "expected " + std::to_string(expected_len) + " entries, got " +
                           std::to_string(t.size()));
    return;
  }
  for (std::size_t i = 0; i < t.size(); ++i)
    if (!in_range(t[i], range)) {
      rep.add_structural(std::string("out-of-range:") + name,
                         "entry " + std::to_string(i) + " = " + std::to_string(t[i]));
    }
}

}  // namespace

ValidationReport validate_groupoid(const FiniteGroupoid& g, Exec exec) {
  ValidationReport rep;
  const Index n = g.arrow_count();
  const Index m = g.object_count();
  const auto un = static_cast<std::size_t>(n);
  if (m < 0) rep.add_structural("object-count", "negative object count");
  check_table(rep, "src", g.src_table(), un, m);
  check_table(rep, "tgt", g.tgt_table(), un, m);
  check_table(rep, "unit", g.unit_table(), static_cast<std::size_t>(std::max<Index>(m, 0)), n);
  check_table(rep, "inv", g.inv_table(), un, n);
  if (g.comp_table().size() != un * un) {
    rep.add_structural("table-size:comp", "expected " + std::to_string(un * un) + " entries");
  } else {
    for (std::size_t i = 0; i < g.comp_table().size(); ++i) {
      const auto& c = g.comp_table()[i];
      if (c && !in_range(*c, n))
        rep.add_structural("out-of-range:comp", "entry (" + std::to_string(i / un) + "," +
                                                    std::to_string(i % un) + ") = " +
                                                    std::to_string(*c));
    }
  }
  if (!rep.ok()) return rep;

  for (Index x = 0; x < m; ++x) {
    if (g.src(g.unit(x)) != x || g.tgt(g.unit(x)) != x) rep.add_axiom("unit-endpoints", {x});
  }

  // Per-arrow checks; each index owns the triples starting at arrow a.
  auto per_arrow = [&](std::size_t ai, std::vector<Violation>& out) {
    const auto a = static_cast<Index>(ai);
    for (Index b = 0; b < n; ++b) {
      const bool defined = g.try_compose(a, b).has_value();
      if (defined != g.composable(a, b)) {
        out.push_back({Violation::Kind::axiom, "comp-domain", {a, b}, {}});
        continue;
      }
      if (!defined) continue;
      const Index ab = *g.try_compose(a, b);
      if (g.src(ab) != g.src(b) || g.tgt(ab) != g.tgt(a))
        out.push_back({Violation::Kind::axiom, "comp-endpoints", {a, b}, {}});
    }
    const Index ia = g.inv(a);
    if (g.src(ia) != g.tgt(a) || g.tgt(ia) != g.src(a)) {
      out.push_back({Violation::Kind::axiom, "inverse-endpoints", {a}, {}});
    } else {
      if (g.try_compose(a, ia) != std::optional<Index>(g.unit(g.tgt(a))))
        out.push_back({Violation::Kind::axiom, "inverse-right", {a}, {}});
      if (g.try_compose(ia, a) != std::optional<Index>(g.unit(g.src(a))))
        out.push_back({Violation::Kind::axiom, "inverse-left", {a}, {}});
    }
    if (g.try_compose(g.unit(g.tgt(a)), a) != std::optional<Index>(a))
      out.push_back({Violation::Kind::axiom, "unit-left", {a}, {}});
    if (g.try_compose(a, g.unit(g.src(a))) != std::optional<Index>(a))
      out.push_back({Violation::Kind::axiom, "unit-right", {a}, {}});
    for (Index b : g.arrows_into(g.src(a))) {
      const auto ab = g.try_compose(a, b);
      if (!ab) continue;
      for (Index c : g.arrows_into(g.src(b))) {
        const auto bc = g.try_compose(b, c);
        if (!bc) continue;
        const auto left = g.try_compose(*ab, c);
        const auto right = g.try_compose(a, *bc);
        if (left != right) out.push_back({Violation::Kind::axiom, "associativity", {a, b, c}, {}});
      }
    }
  };
  for (auto& v : ordered_collect<Violation>(un, exec, per_arrow)) rep.add(std::move(v));
  return rep;
}

std::vector<Tuple> composable_tuples(const FiniteGroupoid& g, int q) {
  std::vector<Tuple> out;
  if (q < 1) return out;
  Tuple cur(static_cast<std::size_t>(q));
  // Depth-first with lexicographic order: position i+1 ranges over arrows
  // whose target is the source of position i.
  std::function<void(int)> rec = [&](int pos) {
    if (pos == q) {
      out.push_back(cur);
      return;
    }
    if (pos == 0) {
      for (Index a = 0; a < g.arrow_count(); ++a) {
        cur[0] = a;
        rec(1);
      }
      return;
    }
    for (Index a : g.arrows_into(g.src(cur[static_cast<std::size_t>(pos - 1)]))) {
      cur[static_cast<std::size_t>(pos)] = a;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

FiniteGroupoid unit_groupoid(Index objects) {
  std::vector<Index> id(static_cast<std::size_t>(objects));
  std::iota(id.begin(), id.end(), 0);
  return FiniteGroupoid::from_rule(objects, id, id, id, id, [](Index a, Index) { return a; });
}

FiniteGroupoid pair_groupoid(Index objects) {
  const Index n = objects;
  std::vector<Index> src, tgt, unit, inv;
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      src.push_back(y);
      tgt.push_back(x);
      inv.push_back(y * n + x);
    }
  for (Index x = 0; x < n; ++x) unit.push_back(x * n + x);
  return FiniteGroupoid::from_rule(n, src, tgt, unit, inv, [n](Index a, Index b) {
    return (a / n) * n + (b % n);
  });
}

FiniteGroupoid cyclic_group(Index order) {
  std::vector<Index> zero(static_cast<std::size_t>(order), 0), inv;
  for (Index k = 0; k < order; ++k) inv.push_back((order - k) % order);
  return FiniteGroupoid::from_rule(1, zero, zero, {0}, inv,
                                   [order](Index a, Index b) { return (a + b) % order; });
}

FiniteGroupoid product_groupoid(const FiniteGroupoid& g1, const FiniteGroupoid& g2) {
  const Index n2 = g2.arrow_count();
  const Index m2 = g2.object_count();
  std::vector<Index> src, tgt, unit, inv;
  for (Index a = 0; a < g1.arrow_count(); ++a)
    for (Index b = 0; b < n2; ++b) {
      src.push_back(g1.src(a) * m2 + g2.src(b));
      tgt.push_back(g1.tgt(a) * m2 + g2.tgt(b));
      inv.push_back(g1.inv(a) * n2 + g2.inv(b));
    }
  for (Index x = 0; x < g1.object_count(); ++x)
    for (Index y = 0; y < m2; ++y) unit.push_back(g1.unit(x) * n2 + g2.unit(y));
  return FiniteGroupoid::from_rule(g1.object_count() * m2, src, tgt, unit, inv,
                                   [&](Index a, Index b) {
                                     return g1.compose(a / n2, b / n2) * n2 +
                                            g2.compose(a % n2, b % n2);
                                   });
}

std::optional<GroupoidIsomorphism> find_isomorphism(const FiniteGroupoid& a,
                                                    const FiniteGroupoid& b) {
  if (a.object_count() != b.object_count() || a.arrow_count() != b.arrow_count())
    return std::nullopt;
  const Index m = a.object_count();
  const Index n = a.arrow_count();
  std::vector<Index> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<Index> amap(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    auto obj = [&](Index x) { return perm[static_cast<std::size_t>(x)]; };
    // Every composite among arrows 0..x whose factors and result are all
    // assigned, with x among them.
    auto consistent = [&](Index x) {
      for (Index p = 0; p <= x; ++p)
        for (Index q = 0; q <= x; ++q) {
          const auto pq = a.try_compose(p, q);
          if (!pq || *pq > x) continue;
          if (p != x && q != x && *pq != x) continue;
          if (b.try_compose(amap[static_cast<std::size_t>(p)], amap[static_cast<std::size_t>(q)]) !=
              std::optional<Index>(amap[static_cast<std::size_t>(*pq)]))
            return false;
        }
      return true;
    };
    std::function<bool(Index)> rec = [&](Index x) -> bool {
      if (x == n) return true;
      for (Index y = 0; y < n; ++y) {
        if (used[static_cast<std::size_t>(y)]) continue;
        if (b.src(y) != obj(a.src(x)) || b.tgt(y) != obj(a.tgt(x))) continue;
        amap[static_cast<std::size_t>(x)] = y;
        used[static_cast<std::size_t>(y)] = 1;
        if (consistent(x) && rec(x + 1)) return true;
        used[static_cast<std::size_t>(y)] = 0;
        amap[static_cast<std::size_t>(x)] = -1;
      }
      return false;
    };
    if (rec(0)) return GroupoidIsomorphism{perm, amap};
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace hgpd
