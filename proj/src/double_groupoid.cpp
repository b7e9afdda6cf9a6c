#include "highergpd/double_groupoid.hpp"

#include <map>
#include <string>

#include "highergpd/errors.hpp"

namespace hgpd {

namespace {

std::vector<std::int64_t> w(std::initializer_list<Index> xs) {
  return std::vector<std::int64_t>(xs.begin(), xs.end());
}

}  // namespace

ValidationReport validate_double_groupoid(const DoubleGroupoid& d, Exec exec) {
  ValidationReport rep;
  const Index m = d.base_count;
  if (d.side_v.object_count() != m)
    rep.add_structural("side-objects:V", "V must have |M| objects");
  if (d.side_h.object_count() != m)
    rep.add_structural("side-objects:H", "H must have |M| objects");
  if (d.over_v.object_count() != d.side_v.arrow_count())
    rep.add_structural("square-objects:V", "objects of D over V must be the arrows of V");
  if (d.over_h.object_count() != d.side_h.arrow_count())
    rep.add_structural("square-objects:H", "objects of D over H must be the arrows of H");
  if (d.over_v.arrow_count() != d.over_h.arrow_count())
    rep.add_structural("square-count", "both structures must share the square set");
  if (!rep.ok()) return rep;

  rep.merge(validate_groupoid(d.side_v, exec), "V:");
  rep.merge(validate_groupoid(d.side_h, exec), "H:");
  rep.merge(validate_groupoid(d.over_v, exec), "D/V:");
  rep.merge(validate_groupoid(d.over_h, exec), "D/H:");
  if (rep.has_structural()) return rep;

  const auto& V = d.side_v;
  const auto& H = d.side_h;
  const Index n = d.square_count();

  auto per_square = [&](std::size_t ai, std::vector<Violation>& out) {
    const auto a = static_cast<Index>(ai);
    auto bad = [&](const char* rule, std::vector<std::int64_t> wit) {
      out.push_back({Violation::Kind::axiom, rule, std::move(wit), {}});
    };
    // Corners.
    if (H.src(d.s_h(a)) != V.src(d.s_v(a))) bad("corners:s.sH=s.sV", w({a}));
    if (H.tgt(d.t_h(a)) != V.tgt(d.t_v(a))) bad("corners:t.tH=t.tV", w({a}));
    if (H.tgt(d.s_h(a)) != V.src(d.t_v(a))) bad("corners:t.sH=s.tV", w({a}));
    if (H.src(d.t_h(a)) != V.tgt(d.s_v(a))) bad("corners:s.tH=t.sV", w({a}));
    if (V.src(d.s_v(a)) != H.src(d.s_h(a))) bad("double-source", w({a}));

    // Source/target laws for horizontal products a ._H b.
    for (Index b : d.over_h.arrows_into(d.s_h(a))) {
      const auto ab = d.over_h.try_compose(a, b);
      if (!ab) continue;
      const auto sv = V.try_compose(d.s_v(a), d.s_v(b));
      const auto tv = V.try_compose(d.t_v(a), d.t_v(b));
      if (sv != std::optional<Index>(d.s_v(*ab))) bad("homomorphism:sV", w({a, b}));
      if (tv != std::optional<Index>(d.t_v(*ab))) bad("homomorphism:tV", w({a, b}));
    }
    // Vertical products a ._V b.
    for (Index b : d.over_v.arrows_into(d.s_v(a))) {
      const auto ab = d.over_v.try_compose(a, b);
      if (!ab) continue;
      const auto sh = H.try_compose(d.s_h(a), d.s_h(b));
      const auto th = H.try_compose(d.t_h(a), d.t_h(b));
      if (sh != std::optional<Index>(d.s_h(*ab))) bad("homomorphism:sH", w({a, b}));
      if (th != std::optional<Index>(d.t_h(*ab))) bad("homomorphism:tH", w({a, b}));
    }

    // Interchange with a = a11 in the upper-left position.
    for (Index a12 : d.over_h.arrows_into(d.s_h(a))) {
      const auto top = d.over_h.try_compose(a, a12);
      if (!top) continue;
      for (Index a21 : d.over_v.arrows_into(d.s_v(a))) {
        const auto left = d.over_v.try_compose(a, a21);
        if (!left) continue;
        for (Index a22 : d.over_h.arrows_into(d.s_h(a21))) {
          if (d.t_v(a22) != d.s_v(a12)) continue;
          const auto bottom = d.over_h.try_compose(a21, a22);
          const auto right = d.over_v.try_compose(a12, a22);
          if (!bottom || !right) continue;
          const auto rows = d.over_v.try_compose(*top, *bottom);
          const auto cols = d.over_h.try_compose(*left, *right);
          if (!rows || !cols || *rows != *cols) bad("interchange", w({a, a12, a21, a22}));
        }
      }
    }
  };
  for (auto& v : ordered_collect<Violation>(static_cast<std::size_t>(n), exec, per_square))
    rep.add(std::move(v));
  return rep;
}

FullnessResult is_full(const DoubleGroupoid& d) {
  DoubleSourceIndex idx(d);
  for (Index theta = 0; theta < d.side_v.arrow_count(); ++theta)
    for (Index eta : d.side_h.arrows_out_of(d.side_v.src(theta)))
      if (!idx.preimage(theta, eta)) return {false, SidePair{theta, eta}};
  return {};
}

DoubleSourceIndex::DoubleSourceIndex(const DoubleGroupoid& d)
    : h_count_(d.side_h.arrow_count()),
      first_(static_cast<std::size_t>(d.side_v.arrow_count()) *
             static_cast<std::size_t>(d.side_h.arrow_count())) {
  for (Index a = d.square_count() - 1; a >= 0; --a)
    first_[static_cast<std::size_t>(d.s_v(a)) * static_cast<std::size_t>(h_count_) +
           static_cast<std::size_t>(d.s_h(a))] = a;
}

std::optional<Index> DoubleSourceIndex::preimage(Index theta, Index eta) const {
  return first_[static_cast<std::size_t>(theta) * static_cast<std::size_t>(h_count_) +
                static_cast<std::size_t>(eta)];
}

namespace {

// Groupoid of q-tuples of `arrows` (composable along `edge`) over q-tuples of
// objects of `over`, with entrywise composition in `over`.
FiniteGroupoid tuple_groupoid(const FiniteGroupoid& over, const FiniteGroupoid& edge_side,
                              const std::vector<Tuple>& square_tuples, int q) {
  std::map<Tuple, Index> obj_index;
  for (const auto& t : composable_tuples(edge_side, q))
    obj_index.emplace(t, static_cast<Index>(obj_index.size()));
  std::map<Tuple, Index> arr_index;
  for (std::size_t i = 0; i < square_tuples.size(); ++i)
    arr_index.emplace(square_tuples[i], static_cast<Index>(i));

  auto map_each = [&](const Tuple& t, auto f) {
    Tuple r(t.size());
    for (std::size_t j = 0; j < t.size(); ++j) r[j] = f(t[j]);
    return r;
  };
  auto lookup = [](const std::map<Tuple, Index>& m, const Tuple& t) {
    auto it = m.find(t);
    if (it == m.end()) throw StructuralError("tuple groupoid is not closed");
    return it->second;
  };

  std::vector<Index> src, tgt, inv, unit(obj_index.size());
  for (const auto& t : square_tuples) {
    src.push_back(lookup(obj_index, map_each(t, [&](Index a) { return over.src(a); })));
    tgt.push_back(lookup(obj_index, map_each(t, [&](Index a) { return over.tgt(a); })));
    inv.push_back(lookup(arr_index, map_each(t, [&](Index a) { return over.inv(a); })));
  }
  for (const auto& [t, i] : obj_index)
    unit[static_cast<std::size_t>(i)] =
        lookup(arr_index, map_each(t, [&](Index x) { return over.unit(x); }));
  return FiniteGroupoid::from_rule(
      static_cast<Index>(obj_index.size()), src, tgt, unit, inv, [&](Index x, Index y) {
        const auto& tx = square_tuples[static_cast<std::size_t>(x)];
        const auto& ty = square_tuples[static_cast<std::size_t>(y)];
        Tuple r(tx.size());
        for (std::size_t j = 0; j < tx.size(); ++j) r[j] = over.compose(tx[j], ty[j]);
        return lookup(arr_index, r);
      });
}

}  // namespace

FiniteGroupoid horizontal_tuple_groupoid(const DoubleGroupoid& d, int q) {
  return tuple_groupoid(d.over_v, d.side_v, composable_tuples(d.over_h, q), q);
}

FiniteGroupoid vertical_tuple_groupoid(const DoubleGroupoid& d, int p) {
  return tuple_groupoid(d.over_h, d.side_h, composable_tuples(d.over_v, p), p);
}

DoubleGroupoid pair_double_groupoid(const FiniteGroupoid& g, std::string name) {
  DoubleGroupoid d;
  d.name = std::move(name);
  d.base_count = g.object_count();
  d.side_v = g;
  d.side_h = pair_groupoid(g.object_count());
  d.over_v = pair_groupoid(g.arrow_count());
  d.over_h = product_groupoid(g, g);
  return d;
}

DoubleGroupoid groupoid_as_double(const FiniteGroupoid& g, std::string name) {
  DoubleGroupoid d;
  d.name = std::move(name);
  d.base_count = g.object_count();
  d.side_v = g;
  d.side_h = unit_groupoid(g.object_count());
  d.over_v = unit_groupoid(g.arrow_count());
  d.over_h = g;
  return d;
}

DoubleGroupoid unit_double_groupoid(Index objects) {
  DoubleGroupoid d;
  d.name = "unit" + std::to_string(objects);
  d.base_count = objects;
  d.side_v = d.side_h = d.over_v = d.over_h = unit_groupoid(objects);
  return d;
}

namespace {

FiniteGroupoid restrict_arrows(const FiniteGroupoid& g, const std::vector<Index>& kept,
                               const std::vector<Index>& new_index) {
  auto re = [&](Index a) {
    const Index r = new_index[static_cast<std::size_t>(a)];
    if (r < 0) throw StructuralError("square selection is not closed");
    return r;
  };
  std::vector<Index> src, tgt, inv, unit;
  for (Index a : kept) {
    src.push_back(g.src(a));
    tgt.push_back(g.tgt(a));
    inv.push_back(re(g.inv(a)));
  }
  for (Index x = 0; x < g.object_count(); ++x) unit.push_back(re(g.unit(x)));
  return FiniteGroupoid::from_rule(g.object_count(), src, tgt, unit, inv, [&](Index a, Index b) {
    return re(g.compose(kept[static_cast<std::size_t>(a)], kept[static_cast<std::size_t>(b)]));
  });
}

}  // namespace

DoubleGroupoid restrict_squares(const DoubleGroupoid& d, const std::vector<bool>& keep,
                                std::string name) {
  if (keep.size() != static_cast<std::size_t>(d.square_count()))
    throw StructuralError("selection size does not match the square count");
  std::vector<Index> kept, new_index(keep.size(), -1);
  for (Index a = 0; a < d.square_count(); ++a)
    if (keep[static_cast<std::size_t>(a)]) {
      new_index[static_cast<std::size_t>(a)] = static_cast<Index>(kept.size());
      kept.push_back(a);
    }
  DoubleGroupoid r;
  r.name = std::move(name);
  r.base_count = d.base_count;
  r.side_v = d.side_v;
  r.side_h = d.side_h;
  r.over_v = restrict_arrows(d.over_v, kept, new_index);
  r.over_h = restrict_arrows(d.over_h, kept, new_index);
  return r;
}

DoubleGroupoid generated_sub_double_groupoid(const DoubleGroupoid& d,
                                             const std::vector<Index>& generators,
                                             std::string name) {
  const auto n = static_cast<std::size_t>(d.square_count());
  std::vector<bool> in(n, false);
  std::vector<Index> frontier;
  auto add = [&](Index a) {
    if (!in[static_cast<std::size_t>(a)]) {
      in[static_cast<std::size_t>(a)] = true;
      frontier.push_back(a);
    }
  };
  for (Index a : generators) add(a);
  for (Index t = 0; t < d.side_v.arrow_count(); ++t) add(d.unit_v(t));
  for (Index e = 0; e < d.side_h.arrow_count(); ++e) add(d.unit_h(e));
  while (!frontier.empty()) {
    const Index a = frontier.back();
    frontier.pop_back();
    add(d.inv_v(a));
    add(d.inv_h(a));
    std::vector<Index> members;
    for (Index b = 0; b < d.square_count(); ++b)
      if (in[static_cast<std::size_t>(b)]) members.push_back(b);
    for (Index b : members) {
      for (auto c : {d.over_v.try_compose(a, b), d.over_v.try_compose(b, a),
                     d.over_h.try_compose(a, b), d.over_h.try_compose(b, a)})
        if (c) add(*c);
    }
  }
  return restrict_squares(d, in, std::move(name));
}

DoubleGroupoid pair2_fixture() { return pair_double_groupoid(pair_groupoid(2), "pair2"); }

DoubleGroupoid pair2_nonfull_fixture() {
  return generated_sub_double_groupoid(pair2_fixture(), {}, "pair2-nonfull");
}

DoubleGroupoid z2grp_fixture() { return groupoid_as_double(cyclic_group(2), "z2grp"); }

DoubleGroupoid unit_fixture(Index objects) { return unit_double_groupoid(objects); }

}  // namespace hgpd
