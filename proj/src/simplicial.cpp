#include "highergpd/simplicial.hpp"

#include <algorithm>
#include <string>

#include "highergpd/errors.hpp"

namespace hgpd {

TruncSimplicialSet::TruncSimplicialSet(std::vector<Index> sizes,
                                       std::vector<std::vector<IndexMap>> faces,
                                       std::vector<std::vector<IndexMap>> degeneracies)
    : sizes_(std::move(sizes)), faces_(std::move(faces)), degens_(std::move(degeneracies)) {
  faces_.resize(sizes_.size());
  degens_.resize(sizes_.size());
}

void TruncSimplicialSet::set_face(int q, int i, Index x, Index value) {
  faces_[static_cast<std::size_t>(q)][static_cast<std::size_t>(i)][static_cast<std::size_t>(x)] = value;
}

void TruncSimplicialSet::set_degeneracy(int q, int i, Index x, Index value) {
  degens_[static_cast<std::size_t>(q)][static_cast<std::size_t>(i)][static_cast<std::size_t>(x)] = value;
}

TruncSimplicialSet TruncSimplicialSet::truncated(int n) const {
  if (n > top()) throw TruncationError("cannot truncate above the stored level");
  const auto len = static_cast<std::size_t>(n + 1);
  std::vector<Index> sizes(sizes_.begin(), sizes_.begin() + static_cast<std::ptrdiff_t>(len));
  std::vector<std::vector<IndexMap>> faces(faces_.begin(),
                                           faces_.begin() + static_cast<std::ptrdiff_t>(len));
  std::vector<std::vector<IndexMap>> degens(degens_.begin(),
                                            degens_.begin() + static_cast<std::ptrdiff_t>(len));
  degens.back().clear();
  return TruncSimplicialSet(std::move(sizes), std::move(faces), std::move(degens));
}

namespace {

bool maps_ok(ValidationReport& rep, const std::string& what, const std::vector<IndexMap>& maps,
             std::size_t count, Index len, Index range) {
  if (maps.size() != count) {
    rep.add_structural(what + ":count",
                       "expected " + std::to_string(count) + " maps, got " +
                           std::to_string(maps.size()));
    return false;
  }
  bool ok = true;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (maps[i].size() != static_cast<std::size_t>(len)) {
      rep.add_structural(what + ":length", "map " + std::to_string(i) + " has " +
                                               std::to_string(maps[i].size()) + " entries, expected " +
                                               std::to_string(len));
      ok = false;
      continue;
    }
    for (std::size_t x = 0; x < maps[i].size(); ++x)
      if (maps[i][x] < 0 || maps[i][x] >= range) {
        rep.add_structural(what + ":range", "map " + std::to_string(i) + " entry " +
                                                std::to_string(x) + " = " +
                                                std::to_string(maps[i][x]));
        ok = false;
        break;
      }
  }
  return ok;
}

// Checks the simplicial identities of a truncated simplicial object given by
// accessors. Witnesses are (q, i, j, x) with x in level q.
template <typename Size, typename Face, typename Degen>
void check_identities(int top, Size size, Face f, Degen d, const std::string& prefix, Exec exec,
                      ValidationReport& rep) {
  for (int q = 0; q <= top; ++q) {
    auto body = [&](std::size_t xi, std::vector<Violation>& out) {
      const auto x = static_cast<Index>(xi);
      auto bad = [&](const char* rule, int i, int j) {
        out.push_back({Violation::Kind::axiom, prefix + rule, {q, i, j, x}, {}});
      };
      if (q >= 2)
        for (int j = 1; j <= q; ++j)
          for (int i = 0; i < j; ++i)
            if (f(q - 1, i, f(q, j, x)) != f(q - 1, j - 1, f(q, i, x))) bad("face-face", i, j);
      if (q + 2 <= top)
        for (int j = 0; j <= q; ++j)
          for (int i = 0; i <= j; ++i)
            if (d(q + 1, i, d(q, j, x)) != d(q + 1, j + 1, d(q, i, x))) bad("degen-degen", i, j);
      if (q + 1 <= top)
        for (int j = 0; j <= q; ++j)
          for (int i = 0; i <= q + 1; ++i) {
            const Index lhs = f(q + 1, i, d(q, j, x));
            Index rhs;
            if (i == j || i == j + 1)
              rhs = x;
            else if (i < j)
              rhs = d(q - 1, j - 1, f(q, i, x));
            else
              rhs = d(q - 1, j, f(q, i - 1, x));
            if (lhs != rhs) bad("face-degen", i, j);
          }
    };
    for (auto& v : ordered_collect<Violation>(static_cast<std::size_t>(size(q)), exec, body))
      rep.add(std::move(v));
  }
}

}  // namespace

ValidationReport validate_simplicial(const TruncSimplicialSet& x, Exec exec) {
  ValidationReport rep;
  const int n = x.top();
  if (n < 0) {
    rep.add_structural("levels", "no levels");
    return rep;
  }
  if (x.faces().size() != x.sizes().size() || x.degeneracies().size() != x.sizes().size()) {
    rep.add_structural("levels", "map arrays do not match the level count");
    return rep;
  }
  bool ok = true;
  for (int q = 0; q <= n; ++q) {
    if (x.size(q) < 0) {
      rep.add_structural("size", "negative level size");
      return rep;
    }
    const std::string lq = "[q=" + std::to_string(q) + "]";
    if (q >= 1)
      ok &= maps_ok(rep, "faces" + lq, x.faces()[static_cast<std::size_t>(q)],
                    static_cast<std::size_t>(q + 1), x.size(q), x.size(q - 1));
    else
      ok &= maps_ok(rep, "faces" + lq, x.faces()[0], 0, x.size(0), 0);
    if (q < n)
      ok &= maps_ok(rep, "degeneracies" + lq, x.degeneracies()[static_cast<std::size_t>(q)],
                    static_cast<std::size_t>(q + 1), x.size(q), x.size(q + 1));
    else
      ok &= maps_ok(rep, "degeneracies" + lq, x.degeneracies()[static_cast<std::size_t>(q)], 0,
                    x.size(q), 0);
  }
  if (!ok) return rep;
  check_identities(
      n, [&](int q) { return x.size(q); },
      [&](int q, int i, Index e) { return x.face(q, i, e); },
      [&](int q, int i, Index e) { return x.degeneracy(q, i, e); }, "", exec, rep);
  return rep;
}

TruncBisimplicialSet::TruncBisimplicialSet(BidegreeRange range,
                                           std::map<std::pair<int, int>, Level> levels)
    : range_(range), levels_(std::move(levels)) {}

const TruncBisimplicialSet::Level& TruncBisimplicialSet::level(int p, int q) const {
  auto it = levels_.find({p, q});
  if (it == levels_.end())
    throw TruncationError("bidegree (" + std::to_string(p) + "," + std::to_string(q) +
                          ") is not stored");
  return it->second;
}

TruncBisimplicialSet::Level& TruncBisimplicialSet::level_mut(int p, int q) {
  auto it = levels_.find({p, q});
  if (it == levels_.end())
    throw TruncationError("bidegree (" + std::to_string(p) + "," + std::to_string(q) +
                          ") is not stored");
  return it->second;
}

ValidationReport validate_bisimplicial(const TruncBisimplicialSet& x, Exec exec) {
  ValidationReport rep;
  const auto& r = x.range();
  bool ok = true;
  for (int p = 0; p <= r.max_p; ++p)
    for (int q = 0; q <= r.max_q; ++q) {
      if (!x.has(p, q)) continue;
      if (!x.levels().count({p, q})) {
        rep.add_structural("missing-level",
                           "(" + std::to_string(p) + "," + std::to_string(q) + ")");
        ok = false;
        continue;
      }
      const auto& lv = x.level(p, q);
      const std::string at = "[" + std::to_string(p) + "," + std::to_string(q) + "]";
      auto expect = [&](const char* name, const std::vector<IndexMap>& maps, bool present,
                        int count, int tp, int tq) {
        const Index range = present ? x.size(tp, tq) : 0;
        ok &= maps_ok(rep, std::string(name) + at, maps,
                      present ? static_cast<std::size_t>(count) : 0, lv.size, range);
      };
      expect("h", lv.h, p >= 1 && x.has(p - 1, q), p + 1, p - 1, q);
      expect("v", lv.v, q >= 1 && x.has(p, q - 1), q + 1, p, q - 1);
      expect("eta", lv.eta, x.has(p + 1, q), p + 1, p + 1, q);
      expect("mu", lv.mu, x.has(p, q + 1), q + 1, p, q + 1);
    }
  if (!ok) return rep;

  // Columns: fixed q, horizontal structure in p.
  for (int q = 0; q <= r.max_q; ++q) {
    int top = -1;
    while (x.has(top + 1, q)) ++top;
    if (top < 0) continue;
    check_identities(
        top, [&](int p) { return x.size(p, q); },
        [&](int p, int i, Index e) { return x.h(p, q, i, e); },
        [&](int p, int i, Index e) { return x.eta(p, q, i, e); },
        "horizontal[q=" + std::to_string(q) + "]:", exec, rep);
  }
  // Rows: fixed p, vertical structure in q.
  for (int p = 0; p <= r.max_p; ++p) {
    int top = -1;
    while (x.has(p, top + 1)) ++top;
    if (top < 0) continue;
    check_identities(
        top, [&](int q) { return x.size(p, q); },
        [&](int q, int j, Index e) { return x.v(p, q, j, e); },
        [&](int q, int j, Index e) { return x.mu(p, q, j, e); },
        "vertical[p=" + std::to_string(p) + "]:", exec, rep);
  }

  // Commutation of horizontal and vertical maps. Witness (p, q, i, j, x).
  for (const auto& [bd, lv] : x.levels()) {
    const int p = bd.first;
    const int q = bd.second;
    auto body = [&](std::size_t ei, std::vector<Violation>& out) {
      const auto e = static_cast<Index>(ei);
      auto bad = [&](const char* rule, int i, int j) {
        out.push_back({Violation::Kind::axiom, rule, {p, q, i, j, e}, {}});
      };
      for (int i = 0; i <= p; ++i)
        for (int j = 0; j <= q; ++j) {
          if (p >= 1 && q >= 1 && x.has(p - 1, q - 1))
            if (x.v(p - 1, q, j, x.h(p, q, i, e)) != x.h(p, q - 1, i, x.v(p, q, j, e)))
              bad("commute:vh", i, j);
          if (x.has(p + 1, q + 1))
            if (x.mu(p + 1, q, j, x.eta(p, q, i, e)) != x.eta(p, q + 1, i, x.mu(p, q, j, e)))
              bad("commute:mu-eta", i, j);
          if (q >= 1 && x.has(p + 1, q) && x.has(p + 1, q - 1))
            if (x.v(p + 1, q, j, x.eta(p, q, i, e)) != x.eta(p, q - 1, i, x.v(p, q, j, e)))
              bad("commute:v-eta", i, j);
          if (p >= 1 && x.has(p, q + 1) && x.has(p - 1, q + 1))
            if (x.mu(p - 1, q, j, x.h(p, q, i, e)) != x.h(p, q + 1, i, x.mu(p, q, j, e)))
              bad("commute:mu-h", i, j);
        }
    };
    for (auto& v : ordered_collect<Violation>(static_cast<std::size_t>(lv.size), exec, body))
      rep.add(std::move(v));
  }
  return rep;
}

TruncSimplicialSet diagonal(const TruncBisimplicialSet& x, int n) {
  const auto& r = x.range();
  const int deepest = std::min({r.max_p, r.max_q, r.max_total / 2});
  if (n < 0) n = deepest;
  if (n > deepest)
    throw TruncationError("diagonal level " + std::to_string(n) + " needs bidegree (" +
                          std::to_string(n) + "," + std::to_string(n) + ")");
  std::vector<Index> sizes;
  std::vector<std::vector<IndexMap>> faces(static_cast<std::size_t>(n + 1));
  std::vector<std::vector<IndexMap>> degens(static_cast<std::size_t>(n + 1));
  for (int q = 0; q <= n; ++q) {
    const Index sz = x.size(q, q);
    sizes.push_back(sz);
    if (q >= 1)
      for (int i = 0; i <= q; ++i) {
        IndexMap m(static_cast<std::size_t>(sz));
        for (Index e = 0; e < sz; ++e) m[static_cast<std::size_t>(e)] = x.h(q, q - 1, i, x.v(q, q, i, e));
        faces[static_cast<std::size_t>(q)].push_back(std::move(m));
      }
    if (q < n)
      for (int i = 0; i <= q; ++i) {
        IndexMap m(static_cast<std::size_t>(sz));
        for (Index e = 0; e < sz; ++e)
          m[static_cast<std::size_t>(e)] = x.eta(q, q + 1, i, x.mu(q, q, i, e));
        degens[static_cast<std::size_t>(q)].push_back(std::move(m));
      }
  }
  return TruncSimplicialSet(std::move(sizes), std::move(faces), std::move(degens));
}

TruncBisimplicialSet external_product(const TruncSimplicialSet& a, const TruncSimplicialSet& b) {
  BidegreeRange range{a.top(), b.top(), a.top() + b.top()};
  std::map<std::pair<int, int>, TruncBisimplicialSet::Level> levels;
  for (int p = 0; p <= a.top(); ++p)
    for (int q = 0; q <= b.top(); ++q) {
      TruncBisimplicialSet::Level lv;
      const Index nb = b.size(q);
      lv.size = a.size(p) * nb;
      auto build = [&](auto f) {
        IndexMap m(static_cast<std::size_t>(lv.size));
        for (Index e = 0; e < lv.size; ++e) m[static_cast<std::size_t>(e)] = f(e / nb, e % nb);
        return m;
      };
      if (p >= 1)
        for (int i = 0; i <= p; ++i)
          lv.h.push_back(build([&](Index x, Index y) { return a.face(p, i, x) * nb + y; }));
      if (q >= 1)
        for (int j = 0; j <= q; ++j)
          lv.v.push_back(
              build([&](Index x, Index y) { return x * b.size(q - 1) + b.face(q, j, y); }));
      if (p < a.top())
        for (int i = 0; i <= p; ++i)
          lv.eta.push_back(build([&](Index x, Index y) { return a.degeneracy(p, i, x) * nb + y; }));
      if (q < b.top())
        for (int j = 0; j <= q; ++j)
          lv.mu.push_back(
              build([&](Index x, Index y) { return x * b.size(q + 1) + b.degeneracy(q, j, y); }));
      levels.emplace(std::make_pair(p, q), std::move(lv));
    }
  return TruncBisimplicialSet(range, std::move(levels));
}

ValidationReport check_simplicial_map(const TruncSimplicialSet& x, const TruncSimplicialSet& y,
                                      const std::vector<IndexMap>& maps) {
  ValidationReport rep;
  const int n = std::min(x.top(), y.top());
  if (maps.size() < static_cast<std::size_t>(n + 1)) {
    rep.add_structural("map-levels", "one map per level is required");
    return rep;
  }
  for (int q = 0; q <= n; ++q) {
    const auto& m = maps[static_cast<std::size_t>(q)];
    if (m.size() != static_cast<std::size_t>(x.size(q))) {
      rep.add_structural("map-length", "level " + std::to_string(q));
      return rep;
    }
    for (Index e : m)
      if (e < 0 || e >= y.size(q)) {
        rep.add_structural("map-range", "level " + std::to_string(q));
        return rep;
      }
  }
  for (int q = 0; q <= n; ++q) {
    const auto& m = maps[static_cast<std::size_t>(q)];
    for (Index e = 0; e < x.size(q); ++e) {
      const Index fe = m[static_cast<std::size_t>(e)];
      if (q >= 1)
        for (int i = 0; i <= q; ++i)
          if (maps[static_cast<std::size_t>(q - 1)][static_cast<std::size_t>(x.face(q, i, e))] !=
              y.face(q, i, fe))
            rep.add_axiom("commutes:face", {q, i, e});
      if (q < n)
        for (int i = 0; i <= q; ++i)
          if (maps[static_cast<std::size_t>(q + 1)][static_cast<std::size_t>(x.degeneracy(q, i, e))] !=
              y.degeneracy(q, i, fe))
            rep.add_axiom("commutes:degeneracy", {q, i, e});
    }
  }
  return rep;
}

ValidationReport check_simplicial_isomorphism(const TruncSimplicialSet& x,
                                              const TruncSimplicialSet& y,
                                              const std::vector<IndexMap>& maps) {
  ValidationReport rep = check_simplicial_map(x, y, maps);
  if (rep.has_structural()) return rep;
  if (x.top() != y.top()) rep.add_structural("levels", "different truncation levels");
  const int n = std::min(x.top(), y.top());
  for (int q = 0; q <= n; ++q) {
    if (x.size(q) != y.size(q)) {
      rep.add_axiom("bijective:size", {q});
      continue;
    }
    std::vector<char> hit(static_cast<std::size_t>(y.size(q)), 0);
    for (Index e : maps[static_cast<std::size_t>(q)]) {
      if (hit[static_cast<std::size_t>(e)]) rep.add_axiom("bijective:injective", {q, e});
      hit[static_cast<std::size_t>(e)] = 1;
    }
  }
  return rep;
}

TruncSimplicialSet constant_simplicial(Index points, int n) {
  IndexMap id(static_cast<std::size_t>(points));
  for (Index i = 0; i < points; ++i) id[static_cast<std::size_t>(i)] = i;
  std::vector<std::vector<IndexMap>> faces(static_cast<std::size_t>(n + 1));
  std::vector<std::vector<IndexMap>> degens(static_cast<std::size_t>(n + 1));
  for (int q = 0; q <= n; ++q) {
    if (q >= 1) faces[static_cast<std::size_t>(q)].assign(static_cast<std::size_t>(q + 1), id);
    if (q < n) degens[static_cast<std::size_t>(q)].assign(static_cast<std::size_t>(q + 1), id);
  }
  return TruncSimplicialSet(std::vector<Index>(static_cast<std::size_t>(n + 1), points),
                            std::move(faces), std::move(degens));
}

bool faces_surjective(const TruncSimplicialSet& x) {
  for (int q = 1; q <= x.top(); ++q)
    for (int i = 0; i <= q; ++i) {
      std::vector<char> hit(static_cast<std::size_t>(x.size(q - 1)), 0);
      for (Index e : x.face_map(q, i)) hit[static_cast<std::size_t>(e)] = 1;
      if (std::find(hit.begin(), hit.end(), 0) != hit.end()) return false;
    }
  return true;
}

}  // namespace hgpd
