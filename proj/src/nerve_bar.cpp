#include "highergpd/nerve_bar.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include <boost/container_hash/hash.hpp>

#include "highergpd/errors.hpp"

namespace hgpd {

std::size_t TupleHash::operator()(const Tuple& t) const noexcept {
  return boost::hash_range(t.begin(), t.end());
}

TupleLevel::TupleLevel(std::vector<Tuple> elements) : elements_(std::move(elements)) {
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], static_cast<Index>(i));
}

std::optional<Index> TupleLevel::find(const Tuple& t) const {
  auto it = index_.find(t);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

constexpr Index kMissing = -1;

// `in` holds n arrows of width L row by row, or L objects when n == 0.
Tuple axis_face(const FiniteGroupoid& g, int n, int width, const Tuple& in, int i) {
  const auto L = static_cast<std::size_t>(width);
  Tuple out;
  if (n == 1) {
    out.resize(L);
    for (std::size_t c = 0; c < L; ++c) out[c] = i == 0 ? g.src(in[c]) : g.tgt(in[c]);
    return out;
  }
  out.reserve(static_cast<std::size_t>(n - 1) * L);
  for (int k = 0; k < n; ++k) {
    if ((i == 0 && k == 0) || (i == n && k == n - 1)) continue;
    const auto row = static_cast<std::size_t>(k) * L;
    if (i > 0 && i < n && k == i - 1) {
      for (std::size_t c = 0; c < L; ++c)
        out.push_back(g.try_compose(in[row + c], in[row + L + c]).value_or(kMissing));
      ++k;
      continue;
    }
    out.insert(out.end(), in.begin() + static_cast<std::ptrdiff_t>(row),
               in.begin() + static_cast<std::ptrdiff_t>(row + L));
  }
  return out;
}

Tuple axis_degeneracy(const FiniteGroupoid& g, int n, int width, const Tuple& in, int i) {
  const auto L = static_cast<std::size_t>(width);
  Tuple unit_row(L);
  if (n == 0) {
    for (std::size_t c = 0; c < L; ++c) unit_row[c] = g.unit(in[c]);
    return unit_row;
  }
  for (std::size_t c = 0; c < L; ++c)
    unit_row[c] = i == 0 ? g.unit(g.tgt(in[c]))
                         : g.unit(g.src(in[static_cast<std::size_t>(i - 1) * L + c]));
  Tuple out(in.begin(), in.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(i) * L));
  out.insert(out.end(), unit_row.begin(), unit_row.end());
  out.insert(out.end(), in.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(i) * L),
             in.end());
  return out;
}

// Fills a map by evaluating f on every element of `from` and looking the
// result up in `to`. Lookups run in parallel; failures are reported after.
template <typename F>
IndexMap build_map(const TupleLevel& from, const TupleLevel& to, F f, Exec exec,
                   const char* what) {
  IndexMap m(static_cast<std::size_t>(from.size()), kMissing);
  const long long n = from.size();
  auto body = [&](long long e) {
    m[static_cast<std::size_t>(e)] = to.find(f(from[static_cast<Index>(e)])).value_or(kMissing);
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static) num_threads(thread_count())
    for (long long e = 0; e < n; ++e) body(e);
  } else {
    for (long long e = 0; e < n; ++e) body(e);
  }
  for (std::size_t e = 0; e < m.size(); ++e)
    if (m[e] == kMissing)
      throw StructuralError(std::string(what) + ": image of element " + std::to_string(e) +
                            " is not in the target level");
  return m;
}

}  // namespace

GroupoidNerve nerve_with_elements(const FiniteGroupoid& g, int n) {
  GroupoidNerve out;
  std::vector<Tuple> objs;
  for (Index m = 0; m < g.object_count(); ++m) objs.push_back({m});
  out.levels.emplace_back(std::move(objs));
  for (int q = 1; q <= n; ++q) out.levels.emplace_back(composable_tuples(g, q));

  std::vector<Index> sizes;
  std::vector<std::vector<IndexMap>> faces(static_cast<std::size_t>(n + 1));
  std::vector<std::vector<IndexMap>> degens(static_cast<std::size_t>(n + 1));
  for (int q = 0; q <= n; ++q) {
    const auto& lv = out.levels[static_cast<std::size_t>(q)];
    sizes.push_back(lv.size());
    if (q >= 1)
      for (int i = 0; i <= q; ++i)
        faces[static_cast<std::size_t>(q)].push_back(build_map(
            lv, out.levels[static_cast<std::size_t>(q - 1)],
            [&](const Tuple& t) { return axis_face(g, q, 1, t, i); }, Exec::serial, "nerve face"));
    if (q < n)
      for (int i = 0; i <= q; ++i)
        degens[static_cast<std::size_t>(q)].push_back(build_map(
            lv, out.levels[static_cast<std::size_t>(q + 1)],
            [&](const Tuple& t) { return axis_degeneracy(g, q, 1, t, i); }, Exec::serial,
            "nerve degeneracy"));
  }
  out.simplicial = TruncSimplicialSet(std::move(sizes), std::move(faces), std::move(degens));
  return out;
}

TruncSimplicialSet nerve(const FiniteGroupoid& g, int n) {
  return nerve_with_elements(g, n).simplicial;
}

const TupleLevel& DoubleNerve::at(int p, int q) const {
  auto it = elements.find({p, q});
  if (it == elements.end())
    throw TruncationError("bidegree (" + std::to_string(p) + "," + std::to_string(q) +
                          ") is not stored");
  return it->second;
}

namespace {

std::vector<Tuple> square_arrays(const DoubleGroupoid& d, int p, int q) {
  std::vector<Tuple> out;
  const auto cols = static_cast<std::size_t>(q);
  Tuple cur(static_cast<std::size_t>(p) * cols);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == cur.size()) {
      out.push_back(cur);
      return;
    }
    const std::size_t i = pos / cols;
    const std::size_t j = pos % cols;
    auto try_square = [&](Index a) {
      if (i > 0 && d.t_v(a) != d.s_v(cur[pos - cols])) return;
      cur[pos] = a;
      rec(pos + 1);
    };
    if (j > 0) {
      for (Index a : d.over_h.arrows_into(d.s_h(cur[pos - 1]))) try_square(a);
    } else if (i > 0) {
      for (Index a : d.over_v.arrows_into(d.s_v(cur[pos - cols]))) try_square(a);
    } else {
      for (Index a = 0; a < d.square_count(); ++a) try_square(a);
    }
  };
  rec(0);
  return out;
}

Tuple transpose(const Tuple& t, int rows, int cols) {
  Tuple out(t.size());
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      out[static_cast<std::size_t>(c * rows + r)] = t[static_cast<std::size_t>(r * cols + c)];
  return out;
}

}  // namespace

DoubleNerve double_nerve_with_elements(const DoubleGroupoid& d, BidegreeRange range, Exec exec) {
  DoubleNerve out;
  out.groupoid = d;
  for (int p = 0; p <= range.max_p; ++p)
    for (int q = 0; q <= range.max_q; ++q) {
      if (!range.contains(p, q)) continue;
      std::vector<Tuple> elems;
      if (p == 0 && q == 0) {
        for (Index m = 0; m < d.base_count; ++m) elems.push_back({m});
      } else if (p == 0) {
        elems = composable_tuples(d.side_v, q);
      } else if (q == 0) {
        elems = composable_tuples(d.side_h, p);
      } else {
        elems = square_arrays(d, p, q);
      }
      out.elements.emplace(std::make_pair(p, q), TupleLevel(std::move(elems)));
    }

  auto row_groupoid = [&](int q) -> const FiniteGroupoid& { return q >= 1 ? d.over_v : d.side_h; };
  auto col_groupoid = [&](int p) -> const FiniteGroupoid& { return p >= 1 ? d.over_h : d.side_v; };

  // Column maps: transpose to put columns in rows, act, transpose back.
  auto column_op = [&](int p, int q, int q_out, auto op) {
    const int R = std::max(p, 1);
    return [=](const Tuple& t) {
      const Tuple cols = q >= 1 ? transpose(t, R, q) : t;
      const Tuple res = op(cols);
      return q_out >= 1 ? transpose(res, q_out, R) : res;
    };
  };

  std::map<std::pair<int, int>, TruncBisimplicialSet::Level> levels;
  for (const auto& [bd, lv] : out.elements) {
    const int p = bd.first;
    const int q = bd.second;
    TruncBisimplicialSet::Level L;
    L.size = lv.size();
    const int width_h = std::max(q, 1);
    const int width_v = std::max(p, 1);
    const auto& gh = row_groupoid(q);
    const auto& gv = col_groupoid(p);
    if (p >= 1 && range.contains(p - 1, q))
      for (int i = 0; i <= p; ++i)
        L.h.push_back(build_map(
            lv, out.at(p - 1, q), [&](const Tuple& t) { return axis_face(gh, p, width_h, t, i); },
            exec, "horizontal face"));
    if (range.contains(p + 1, q))
      for (int i = 0; i <= p; ++i)
        L.eta.push_back(build_map(
            lv, out.at(p + 1, q),
            [&](const Tuple& t) { return axis_degeneracy(gh, p, width_h, t, i); }, exec,
            "horizontal degeneracy"));
    if (q >= 1 && range.contains(p, q - 1))
      for (int j = 0; j <= q; ++j)
        L.v.push_back(build_map(
            lv, out.at(p, q - 1),
            column_op(p, q, q - 1,
                      [&gv, q, width_v, j](const Tuple& c) { return axis_face(gv, q, width_v, c, j); }),
            exec, "vertical face"));
    if (range.contains(p, q + 1))
      for (int j = 0; j <= q; ++j)
        L.mu.push_back(build_map(
            lv, out.at(p, q + 1),
            column_op(p, q, q + 1,
                      [&gv, q, width_v, j](const Tuple& c) {
                        return axis_degeneracy(gv, q, width_v, c, j);
                      }),
            exec, "vertical degeneracy"));
    levels.emplace(bd, std::move(L));
  }
  out.bisimplicial = TruncBisimplicialSet(range, std::move(levels));
  return out;
}

TruncBisimplicialSet double_nerve(const DoubleGroupoid& d, int n) {
  return double_nerve_with_elements(d, BidegreeRange::triangle(n)).bisimplicial;
}

BarComplex bar_with_components(const TruncBisimplicialSet& x, int n, Exec exec) {
  if (!x.range().contains(0, n) || !x.range().contains(n, 0) || x.range().max_total < n)
    throw TruncationError("bar level " + std::to_string(n) + " needs all bidegrees p + q <= " +
                          std::to_string(n));
  BarComplex out;
  for (int r = 0; r <= n; ++r) {
    if (r == 0) {
      std::vector<Tuple> pts;
      for (Index m = 0; m < x.size(0, 0); ++m) pts.push_back({m});
      out.components.emplace_back(std::move(pts));
      continue;
    }
    // buckets[i][y]: elements of X_{i+1,r-i-1} with last horizontal face y.
    std::vector<std::vector<std::vector<Index>>> buckets(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
      auto& b = buckets[static_cast<std::size_t>(i)];
      b.resize(static_cast<std::size_t>(x.size(i, r - i - 1)));
      for (Index e = 0; e < x.size(i + 1, r - i - 1); ++e)
        b[static_cast<std::size_t>(x.h(i + 1, r - i - 1, i + 1, e))].push_back(e);
    }
    auto body = [&](std::size_t x0, std::vector<Tuple>& found) {
      Tuple cur(static_cast<std::size_t>(r + 1));
      cur[0] = static_cast<Index>(x0);
      std::function<void(int)> rec = [&](int i) {
        if (i == r) {
          found.push_back(cur);
          return;
        }
        const Index need = x.v(i, r - i, 0, cur[static_cast<std::size_t>(i)]);
        for (Index e : buckets[static_cast<std::size_t>(i)][static_cast<std::size_t>(need)]) {
          cur[static_cast<std::size_t>(i + 1)] = e;
          rec(i + 1);
        }
      };
      rec(0);
    };
    out.components.emplace_back(
        ordered_collect<Tuple>(static_cast<std::size_t>(x.size(0, r)), exec, body));
  }

  std::vector<Index> sizes;
  std::vector<std::vector<IndexMap>> faces(static_cast<std::size_t>(n + 1));
  std::vector<std::vector<IndexMap>> degens(static_cast<std::size_t>(n + 1));
  for (int r = 0; r <= n; ++r) {
    const auto& lv = out.components[static_cast<std::size_t>(r)];
    sizes.push_back(lv.size());
    if (r >= 1)
      for (int i = 0; i <= r; ++i)
        faces[static_cast<std::size_t>(r)].push_back(build_map(
            lv, out.components[static_cast<std::size_t>(r - 1)],
            [&](const Tuple& t) {
              Tuple f;
              f.reserve(static_cast<std::size_t>(r));
              for (int j = 0; j <= r; ++j) {
                const Index xj = t[static_cast<std::size_t>(j)];
                if (j < i) f.push_back(x.v(j, r - j, i - j, xj));
                if (j > i) f.push_back(x.h(j, r - j, i, xj));
              }
              return f;
            },
            exec, "bar face"));
    if (r < n)
      for (int i = 0; i <= r; ++i)
        degens[static_cast<std::size_t>(r)].push_back(build_map(
            lv, out.components[static_cast<std::size_t>(r + 1)],
            [&](const Tuple& t) {
              Tuple s;
              s.reserve(static_cast<std::size_t>(r + 2));
              for (int j = 0; j <= i; ++j) s.push_back(x.mu(j, r - j, i - j, t[static_cast<std::size_t>(j)]));
              for (int j = i; j <= r; ++j) s.push_back(x.eta(j, r - j, i, t[static_cast<std::size_t>(j)]));
              return s;
            },
            exec, "bar degeneracy"));
  }
  out.simplicial = TruncSimplicialSet(std::move(sizes), std::move(faces), std::move(degens));
  return out;
}

TruncSimplicialSet bar(const TruncBisimplicialSet& x, int n) {
  return bar_with_components(x, n).simplicial;
}

int WbarSimplex::offset(int r, int i, int j) {
  return (i - 1) * r - (i - 1) * i / 2 + (j - i);
}

WbarModel::WbarModel(const DoubleGroupoid& d, int n, Exec exec)
    : nerve_(double_nerve_with_elements(d, BidegreeRange::triangle(n), exec)),
      bar_(bar_with_components(nerve_.bisimplicial, n, exec)) {}

WbarSimplex WbarModel::decode(int r, Index x) const {
  const Tuple& c = bar_.components[static_cast<std::size_t>(r)][x];
  WbarSimplex s;
  s.r = r;
  if (r == 0) {
    s.m = nerve_.at(0, 0)[c[0]][0];
    return s;
  }
  s.theta = nerve_.at(0, r)[c[0]][0];
  s.eta = nerve_.at(r, 0)[c[static_cast<std::size_t>(r)]][static_cast<std::size_t>(r - 1)];
  s.alpha.resize(static_cast<std::size_t>(WbarSimplex::alpha_count(r)));
  for (int a = 1; a <= r - 1; ++a) {
    const Tuple& e = nerve_.at(a, r - a)[c[static_cast<std::size_t>(a)]];
    for (int b = a; b <= r - 1; ++b)
      s.a(a, b) = e[static_cast<std::size_t>((a - 1) * (r - a) + (b - a))];
  }
  return s;
}

std::optional<Index> WbarModel::encode(const WbarSimplex& s) const {
  const int r = s.r;
  if (r < 0 || r > top()) return std::nullopt;
  const auto& d = nerve_.groupoid;
  Tuple comps;
  auto push = [&](int p, int q, const Tuple& t) {
    const auto idx = nerve_.at(p, q).find(t);
    if (!idx) return false;
    comps.push_back(*idx);
    return true;
  };
  if (r == 0) {
    if (!push(0, 0, {s.m})) return std::nullopt;
    return bar_.components[0].find(comps);
  }
  if (s.alpha.size() != static_cast<std::size_t>(WbarSimplex::alpha_count(r))) return std::nullopt;
  Tuple x0{s.theta};
  for (int b = 1; b <= r - 1; ++b) x0.push_back(d.t_v(s.a(1, b)));
  if (!push(0, r, x0)) return std::nullopt;
  for (int i = 1; i <= r - 1; ++i) {
    Tuple xi;
    for (int a = 1; a <= i; ++a)
      for (int b = i; b <= r - 1; ++b) xi.push_back(s.a(a, b));
    if (!push(i, r - i, xi)) return std::nullopt;
  }
  Tuple xr;
  for (int a = 1; a <= r - 1; ++a) xr.push_back(d.s_h(s.a(a, r - 1)));
  xr.push_back(s.eta);
  if (!push(r, 0, xr)) return std::nullopt;
  return bar_.components[static_cast<std::size_t>(r)].find(comps);
}

namespace {

WbarSimplex one_simplex(Index theta, Index eta) {
  WbarSimplex s;
  s.r = 1;
  s.theta = theta;
  s.eta = eta;
  return s;
}

WbarSimplex point(Index m) {
  WbarSimplex s;
  s.m = m;
  return s;
}

}  // namespace

std::array<WbarSimplex, 3> wbar_face2(const DoubleGroupoid& d, const WbarSimplex& x) {
  const Index a = x.a(1, 1);
  return {one_simplex(d.s_v(a), x.eta),
          one_simplex(d.side_v.compose(x.theta, d.t_v(a)), d.side_h.compose(d.s_h(a), x.eta)),
          one_simplex(x.theta, d.t_h(a))};
}

std::array<WbarSimplex, 2> wbar_face1(const DoubleGroupoid& d, const WbarSimplex& x) {
  return {point(d.side_h.src(x.eta)), point(d.side_v.tgt(x.theta))};
}

WbarSimplex wbar_degeneracy0(const DoubleGroupoid& d, const WbarSimplex& x) {
  return one_simplex(d.side_v.unit(x.m), d.side_h.unit(x.m));
}

std::array<WbarSimplex, 2> wbar_degeneracy1(const DoubleGroupoid& d, const WbarSimplex& x) {
  WbarSimplex d0;
  d0.r = 2;
  d0.theta = d.side_v.unit(d.side_v.tgt(x.theta));
  d0.alpha = {d.unit_v(x.theta)};
  d0.eta = x.eta;
  WbarSimplex d1;
  d1.r = 2;
  d1.theta = x.theta;
  d1.alpha = {d.unit_h(x.eta)};
  d1.eta = d.side_h.unit(d.side_h.src(x.eta));
  return {d0, d1};
}

}  // namespace hgpd
