#include "highergpd/kan.hpp"

#include <atomic>
#include <string>
#include <unordered_map>

namespace hgpd {

namespace {

std::vector<int> present_indices(int q, int k) {
  std::vector<int> out;
  for (int i = 0; i <= q; ++i)
    if (i != k) out.push_back(i);
  return out;
}

void check_horn_args(const TruncSimplicialSet& x, int q, int k) {
  if (q < 1 || q > x.top())
    throw TruncationError("horn level " + std::to_string(q) + " outside 1.." +
                          std::to_string(x.top()));
  if (k < 0 || k > q) throw InputError("horn index " + std::to_string(k) + " outside 0.." + std::to_string(q));
}

// preimages[v] = simplices of level q with f_i = v, ascending.
std::vector<std::vector<Index>> preimages(const TruncSimplicialSet& x, int q, int i) {
  std::vector<std::vector<Index>> out(static_cast<std::size_t>(x.size(q - 1)));
  const auto& f = x.face_map(q, i);
  for (Index e = 0; e < x.size(q); ++e) out[static_cast<std::size_t>(f[static_cast<std::size_t>(e)])].push_back(e);
  return out;
}

}  // namespace

bool horn_compatible(const TruncSimplicialSet& x, const Horn& h) {
  if (h.q < 1 || h.q > x.top() || h.k < 0 || h.k > h.q) return false;
  if (h.faces.size() != static_cast<std::size_t>(h.q)) return false;
  for (Index f : h.faces)
    if (f < 0 || f >= x.size(h.q - 1)) return false;
  if (h.q == 1) return true;
  for (int j = 0; j <= h.q; ++j)
    for (int i = 0; i < j; ++i) {
      if (i == h.k || j == h.k) continue;
      if (x.face(h.q - 1, i, h.at(j)) != x.face(h.q - 1, j - 1, h.at(i))) return false;
    }
  return true;
}

Horn horn_of(const TruncSimplicialSet& x, int q, int k, Index simplex) {
  Horn h{q, k, {}};
  h.faces.reserve(static_cast<std::size_t>(q));
  for (int i = 0; i <= q; ++i)
    if (i != k) h.faces.push_back(x.face(q, i, simplex));
  return h;
}

std::vector<Horn> horns(const TruncSimplicialSet& x, int q, int k, Exec exec, std::uint64_t budget) {
  check_horn_args(x, q, k);
  const auto present = present_indices(q, k);
  const Index first_count = x.size(q - 1);

  if (q == 1) {
    if (static_cast<std::uint64_t>(first_count) > budget)
      throw BudgetExceeded("horn enumeration exceeds budget of " + std::to_string(budget));
    std::vector<Horn> out;
    for (Index e = 0; e < first_count; ++e) out.push_back(Horn{q, k, {e}});
    return out;
  }

  const int i0 = present[0];
  const auto buckets = preimages(x, q - 1, i0);
  std::atomic<std::uint64_t> examined{0};
  std::atomic<bool> over{false};

  auto body = [&](std::size_t outer, std::vector<Horn>& out) {
    if (over.load(std::memory_order_relaxed)) return;
    Tuple cur(present.size());
    cur[0] = static_cast<Index>(outer);
    std::uint64_t local = 1;
    auto rec = [&](auto& self, std::size_t p) -> void {
      if (p == present.size()) {
        out.push_back(Horn{q, k, cur});
        return;
      }
      const int j = present[p];
      const Index need = x.face(q - 1, j - 1, cur[0]);
      for (Index c : buckets[static_cast<std::size_t>(need)]) {
        ++local;
        bool ok = true;
        for (std::size_t pp = 1; pp < p && ok; ++pp) {
          const int i = present[pp];
          ok = x.face(q - 1, i, c) == x.face(q - 1, j - 1, cur[pp]);
        }
        if (!ok) continue;
        cur[p] = c;
        self(self, p + 1);
      }
    };
    rec(rec, 1);
    if (examined.fetch_add(local, std::memory_order_relaxed) + local > budget) over = true;
  };
  auto out = ordered_collect<Horn>(static_cast<std::size_t>(first_count), exec, body);
  if (over)
    throw BudgetExceeded("horn enumeration at (" + std::to_string(q) + "," + std::to_string(k) +
                         ") exceeds budget of " + std::to_string(budget));
  return out;
}

std::vector<Index> fillers(const TruncSimplicialSet& x, const Horn& h) {
  check_horn_args(x, h.q, h.k);
  std::vector<Index> out;
  for (Index e = 0; e < x.size(h.q); ++e) {
    bool match = true;
    for (int i = 0; i <= h.q && match; ++i)
      if (i != h.k) match = x.face(h.q, i, e) == h.at(i);
    if (match) out.push_back(e);
  }
  return out;
}

const KanEntry& KanReport::entry(int q, int k) const {
  for (const auto& e : entries)
    if (e.q == q && e.k == k) return e;
  throw TruncationError("no Kan entry for (" + std::to_string(q) + "," + std::to_string(k) + ")");
}

KanReport classify(const TruncSimplicialSet& x, int n, Exec exec, std::uint64_t budget) {
  KanReport rep;
  rep.n = n;
  rep.top = x.top();
  bool all_exist = true;
  bool low_exist = true;
  bool high_unique = true;
  for (int q = 1; q <= x.top(); ++q)
    for (int k = 0; k <= q; ++k) {
      KanEntry e;
      e.q = q;
      e.k = k;
      const auto hs = horns(x, q, k, exec, budget);
      e.horn_count = hs.size();

      std::vector<Tuple> images(static_cast<std::size_t>(x.size(q)));
      auto body = [&](long long s) {
        images[static_cast<std::size_t>(s)] = horn_of(x, q, k, static_cast<Index>(s)).faces;
      };
      const long long count = x.size(q);
      if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static) num_threads(thread_count())
        for (long long s = 0; s < count; ++s) body(s);
      } else {
        for (long long s = 0; s < count; ++s) body(s);
      }
      struct Seen {
        std::uint64_t count = 0;
        Index first = 0;
      };
      std::unordered_map<Tuple, Seen, TupleHash> seen;
      seen.reserve(images.size());
      for (std::size_t s = 0; s < images.size(); ++s) {
        auto& slot = seen[images[s]];
        if (slot.count == 0) slot.first = static_cast<Index>(s);
        ++slot.count;
        if (slot.count > e.max_fillers) e.max_fillers = slot.count;
        if (slot.count == 2 && !e.repeated) e.repeated = std::make_pair(slot.first, static_cast<Index>(s));
      }
      e.filler_unique_always = e.max_fillers <= 1;
      for (const auto& h : hs) {
        auto it = seen.find(h.faces);
        if (it != seen.end()) {
          ++e.filled_count;
        } else if (!e.unfilled) {
          e.unfilled = h;
        }
      }
      e.filler_exists_always = e.filled_count == e.horn_count;

      all_exist = all_exist && e.filler_exists_always;
      if (q <= n) low_exist = low_exist && e.filler_exists_always;
      if (q > n) high_unique = high_unique && e.filler_unique_always;
      rep.entries.push_back(std::move(e));
    }
  rep.is_discrete_n_groupoid = all_exist && high_unique;
  rep.is_discrete_local_n_groupoid = high_unique;
  rep.is_discrete_local_n_groupoid_with_low_fillers = high_unique && low_exist;
  return rep;
}

const char* to_string(FillMethod m) {
  switch (m) {
    case FillMethod::forward_formula: return "forward-formula";
    case FillMethod::mirrored_formula: return "mirrored-formula";
    case FillMethod::double_source: return "double-source";
    case FillMethod::brute_force: return "brute-force";
  }
  return "unknown";
}

namespace {

Index need(std::optional<Index> v, const char* what) {
  if (!v) throw NoFiller(std::string("horn data not composable: ") + what, std::nullopt);
  return *v;
}

WbarSimplex fill_level2(const DoubleGroupoid& d, const WbarModel& w, const Horn& h) {
  const DoubleSourceIndex idx(d);
  const auto& V = d.side_v;
  const auto& H = d.side_h;
  auto face = [&](int i) { return w.decode(1, h.at(i)); };
  auto lookup = [&](Index theta, Index eta) {
    const auto pre = idx.preimage(theta, eta);
    if (!pre)
      throw NoFiller("double-source fiber element (" + std::to_string(theta) + "," +
                         std::to_string(eta) + ") has no preimage",
                     SidePair{theta, eta});
    return *pre;
  };

  WbarSimplex s;
  s.r = 2;
  s.alpha.resize(1);
  if (h.k == 2) {
    const auto y0 = face(0);
    const auto y1 = face(1);
    const Index a = lookup(y0.theta, need(H.try_compose(y1.eta, H.inv(y0.eta)), "b1 b0^-1"));
    s.alpha[0] = a;
    s.theta = need(V.try_compose(y1.theta, V.inv(d.t_v(a))), "a1 t_V(alpha)^-1");
    s.eta = y0.eta;
  } else if (h.k == 0) {
    const auto y1 = face(1);
    const auto y2 = face(2);
    const Index A = need(V.try_compose(V.inv(y2.theta), y1.theta), "a2^-1 a1");
    const Index g = lookup(V.inv(A), H.inv(y2.eta));
    const Index a = d.inv_h(d.inv_v(g));
    s.alpha[0] = a;
    s.theta = y2.theta;
    s.eta = need(H.try_compose(H.inv(d.s_h(a)), y1.eta), "s_H(alpha)^-1 b1");
  } else {
    const auto y0 = face(0);
    const auto y2 = face(2);
    const Index g = lookup(V.inv(y0.theta), y2.eta);
    s.alpha[0] = d.inv_h(g);
    s.theta = y2.theta;
    s.eta = y0.eta;
  }
  return s;
}

WbarSimplex fill_forward(const DoubleGroupoid& d, const WbarModel& w, const Horn& h) {
  const int r = h.q;
  const auto f0 = w.decode(r - 1, h.at(0));
  const auto f1 = w.decode(r - 1, h.at(1));
  const auto f2 = w.decode(r - 1, h.at(2));
  WbarSimplex s;
  s.r = r;
  s.alpha.resize(static_cast<std::size_t>(WbarSimplex::alpha_count(r)));
  s.theta = f2.theta;
  s.eta = f0.eta;
  for (int i = 2; i <= r - 1; ++i)
    for (int j = i; j <= r - 1; ++j) s.a(i, j) = f0.a(i - 1, j - 1);
  for (int j = 3; j <= r - 1; ++j) s.a(1, j) = f2.a(1, j - 1);
  const Index beta = f1.a(1, 1);
  const Index gamma = f2.a(1, 1);
  s.a(1, 2) = need(d.over_v.try_compose(beta, d.inv_v(s.a(2, 2))), "beta ._V inv_V(alpha_22)");
  s.a(1, 1) = need(d.over_h.try_compose(gamma, d.inv_h(s.a(1, 2))), "gamma ._H inv_H(alpha_12)");
  return s;
}

WbarSimplex fill_mirrored(const DoubleGroupoid& d, const WbarModel& w, const Horn& h) {
  const int r = h.q;
  const auto fr = w.decode(r - 1, h.at(r));
  const auto fr1 = w.decode(r - 1, h.at(r - 1));
  const auto fr2 = w.decode(r - 1, h.at(r - 2));
  WbarSimplex s;
  s.r = r;
  s.alpha.resize(static_cast<std::size_t>(WbarSimplex::alpha_count(r)));
  s.theta = fr.theta;
  s.eta = fr2.eta;
  for (int j = 1; j <= r - 2; ++j)
    for (int i = 1; i <= j; ++i) s.a(i, j) = fr.a(i, j);
  for (int i = 1; i <= r - 3; ++i) s.a(i, r - 1) = fr2.a(i, r - 2);
  const Index beta = fr1.a(r - 2, r - 2);
  const Index gamma = fr2.a(r - 2, r - 2);
  s.a(r - 2, r - 1) =
      need(d.over_h.try_compose(d.inv_h(s.a(r - 2, r - 2)), beta), "inv_H(alpha) ._H beta'");
  s.a(r - 1, r - 1) =
      need(d.over_v.try_compose(d.inv_v(s.a(r - 2, r - 1)), gamma), "inv_V(alpha) ._V gamma'");
  return s;
}

}  // namespace

WbarFill fill_wbar_horn(const WbarModel& w, const Horn& h) {
  if (h.q < 2) throw NotApplicable("explicit fillers need horn level at least 2");
  const auto& x = w.simplicial();
  if (h.q > x.top())
    throw TruncationError("horn level " + std::to_string(h.q) + " above stored level " +
                          std::to_string(x.top()));
  if (!horn_compatible(x, h)) throw NoFiller("horn faces are not compatible", std::nullopt);

  const DoubleGroupoid& d = w.groupoid();
  const int r = h.q;
  const int k = h.k;
  WbarFill out;
  std::optional<WbarSimplex> s;
  if (r == 2) {
    s = fill_level2(d, w, h);
    out.method = FillMethod::double_source;
  } else if (k > 2) {
    s = fill_forward(d, w, h);
    out.method = FillMethod::forward_formula;
  } else if (k < r - 2) {
    s = fill_mirrored(d, w, h);
    out.method = FillMethod::mirrored_formula;
  } else {
    const auto all = fillers(x, h);
    if (all.empty()) throw NoFiller("no simplex has this horn", std::nullopt);
    out.simplex = all.front();
    out.method = FillMethod::brute_force;
    return out;
  }
  const auto idx = w.encode(*s);
  if (!idx) throw NoFiller("constructed data do not form a simplex", std::nullopt);
  if (!(horn_of(x, r, k, *idx) == h))
    throw NoFiller("constructed simplex does not restrict to the horn", std::nullopt);
  out.simplex = *idx;
  return out;
}

}  // namespace hgpd
