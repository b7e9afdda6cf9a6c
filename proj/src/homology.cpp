#include "highergpd/homology.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "highergpd/errors.hpp"
#include "highergpd/nerve_bar.hpp"

namespace hgpd {

DenseMatrix to_dense(const SparseMatrix& m) {
  DenseMatrix d(static_cast<std::size_t>(m.rows), std::vector<Integer>(static_cast<std::size_t>(m.cols)));
  for (Index c = 0; c < m.cols; ++c)
    for (const auto& [r, v] : m.columns[static_cast<std::size_t>(c)])
      d[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] += v;
  return d;
}

SmithResult smith_dense(DenseMatrix m) {
  SmithResult out;
  const std::size_t R = m.size();
  const std::size_t C = R == 0 ? 0 : m[0].size();
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& row : m) std::swap(row[a], row[b]);
  };
  auto move_min_to = [&](std::size_t t, bool whole) {
    std::size_t bi = R, bj = C;
    Integer best = 0;
    auto consider = [&](std::size_t i, std::size_t j) {
      if (m[i][j] == 0) return;
      const Integer a = abs(m[i][j]);
      if (bi == R || a < best) {
        best = a;
        bi = i;
        bj = j;
      }
    };
    if (whole) {
      for (std::size_t i = t; i < R; ++i)
        for (std::size_t j = t; j < C; ++j) consider(i, j);
    } else {
      for (std::size_t i = t; i < R; ++i) consider(i, t);
      for (std::size_t j = t; j < C; ++j) consider(t, j);
    }
    if (bi == R) return false;
    std::swap(m[t], m[bi]);
    swap_cols(t, bj);
    return true;
  };

  std::vector<Integer> diag;
  for (std::size_t t = 0; t < std::min(R, C); ++t) {
    if (!move_min_to(t, true)) break;
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (m[i][t] == 0) continue;
        const Integer q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < C; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (m[t][j] == 0) continue;
        const Integer q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < R; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) {
        move_min_to(t, false);
        continue;
      }
      bool divisible = true;
      for (std::size_t i = t + 1; i < R && divisible; ++i)
        for (std::size_t j = t + 1; j < C; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t k = t; k < C; ++k) m[t][k] += m[i][k];
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    diag.push_back(abs(m[t][t]));
  }
  out.rank = static_cast<Index>(diag.size());
  for (const auto& d : diag)
    if (d > 1) out.torsion.push_back(d);
  std::sort(out.torsion.begin(), out.torsion.end());
  return out;
}

namespace {

using Column = std::vector<std::pair<Index, Integer>>;

// col_a -= f * col_b, both sorted by row.
Column axpy(const Column& a, const Integer& f, const Column& b) {
  Column out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -f * b[j].second);
      ++j;
    } else {
      Integer v = a[i].second - f * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

const Integer* entry(const Column& c, Index row) {
  auto it = std::lower_bound(c.begin(), c.end(), row, [](const auto& e, Index r) { return e.first < r; });
  return it != c.end() && it->first == row ? &it->second : nullptr;
}

}  // namespace

SmithResult smith(const SparseMatrix& m) {
  std::vector<Column> cols(static_cast<std::size_t>(m.cols));
  std::vector<std::unordered_set<Index>> row_cols(static_cast<std::size_t>(m.rows));
  for (Index c = 0; c < m.cols; ++c) {
    std::map<Index, long long> acc;
    for (const auto& [r, v] : m.columns[static_cast<std::size_t>(c)]) acc[r] += v;
    for (const auto& [r, v] : acc)
      if (v != 0) {
        cols[static_cast<std::size_t>(c)].emplace_back(r, Integer(v));
        row_cols[static_cast<std::size_t>(r)].insert(c);
      }
  }

  Index rank = 0;
  for (bool progress = true; progress;) {
    progress = false;
    for (Index c = 0; c < m.cols; ++c) {
      const Column& col = cols[static_cast<std::size_t>(c)];
      if (col.empty()) continue;
      Index pr = -1;
      std::size_t best = 0;
      for (const auto& [r, v] : col)
        if (abs(v) == 1 && (pr < 0 || row_cols[static_cast<std::size_t>(r)].size() < best)) {
          pr = r;
          best = row_cols[static_cast<std::size_t>(r)].size();
        }
      if (pr < 0) continue;
      const Integer u = *entry(col, pr);
      std::vector<Index> others(row_cols[static_cast<std::size_t>(pr)].begin(),
                                row_cols[static_cast<std::size_t>(pr)].end());
      std::sort(others.begin(), others.end());
      const Column pivot = col;
      for (Index o : others) {
        if (o == c) continue;
        Column& oc = cols[static_cast<std::size_t>(o)];
        const Integer f = *entry(oc, pr) * u;
        Column next = axpy(oc, f, pivot);
        for (const auto& [r, v] : oc) row_cols[static_cast<std::size_t>(r)].erase(o);
        for (const auto& [r, v] : next) row_cols[static_cast<std::size_t>(r)].insert(o);
        oc = std::move(next);
      }
      for (const auto& [r, v] : pivot) row_cols[static_cast<std::size_t>(r)].erase(c);
      cols[static_cast<std::size_t>(c)].clear();
      ++rank;
      progress = true;
    }
  }

  std::vector<Index> live_rows, live_cols;
  for (Index r = 0; r < m.rows; ++r)
    if (!row_cols[static_cast<std::size_t>(r)].empty()) live_rows.push_back(r);
  for (Index c = 0; c < m.cols; ++c)
    if (!cols[static_cast<std::size_t>(c)].empty()) live_cols.push_back(c);
  SmithResult out;
  if (!live_cols.empty()) {
    std::map<Index, std::size_t> row_pos;
    for (std::size_t i = 0; i < live_rows.size(); ++i) row_pos[live_rows[i]] = i;
    DenseMatrix d(live_rows.size(), std::vector<Integer>(live_cols.size()));
    for (std::size_t j = 0; j < live_cols.size(); ++j)
      for (const auto& [r, v] : cols[static_cast<std::size_t>(live_cols[j])]) d[row_pos.at(r)][j] = v;
    out = smith_dense(std::move(d));
  }
  out.rank += rank;
  return out;
}

namespace {

void add_entry(std::map<Index, long long>& acc, Index row, long long v) { acc[row] += v; }

std::vector<std::pair<Index, long long>> finish(const std::map<Index, long long>& acc) {
  std::vector<std::pair<Index, long long>> out;
  for (const auto& [r, v] : acc)
    if (v != 0) out.emplace_back(r, v);
  return out;
}

}  // namespace

ChainComplex chains(const TruncSimplicialSet& x, bool normalized) {
  ChainComplex c;
  c.normalized = normalized;
  const int top = x.top();
  // basis[q][simplex] = position in the basis, or -1 when quotiented
  std::vector<std::vector<Index>> basis(static_cast<std::size_t>(top + 1));
  for (int q = 0; q <= top; ++q) {
    std::vector<bool> degenerate(static_cast<std::size_t>(x.size(q)), false);
    if (normalized && q >= 1)
      for (int i = 0; i < q; ++i)
        for (Index y : x.degeneracy_map(q - 1, i)) degenerate[static_cast<std::size_t>(y)] = true;
    auto& b = basis[static_cast<std::size_t>(q)];
    b.assign(static_cast<std::size_t>(x.size(q)), -1);
    Index n = 0;
    for (Index s = 0; s < x.size(q); ++s)
      if (!degenerate[static_cast<std::size_t>(s)]) b[static_cast<std::size_t>(s)] = n++;
    c.ranks.push_back(n);
  }
  c.boundary.resize(static_cast<std::size_t>(top + 1));
  for (int q = 1; q <= top; ++q) {
    auto& m = c.boundary[static_cast<std::size_t>(q)];
    m.rows = c.ranks[static_cast<std::size_t>(q - 1)];
    m.cols = c.ranks[static_cast<std::size_t>(q)];
    m.columns.resize(static_cast<std::size_t>(m.cols));
    const auto& bq = basis[static_cast<std::size_t>(q)];
    const auto& bq1 = basis[static_cast<std::size_t>(q - 1)];
    for (Index s = 0; s < x.size(q); ++s) {
      if (bq[static_cast<std::size_t>(s)] < 0) continue;
      std::map<Index, long long> acc;
      for (int i = 0; i <= q; ++i) {
        const Index row = bq1[static_cast<std::size_t>(x.face(q, i, s))];
        if (row >= 0) add_entry(acc, row, i % 2 == 0 ? 1 : -1);
      }
      m.columns[static_cast<std::size_t>(bq[static_cast<std::size_t>(s)])] = finish(acc);
    }
  }
  return c;
}

ChainComplex total_complex(const TruncBisimplicialSet& x, bool normalized, int max_degree) {
  const auto& range = x.range();
  auto degree_stored = [&](int n) {
    for (int p = 0; p <= n; ++p)
      if (!range.contains(p, n - p)) return false;
    return true;
  };
  int top = -1;
  while (degree_stored(top + 1)) ++top;
  if (max_degree >= 0) top = std::min(top, max_degree);
  if (top < 0) throw TruncationError("no complete total degree is stored");

  // pos[(p,q)][e] = index inside degree p+q, or -1
  std::map<std::pair<int, int>, std::vector<Index>> pos;
  ChainComplex c;
  c.normalized = normalized;
  for (int n = 0; n <= top; ++n) {
    Index offset = 0;
    for (int p = 0; p <= n; ++p) {
      const int q = n - p;
      const Index size = x.size(p, q);
      std::vector<bool> degenerate(static_cast<std::size_t>(size), false);
      if (normalized) {
        if (p >= 1)
          for (int i = 0; i < p; ++i)
            for (Index e = 0; e < x.size(p - 1, q); ++e) degenerate[static_cast<std::size_t>(x.eta(p - 1, q, i, e))] = true;
        if (q >= 1)
          for (int j = 0; j < q; ++j)
            for (Index e = 0; e < x.size(p, q - 1); ++e) degenerate[static_cast<std::size_t>(x.mu(p, q - 1, j, e))] = true;
      }
      auto& v = pos[{p, q}];
      v.assign(static_cast<std::size_t>(size), -1);
      for (Index e = 0; e < size; ++e)
        if (!degenerate[static_cast<std::size_t>(e)]) v[static_cast<std::size_t>(e)] = offset++;
    }
    c.ranks.push_back(offset);
  }
  c.boundary.resize(static_cast<std::size_t>(top + 1));
  for (int n = 1; n <= top; ++n) {
    auto& m = c.boundary[static_cast<std::size_t>(n)];
    m.rows = c.ranks[static_cast<std::size_t>(n - 1)];
    m.cols = c.ranks[static_cast<std::size_t>(n)];
    m.columns.resize(static_cast<std::size_t>(m.cols));
    for (int p = 0; p <= n; ++p) {
      const int q = n - p;
      const auto& here = pos.at({p, q});
      for (Index e = 0; e < x.size(p, q); ++e) {
        const Index col = here[static_cast<std::size_t>(e)];
        if (col < 0) continue;
        std::map<Index, long long> acc;
        if (p >= 1) {
          const auto& there = pos.at({p - 1, q});
          for (int i = 0; i <= p; ++i) {
            const Index row = there[static_cast<std::size_t>(x.h(p, q, i, e))];
            if (row >= 0) add_entry(acc, row, i % 2 == 0 ? 1 : -1);
          }
        }
        if (q >= 1) {
          const auto& there = pos.at({p, q - 1});
          const long long sign = p % 2 == 0 ? 1 : -1;
          for (int j = 0; j <= q; ++j) {
            const Index row = there[static_cast<std::size_t>(x.v(p, q, j, e))];
            if (row >= 0) add_entry(acc, row, j % 2 == 0 ? sign : -sign);
          }
        }
        m.columns[static_cast<std::size_t>(col)] = finish(acc);
      }
    }
  }
  return c;
}

bool boundary_squares_to_zero(const ChainComplex& c) {
  for (int q = 2; q <= c.top(); ++q) {
    const auto& outer = c.boundary[static_cast<std::size_t>(q - 1)];
    const auto& inner = c.boundary[static_cast<std::size_t>(q)];
    for (const auto& col : inner.columns) {
      std::map<Index, long long> acc;
      for (const auto& [mid, v] : col)
        for (const auto& [r, w] : outer.columns[static_cast<std::size_t>(mid)]) acc[r] += v * w;
      for (const auto& [r, v] : acc)
        if (v != 0) return false;
    }
  }
  return true;
}

HomologyResult homology(const ChainComplex& c, int max_degree, Exec exec) {
  if (max_degree < 0) throw DegreeOutOfRange("negative homology degree");
  if (max_degree + 1 > c.top())
    throw DegreeOutOfRange("degree " + std::to_string(max_degree) + " needs level " +
                           std::to_string(max_degree + 1) + ", stored up to " + std::to_string(c.top()));
  const int n = max_degree + 1;
  std::vector<SmithResult> snf(static_cast<std::size_t>(n + 1));
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count())
    for (int q = 1; q <= n; ++q) snf[static_cast<std::size_t>(q)] = smith(c.boundary[static_cast<std::size_t>(q)]);
  } else {
    for (int q = 1; q <= n; ++q) snf[static_cast<std::size_t>(q)] = smith(c.boundary[static_cast<std::size_t>(q)]);
  }
  HomologyResult out;
  for (int q = 0; q <= max_degree; ++q) {
    DegreeHomology h;
    const Index rank_out = q >= 1 ? snf[static_cast<std::size_t>(q)].rank : 0;
    const Index rank_in = snf[static_cast<std::size_t>(q + 1)].rank;
    h.betti = c.ranks[static_cast<std::size_t>(q)] - rank_out - rank_in;
    h.torsion = snf[static_cast<std::size_t>(q + 1)].torsion;
    out.degrees.push_back(std::move(h));
  }
  return out;
}

std::string DegreeHomology::to_string() const {
  std::string terms;
  if (betti == 1) terms = "Z";
  if (betti > 1) terms = "Z^" + std::to_string(betti);
  for (const auto& t : torsion) terms += (terms.empty() ? "" : " + ") + std::string("Z/") + t.str();
  return terms.empty() ? "0" : terms;
}

std::string HomologyResult::to_string() const {
  std::string s;
  for (std::size_t q = 0; q < degrees.size(); ++q) s += "H" + std::to_string(q) + " = " + degrees[q].to_string() + "\n";
  return s;
}

ComparisonReport compare(const TruncBisimplicialSet& x, int max_degree, Exec exec) {
  const int n = max_degree + 1;
  if (max_degree < 0 || !x.has(n, n))
    throw DegreeOutOfRange("comparison up to degree " + std::to_string(max_degree) +
                           " needs every X_{p,q} with p, q <= " + std::to_string(n));
  ComparisonReport r;
  r.max_degree = max_degree;
  r.diagonal = homology(chains(diagonal(x, n), true), max_degree, exec);
  r.bar = homology(chains(bar(x, n), true), max_degree, exec);
  r.total = homology(total_complex(x, true, n), max_degree, exec);
  r.all_agree = true;
  for (int q = 0; q <= max_degree; ++q) {
    const auto& a = r.diagonal.degrees[static_cast<std::size_t>(q)];
    const bool same = a == r.bar.degrees[static_cast<std::size_t>(q)] &&
                      a == r.total.degrees[static_cast<std::size_t>(q)];
    r.agree.push_back(same);
    r.all_agree = r.all_agree && same;
  }
  return r;
}

}  // namespace hgpd
