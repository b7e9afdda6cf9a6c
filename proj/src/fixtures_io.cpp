#include "highergpd/fixtures_io.hpp"

#include <fstream>
#include <sstream>

#include "highergpd/errors.hpp"

namespace hgpd {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw InputError("field '" + path + "': " + what);
}

const Json& need(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

std::string sub(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string sub(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

Index get_index(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  const auto v = j.get<std::int64_t>();
  if (v < 0) fail(path, "must be non-negative");
  return static_cast<Index>(v);
}

int get_int(const Json& j, const std::string& path) { return static_cast<int>(get_index(j, path)); }

std::vector<Index> get_indices(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  std::vector<Index> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(get_index(j[i], sub(path, i)));
  return out;
}

std::vector<IndexMap> get_maps(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of maps");
  std::vector<IndexMap> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(get_indices(j[i], sub(path, i)));
  return out;
}

void check_kind(const Json& j, const char* kind) {
  const Json& k = need(j, "kind", "");
  if (!k.is_string() || k.get<std::string>() != kind)
    throw InputError(std::string("expected kind '") + kind + "', found " + k.dump());
}

std::string get_string(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

bool get_bool(const Json& j, const std::string& path) {
  if (!j.is_boolean()) fail(path, "expected true or false");
  return j.get<bool>();
}

Rational get_rational(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) fail(path, "expected a rational \"p/q\" or an integer");
  try {
    return Rational(j.get<std::string>());
  } catch (const std::exception&) {
    fail(path, "malformed rational " + j.dump());
  }
}

Integer get_integer(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (!j.is_string()) fail(path, "expected an integer string");
  try {
    return Integer(j.get<std::string>());
  } catch (const std::exception&) {
    fail(path, "malformed integer " + j.dump());
  }
}

Json groupoid_body(const FiniteGroupoid& g) {
  Json j;
  j["objects"] = g.object_count();
  j["src"] = g.src_table();
  j["tgt"] = g.tgt_table();
  j["unit"] = g.unit_table();
  j["inv"] = g.inv_table();
  Json comp = Json::array();
  for (Index a = 0; a < g.arrow_count(); ++a)
    for (Index b : g.arrows_into(g.src(a))) {
      const auto c = g.try_compose(a, b);
      if (c) comp.push_back({a, b, *c});
    }
  j["comp"] = std::move(comp);
  return j;
}

FiniteGroupoid groupoid_body_from(const Json& j, const std::string& path) {
  const Index objects = get_index(need(j, "objects", path), sub(path, "objects"));
  auto src = get_indices(need(j, "src", path), sub(path, "src"));
  auto tgt = get_indices(need(j, "tgt", path), sub(path, "tgt"));
  auto unit = get_indices(need(j, "unit", path), sub(path, "unit"));
  auto inv = get_indices(need(j, "inv", path), sub(path, "inv"));
  const std::size_t n = src.size();
  if (tgt.size() != n) fail(sub(path, "tgt"), "length differs from src");
  if (inv.size() != n) fail(sub(path, "inv"), "length differs from src");
  if (unit.size() != static_cast<std::size_t>(objects)) fail(sub(path, "unit"), "length must equal objects");
  for (std::size_t a = 0; a < n; ++a) {
    if (src[a] >= objects) fail(sub(sub(path, "src"), a), "object out of range");
    if (tgt[a] >= objects) fail(sub(sub(path, "tgt"), a), "object out of range");
    if (inv[a] >= static_cast<Index>(n)) fail(sub(sub(path, "inv"), a), "arrow out of range");
  }
  for (std::size_t m = 0; m < unit.size(); ++m)
    if (unit[m] >= static_cast<Index>(n)) fail(sub(sub(path, "unit"), m), "arrow out of range");
  std::vector<std::optional<Index>> comp(n * n);
  const Json& cj = need(j, "comp", path);
  const std::string cpath = sub(path, "comp");
  if (!cj.is_array()) fail(cpath, "expected an array of [a, b, a.b] triples");
  for (std::size_t i = 0; i < cj.size(); ++i) {
    const auto t = get_indices(cj[i], sub(cpath, i));
    if (t.size() != 3) fail(sub(cpath, i), "expected [a, b, a.b]");
    for (Index x : t)
      if (x >= static_cast<Index>(n)) fail(sub(cpath, i), "arrow out of range");
    comp[static_cast<std::size_t>(t[0]) * n + static_cast<std::size_t>(t[1])] = t[2];
  }
  return FiniteGroupoid(objects, std::move(src), std::move(tgt), std::move(unit), std::move(inv), std::move(comp));
}

Json matrix_json(const QMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(rational_to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"shape", {m.rows(), m.cols()}}, {"rows", std::move(rows)}};
}

QMatrix matrix_from(const Json& j, const std::string& path) {
  const auto shape = get_indices(need(j, "shape", path), sub(path, "shape"));
  if (shape.size() != 2) fail(sub(path, "shape"), "expected [rows, cols]");
  const Json& rows = need(j, "rows", path);
  const std::string rpath = sub(path, "rows");
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(shape[0])) fail(rpath, "row count differs from shape");
  QMatrix m(static_cast<int>(shape[0]), static_cast<int>(shape[1]));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].is_array() || rows[r].size() != static_cast<std::size_t>(shape[1]))
      fail(sub(rpath, r), "column count differs from shape");
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      m(static_cast<int>(r), static_cast<int>(c)) = get_rational(rows[r][c], sub(sub(rpath, r), c));
  }
  return m;
}

Json linear_groupoid_json(const LinearGroupoid& g) {
  return {{"objects", g.objects}, {"arrows", g.arrows}, {"src", matrix_json(g.src)}, {"tgt", matrix_json(g.tgt)},
          {"unit", matrix_json(g.unit)}, {"inv", matrix_json(g.inv)}, {"comp", matrix_json(g.comp)}};
}

LinearGroupoid linear_groupoid_from(const Json& j, const std::string& path) {
  const QMatrix src = matrix_from(need(j, "src", path), sub(path, "src"));
  const QMatrix tgt = matrix_from(need(j, "tgt", path), sub(path, "tgt"));
  const QMatrix unit = matrix_from(need(j, "unit", path), sub(path, "unit"));
  LinearGroupoid g = linear_groupoid(src, tgt, unit);
  if (j.contains("objects")) g.objects = get_int(j["objects"], sub(path, "objects"));
  if (j.contains("arrows")) g.arrows = get_int(j["arrows"], sub(path, "arrows"));
  if (j.contains("inv")) g.inv = matrix_from(j["inv"], sub(path, "inv"));
  if (j.contains("comp")) g.comp = matrix_from(j["comp"], sub(path, "comp"));
  return g;
}

Json word_json(const Word& w) {
  Json a = Json::array();
  for (const auto& l : w) a.push_back({{"generator", l.generator}, {"inverse", l.inverse}});
  return a;
}

Word word_from(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of letters");
  Word w;
  for (std::size_t i = 0; i < j.size(); ++i)
    w.push_back({get_index(need(j[i], "generator", sub(path, i)), sub(sub(path, i), "generator")),
                 get_bool(need(j[i], "inverse", sub(path, i)), sub(sub(path, i), "inverse"))});
  return w;
}

Json horn_json(const Horn& h) { return {{"q", h.q}, {"k", h.k}, {"faces", h.faces}}; }

Horn horn_from(const Json& j, const std::string& path) {
  return {get_int(need(j, "q", path), sub(path, "q")), get_int(need(j, "k", path), sub(path, "k")),
          get_indices(need(j, "faces", path), sub(path, "faces"))};
}

}  // namespace

std::string rational_to_string(const Rational& r) { return r.str(); }

std::string word_to_string(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += " ";
    s += "y" + std::to_string(w[i].generator) + (w[i].inverse ? "^-1" : "");
  }
  return s.empty() ? "1" : s;
}

Json to_json(const FiniteGroupoid& g) {
  Json j{{"kind", "groupoid"}};
  j.update(groupoid_body(g));
  return j;
}

FiniteGroupoid groupoid_from_json(const Json& j) {
  check_kind(j, "groupoid");
  return groupoid_body_from(j, "");
}

Json to_json(const DoubleGroupoid& d) {
  return {{"kind", "double-groupoid"}, {"name", d.name}, {"base", d.base_count},
          {"V", groupoid_body(d.side_v)}, {"H", groupoid_body(d.side_h)},
          {"D_over_V", groupoid_body(d.over_v)}, {"D_over_H", groupoid_body(d.over_h)}};
}

DoubleGroupoid double_groupoid_from_json(const Json& j) {
  check_kind(j, "double-groupoid");
  DoubleGroupoid d;
  if (j.contains("name")) d.name = get_string(j["name"], "name");
  d.base_count = get_index(need(j, "base", ""), "base");
  d.side_v = groupoid_body_from(need(j, "V", ""), "V");
  d.side_h = groupoid_body_from(need(j, "H", ""), "H");
  d.over_v = groupoid_body_from(need(j, "D_over_V", ""), "D_over_V");
  d.over_h = groupoid_body_from(need(j, "D_over_H", ""), "D_over_H");
  return d;
}

Json to_json(const TruncSimplicialSet& x) {
  auto degens = x.degeneracies();
  if (!degens.empty()) degens.pop_back();
  return {{"kind", "simplicial"}, {"sizes", x.sizes()}, {"faces", x.faces()}, {"degeneracies", degens}};
}

TruncSimplicialSet simplicial_from_json(const Json& j) {
  check_kind(j, "simplicial");
  auto sizes = get_indices(need(j, "sizes", ""), "sizes");
  const Json& fj = need(j, "faces", "");
  const Json& dj = need(j, "degeneracies", "");
  if (!fj.is_array() || fj.size() != sizes.size()) fail("faces", "expected one entry per level");
  if (!dj.is_array() || dj.size() + 1 != sizes.size()) fail("degeneracies", "expected one entry per level below the top");
  std::vector<std::vector<IndexMap>> faces, degens;
  for (std::size_t q = 0; q < fj.size(); ++q) {
    faces.push_back(get_maps(fj[q], sub("faces", q)));
    const std::size_t want = q == 0 ? 0 : q + 1;
    if (faces.back().size() != want) fail(sub("faces", q), "expected " + std::to_string(want) + " maps");
    for (std::size_t i = 0; i < faces.back().size(); ++i) {
      const auto& m = faces.back()[i];
      if (m.size() != static_cast<std::size_t>(sizes[q])) fail(sub(sub("faces", q), i), "length must equal the level size");
      for (Index y : m)
        if (y >= sizes[q - 1]) fail(sub(sub("faces", q), i), "index out of range");
    }
  }
  for (std::size_t q = 0; q < dj.size(); ++q) {
    degens.push_back(get_maps(dj[q], sub("degeneracies", q)));
    if (degens.back().size() != q + 1) fail(sub("degeneracies", q), "expected " + std::to_string(q + 1) + " maps");
    for (std::size_t i = 0; i < degens.back().size(); ++i) {
      const auto& m = degens.back()[i];
      if (m.size() != static_cast<std::size_t>(sizes[q]))
        fail(sub(sub("degeneracies", q), i), "length must equal the level size");
      for (Index y : m)
        if (y >= sizes[q + 1]) fail(sub(sub("degeneracies", q), i), "index out of range");
    }
  }
  return TruncSimplicialSet(std::move(sizes), std::move(faces), std::move(degens));
}

Json to_json(const TruncBisimplicialSet& x) {
  Json levels = Json::array();
  for (const auto& [pq, l] : x.levels())
    levels.push_back({{"p", pq.first}, {"q", pq.second}, {"size", l.size}, {"h", l.h}, {"v", l.v},
                      {"eta", l.eta}, {"mu", l.mu}});
  const auto& r = x.range();
  return {{"kind", "bisimplicial"},
          {"range", {{"max_p", r.max_p}, {"max_q", r.max_q}, {"max_total", r.max_total}}},
          {"levels", std::move(levels)}};
}

TruncBisimplicialSet bisimplicial_from_json(const Json& j) {
  check_kind(j, "bisimplicial");
  const Json& rj = need(j, "range", "");
  const BidegreeRange range{get_int(need(rj, "max_p", "range"), "range.max_p"),
                            get_int(need(rj, "max_q", "range"), "range.max_q"),
                            get_int(need(rj, "max_total", "range"), "range.max_total")};
  const Json& lj = need(j, "levels", "");
  if (!lj.is_array()) fail("levels", "expected an array");
  std::map<std::pair<int, int>, TruncBisimplicialSet::Level> levels;
  for (std::size_t i = 0; i < lj.size(); ++i) {
    const std::string path = sub("levels", i);
    const int p = get_int(need(lj[i], "p", path), sub(path, "p"));
    const int q = get_int(need(lj[i], "q", path), sub(path, "q"));
    if (!range.contains(p, q)) fail(path, "bidegree outside the range");
    TruncBisimplicialSet::Level l;
    l.size = get_index(need(lj[i], "size", path), sub(path, "size"));
    l.h = get_maps(need(lj[i], "h", path), sub(path, "h"));
    l.v = get_maps(need(lj[i], "v", path), sub(path, "v"));
    l.eta = get_maps(need(lj[i], "eta", path), sub(path, "eta"));
    l.mu = get_maps(need(lj[i], "mu", path), sub(path, "mu"));
    for (const auto* maps : {&l.h, &l.v, &l.eta, &l.mu})
      for (const auto& m : *maps)
        if (m.size() != static_cast<std::size_t>(l.size)) fail(path, "map length must equal the level size");
    levels[{p, q}] = std::move(l);
  }
  for (int p = 0; p <= range.max_p; ++p)
    for (int q = 0; q <= range.max_q; ++q)
      if (range.contains(p, q) && !levels.count({p, q}))
        fail("levels", "bidegree (" + std::to_string(p) + "," + std::to_string(q) + ") is missing");
  try {
    return TruncBisimplicialSet(range, std::move(levels));
  } catch (const Error& e) {
    throw InputError(std::string("levels: ") + e.what());
  }
}

Json to_json(const LinearDoubleGroupoid& l) {
  return {{"kind", "linear-double-groupoid"}, {"name", l.name}, {"M", l.dim_m},
          {"V", linear_groupoid_json(l.side_v)}, {"H", linear_groupoid_json(l.side_h)},
          {"D_over_V", linear_groupoid_json(l.over_v)}, {"D_over_H", linear_groupoid_json(l.over_h)},
          {"omega", matrix_json(l.omega)}};
}

LinearDoubleGroupoid linear_from_json(const Json& j) {
  check_kind(j, "linear-double-groupoid");
  LinearDoubleGroupoid l;
  if (j.contains("name")) l.name = get_string(j["name"], "name");
  l.dim_m = get_int(need(j, "M", ""), "M");
  l.side_v = linear_groupoid_from(need(j, "V", ""), "V");
  l.side_h = linear_groupoid_from(need(j, "H", ""), "H");
  l.over_v = linear_groupoid_from(need(j, "D_over_V", ""), "D_over_V");
  l.over_h = linear_groupoid_from(need(j, "D_over_H", ""), "D_over_H");
  l.omega = matrix_from(need(j, "omega", ""), "omega");
  return l;
}

Json to_json(const QuotientGroupoid& q) {
  Json reps = Json::array();
  for (const auto& w : q.representatives) reps.push_back(word_json(w));
  return {{"kind", "quotient-groupoid"},
          {"completeness", to_string(q.completeness)},
          {"object_count", q.object_count},
          {"class_count", q.class_count()},
          {"generator_class", q.generator_class},
          {"representatives", std::move(reps)},
          {"obstruction", q.obstruction ? word_json(*q.obstruction) : Json(nullptr)},
          {"max_word_len", q.max_word_len},
          {"word_count", q.word_count},
          {"groupoid", q.groupoid ? to_json(*q.groupoid) : Json(nullptr)}};
}

QuotientGroupoid quotient_from_json(const Json& j) {
  check_kind(j, "quotient-groupoid");
  QuotientGroupoid q;
  const std::string c = get_string(need(j, "completeness", ""), "completeness");
  if (c == to_string(Completeness::exact)) {
    q.completeness = Completeness::exact;
  } else if (c == to_string(Completeness::saturation_bounded)) {
    q.completeness = Completeness::saturation_bounded;
  } else {
    fail("completeness", "unknown value '" + c + "'");
  }
  q.object_count = get_index(need(j, "object_count", ""), "object_count");
  q.generator_class = get_indices(need(j, "generator_class", ""), "generator_class");
  const Json& reps = need(j, "representatives", "");
  if (!reps.is_array()) fail("representatives", "expected an array");
  for (std::size_t i = 0; i < reps.size(); ++i) q.representatives.push_back(word_from(reps[i], sub("representatives", i)));
  const Json& ob = need(j, "obstruction", "");
  if (!ob.is_null()) q.obstruction = word_from(ob, "obstruction");
  q.max_word_len = get_int(need(j, "max_word_len", ""), "max_word_len");
  q.word_count = static_cast<std::size_t>(get_index(need(j, "word_count", ""), "word_count"));
  const Json& g = need(j, "groupoid", "");
  if (!g.is_null()) q.groupoid = groupoid_from_json(g);
  return q;
}

Json to_json(const KanReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"q", e.q},
                       {"k", e.k},
                       {"horns", e.horn_count},
                       {"filled", e.filled_count},
                       {"max_fillers", e.max_fillers},
                       {"exists", e.filler_exists_always},
                       {"unique", e.filler_unique_always},
                       {"unfilled", e.unfilled ? horn_json(*e.unfilled) : Json(nullptr)},
                       {"repeated", e.repeated ? Json{e.repeated->first, e.repeated->second} : Json(nullptr)}});
  return {{"kind", "kan-report"},
          {"n", r.n},
          {"top", r.top},
          {"discrete_n_groupoid", r.is_discrete_n_groupoid},
          {"discrete_local_n_groupoid", r.is_discrete_local_n_groupoid},
          {"discrete_local_n_groupoid_with_low_fillers", r.is_discrete_local_n_groupoid_with_low_fillers},
          {"truncation_bounded", r.truncation_bounded},
          {"entries", std::move(entries)}};
}

KanReport kan_report_from_json(const Json& j) {
  check_kind(j, "kan-report");
  KanReport r;
  r.n = get_int(need(j, "n", ""), "n");
  r.top = get_int(need(j, "top", ""), "top");
  r.is_discrete_n_groupoid = get_bool(need(j, "discrete_n_groupoid", ""), "discrete_n_groupoid");
  r.is_discrete_local_n_groupoid = get_bool(need(j, "discrete_local_n_groupoid", ""), "discrete_local_n_groupoid");
  r.is_discrete_local_n_groupoid_with_low_fillers = get_bool(
      need(j, "discrete_local_n_groupoid_with_low_fillers", ""), "discrete_local_n_groupoid_with_low_fillers");
  r.truncation_bounded = get_bool(need(j, "truncation_bounded", ""), "truncation_bounded");
  const Json& ej = need(j, "entries", "");
  if (!ej.is_array()) fail("entries", "expected an array");
  for (std::size_t i = 0; i < ej.size(); ++i) {
    const std::string path = sub("entries", i);
    const Json& e = ej[i];
    KanEntry k;
    k.q = get_int(need(e, "q", path), sub(path, "q"));
    k.k = get_int(need(e, "k", path), sub(path, "k"));
    k.horn_count = static_cast<std::uint64_t>(get_index(need(e, "horns", path), sub(path, "horns")));
    k.filled_count = static_cast<std::uint64_t>(get_index(need(e, "filled", path), sub(path, "filled")));
    k.max_fillers = static_cast<std::uint64_t>(get_index(need(e, "max_fillers", path), sub(path, "max_fillers")));
    k.filler_exists_always = get_bool(need(e, "exists", path), sub(path, "exists"));
    k.filler_unique_always = get_bool(need(e, "unique", path), sub(path, "unique"));
    const Json& u = need(e, "unfilled", path);
    if (!u.is_null()) k.unfilled = horn_from(u, sub(path, "unfilled"));
    const Json& rep = need(e, "repeated", path);
    if (!rep.is_null()) {
      const auto ab = get_indices(rep, sub(path, "repeated"));
      if (ab.size() != 2) fail(sub(path, "repeated"), "expected a pair");
      k.repeated = std::pair<Index, Index>{ab[0], ab[1]};
    }
    r.entries.push_back(std::move(k));
  }
  return r;
}

Json to_json(const HomologyResult& h) {
  Json degrees = Json::array();
  for (std::size_t q = 0; q < h.degrees.size(); ++q) {
    Json torsion = Json::array();
    for (const auto& t : h.degrees[q].torsion) torsion.push_back(t.str());
    degrees.push_back({{"degree", q}, {"betti", h.degrees[q].betti}, {"torsion", std::move(torsion)}});
  }
  return {{"kind", "homology"}, {"truncation_bounded", h.truncation_bounded}, {"degrees", std::move(degrees)}};
}

HomologyResult homology_from_json(const Json& j) {
  check_kind(j, "homology");
  HomologyResult h;
  h.truncation_bounded = get_bool(need(j, "truncation_bounded", ""), "truncation_bounded");
  const Json& dj = need(j, "degrees", "");
  if (!dj.is_array()) fail("degrees", "expected an array");
  for (std::size_t q = 0; q < dj.size(); ++q) {
    const std::string path = sub("degrees", q);
    DegreeHomology d;
    d.betti = get_index(need(dj[q], "betti", path), sub(path, "betti"));
    const Json& t = need(dj[q], "torsion", path);
    if (!t.is_array()) fail(sub(path, "torsion"), "expected an array");
    for (std::size_t i = 0; i < t.size(); ++i) d.torsion.push_back(get_integer(t[i], sub(sub(path, "torsion"), i)));
    h.degrees.push_back(std::move(d));
  }
  return h;
}

Fixture fixture_from_json(const Json& j) {
  const std::string kind = get_string(need(j, "kind", ""), "kind");
  if (kind == "groupoid") return groupoid_from_json(j);
  if (kind == "double-groupoid") return double_groupoid_from_json(j);
  if (kind == "simplicial") return simplicial_from_json(j);
  if (kind == "bisimplicial") return bisimplicial_from_json(j);
  if (kind == "linear-double-groupoid") return linear_from_json(j);
  throw InputError("unknown fixture kind '" + kind + "'");
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

Fixture load_fixture(const std::string& path) {
  const Json j = read_json_file(path);
  try {
    return fixture_from_json(j);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

const char* fixture_kind(const Fixture& f) {
  static const char* names[] = {"groupoid", "double-groupoid", "simplicial", "bisimplicial", "linear-double-groupoid"};
  return names[f.index()];
}

}  // namespace hgpd
