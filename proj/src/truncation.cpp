#include "highergpd/truncation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "highergpd/errors.hpp"
#include "highergpd/kan.hpp"

namespace hgpd {

const char* to_string(Completeness c) {
  return c == Completeness::exact ? "exact" : "saturation-bounded";
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), Index{0}); }
  Index find(Index a) {
    while (parent_[static_cast<std::size_t>(a)] != a) {
      auto& p = parent_[static_cast<std::size_t>(a)];
      p = parent_[static_cast<std::size_t>(p)];
      a = p;
    }
    return a;
  }
  // The smaller root survives, so roots are lowest members.
  bool unite(Index a, Index b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    return true;
  }

 private:
  std::vector<Index> parent_;
};

Index encode_letter(const Letter& l) { return 2 * l.generator + (l.inverse ? 1 : 0); }
Letter decode_letter(Index e) { return Letter{e / 2, (e % 2) != 0}; }

Tuple encode_word(const Word& w) {
  Tuple t;
  t.reserve(w.size());
  for (const auto& l : w) t.push_back(encode_letter(l));
  return t;
}

Word decode_word(const Tuple& t) {
  Word w;
  w.reserve(t.size());
  for (Index e : t) w.push_back(decode_letter(e));
  return w;
}

Index letter_src(const TruncSimplicialSet& x, const Letter& l) {
  return x.face(1, l.inverse ? 1 : 0, l.generator);
}
Index letter_tgt(const TruncSimplicialSet& x, const Letter& l) {
  return x.face(1, l.inverse ? 0 : 1, l.generator);
}

// Assigns dense class ids ordered by lowest root.
std::vector<Index> dense_classes(UnionFind& uf, std::size_t n, Index& count) {
  std::vector<Index> cls(n);
  std::map<Index, Index> id;
  for (std::size_t e = 0; e < n; ++e) {
    const Index root = uf.find(static_cast<Index>(e));
    auto it = id.find(root);
    if (it == id.end()) it = id.emplace(root, static_cast<Index>(id.size())).first;
    cls[e] = it->second;
  }
  count = static_cast<Index>(id.size());
  return cls;
}

}  // namespace

std::optional<Index> QuotientGroupoid::word_class(const Word& w) const {
  if (w.empty()) return std::nullopt;
  if (groupoid) {
    const auto& g = *groupoid;
    std::optional<Index> acc;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      if (it->generator < 0 || static_cast<std::size_t>(it->generator) >= generator_class.size())
        return std::nullopt;
      Index c = generator_class[static_cast<std::size_t>(it->generator)];
      if (it->inverse) c = g.inv(c);
      if (!acc) {
        acc = c;
      } else {
        acc = g.try_compose(c, *acc);
        if (!acc) return std::nullopt;
      }
    }
    return acc;
  }
  auto it = word_table.find(encode_word(w));
  if (it == word_table.end()) return std::nullopt;
  return it->second;
}

QuotientGroupoid truncate_full(const TruncSimplicialSet& x) {
  if (x.top() < 2) throw TruncationError("truncation needs levels 0..2");
  const auto x2 = x.truncated(2);
  const auto report = classify(x2, 1);
  for (int k = 0; k <= 2; ++k) {
    const auto& e = report.entry(2, k);
    if (!e.filler_exists_always) {
      std::string faces;
      for (Index f : e.unfilled->faces) faces += " " + std::to_string(f);
      throw HornUnfillable("(2," + std::to_string(k) + ")-horn with faces" + faces + " has no filler");
    }
  }

  const auto n1 = static_cast<std::size_t>(x.size(1));
  const Index n2 = x.size(2);
  UnionFind uf(n1);
  for (int k = 0; k <= 2; ++k) {
    std::unordered_map<Tuple, Index, TupleHash> first;
    for (Index z = 0; z < n2; ++z) {
      const auto h = horn_of(x, 2, k, z);
      auto [it, fresh] = first.emplace(h.faces, z);
      if (!fresh) uf.unite(x.face(2, k, it->second), x.face(2, k, z));
    }
  }
  // Close under composition: composites of equivalent pairs are equivalent.
  for (bool changed = true; changed;) {
    changed = false;
    std::unordered_map<Tuple, Index, TupleHash> comp;
    for (Index z = 0; z < n2; ++z) {
      const Tuple key{uf.find(x.face(2, 2, z)), uf.find(x.face(2, 0, z))};
      auto [it, fresh] = comp.emplace(key, x.face(2, 1, z));
      if (!fresh && uf.unite(it->second, x.face(2, 1, z))) changed = true;
    }
  }

  QuotientGroupoid q;
  q.object_count = x.size(0);
  Index classes = 0;
  q.generator_class = dense_classes(uf, n1, classes);
  const auto csz = static_cast<std::size_t>(classes);
  std::vector<Index> rep(csz, -1);
  for (std::size_t y = 0; y < n1; ++y)
    if (rep[static_cast<std::size_t>(q.generator_class[y])] < 0)
      rep[static_cast<std::size_t>(q.generator_class[y])] = static_cast<Index>(y);

  std::vector<Index> src(csz), tgt(csz), inv(csz, -1), unit(static_cast<std::size_t>(q.object_count));
  for (std::size_t c = 0; c < csz; ++c) {
    src[c] = x.face(1, 0, rep[c]);
    tgt[c] = x.face(1, 1, rep[c]);
    q.representatives.push_back(Word{Letter{rep[c], false}});
  }
  for (std::size_t y = 0; y < n1; ++y) {
    const auto c = static_cast<std::size_t>(q.generator_class[y]);
    if (x.face(1, 0, static_cast<Index>(y)) != src[c] || x.face(1, 1, static_cast<Index>(y)) != tgt[c])
      throw StructuralError("equivalent generators have different endpoints");
  }
  for (Index m = 0; m < q.object_count; ++m)
    unit[static_cast<std::size_t>(m)] = q.generator_class[static_cast<std::size_t>(x.degeneracy(0, 0, m))];

  std::vector<std::optional<Index>> comp(csz * csz);
  for (Index z = 0; z < n2; ++z) {
    const auto a = static_cast<std::size_t>(q.generator_class[static_cast<std::size_t>(x.face(2, 2, z))]);
    const auto b = static_cast<std::size_t>(q.generator_class[static_cast<std::size_t>(x.face(2, 0, z))]);
    comp[a * csz + b] = q.generator_class[static_cast<std::size_t>(x.face(2, 1, z))];
  }
  for (std::size_t a = 0; a < csz; ++a)
    for (std::size_t b = 0; b < csz; ++b)
      if (comp[a * csz + b] == unit[static_cast<std::size_t>(tgt[a])] && src[a] == tgt[b] &&
          src[b] == tgt[a]) {
        inv[a] = static_cast<Index>(b);
        break;
      }
  for (std::size_t a = 0; a < csz; ++a)
    if (inv[a] < 0) throw StructuralError("class " + std::to_string(a) + " has no inverse");
  q.groupoid = FiniteGroupoid(q.object_count, std::move(src), std::move(tgt), std::move(unit),
                              std::move(inv), std::move(comp));
  q.completeness = Completeness::exact;
  return q;
}

QuotientGroupoid truncate_words(const TruncSimplicialSet& x, int max_word_len, std::uint64_t budget) {
  if (max_word_len < 2) throw InputError("maximum word length must be at least 2");
  if (x.top() < 2) throw TruncationError("truncation needs levels 0..2");
  const Index n1 = x.size(1);
  const Index objects = x.size(0);

  // Letters grouped by target, for extending words on the right.
  std::vector<std::vector<Index>> letters_into(static_cast<std::size_t>(objects));
  for (Index y = 0; y < n1; ++y)
    for (bool inv : {false, true}) {
      const Letter l{y, inv};
      letters_into[static_cast<std::size_t>(letter_tgt(x, l))].push_back(encode_letter(l));
    }
  for (auto& v : letters_into) std::sort(v.begin(), v.end());

  std::vector<Tuple> words;
  std::unordered_map<Tuple, Index, TupleHash> index;
  auto add = [&](Tuple t) {
    if (words.size() >= budget) throw BudgetExceeded("word enumeration exceeds budget of " + std::to_string(budget));
    index.emplace(t, static_cast<Index>(words.size()));
    words.push_back(std::move(t));
  };
  for (Index e = 0; e < 2 * n1; ++e) add(Tuple{e});
  std::size_t level_begin = 0;
  for (int len = 2; len <= max_word_len; ++len) {
    const std::size_t level_end = words.size();
    for (std::size_t w = level_begin; w < level_end; ++w) {
      const Index end_src = letter_src(x, decode_letter(words[w].back()));
      for (Index e : letters_into[static_cast<std::size_t>(end_src)]) {
        Tuple t = words[w];
        t.push_back(e);
        add(std::move(t));
      }
    }
    level_begin = level_end;
  }

  // Contractions of adjacent letter pairs.
  std::unordered_map<Tuple, std::vector<Index>, TupleHash> pair_to;
  auto relate = [&](Letter a, Letter b, Letter c) {
    pair_to[Tuple{encode_letter(a), encode_letter(b)}].push_back(encode_letter(c));
  };
  for (Index z = 0; z < x.size(2); ++z) {
    const Index y0 = x.face(2, 0, z), y1 = x.face(2, 1, z), y2 = x.face(2, 2, z);
    relate({y2, false}, {y0, false}, {y1, false});
    relate({y0, true}, {y2, true}, {y1, true});
  }
  for (Index y = 0; y < n1; ++y) {
    relate({y, false}, {y, true}, {x.degeneracy(0, 0, x.face(1, 1, y)), false});
    relate({y, true}, {y, false}, {x.degeneracy(0, 0, x.face(1, 0, y)), false});
  }
  std::vector<bool> is_unit(static_cast<std::size_t>(n1), false);
  for (Index m = 0; m < objects; ++m) is_unit[static_cast<std::size_t>(x.degeneracy(0, 0, m))] = true;

  UnionFind uf(words.size());
  for (std::size_t w = 0; w < words.size(); ++w) {
    const Tuple& t = words[w];
    for (std::size_t i = 0; i < t.size(); ++i) {
      const Letter l = decode_letter(t[i]);
      if (l.inverse && is_unit[static_cast<std::size_t>(l.generator)]) {
        Tuple u = t;
        u[i] = encode_letter({l.generator, false});
        uf.unite(static_cast<Index>(w), index.at(u));
      }
    }
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
      auto it = pair_to.find(Tuple{t[i], t[i + 1]});
      if (it == pair_to.end()) continue;
      for (Index c : it->second) {
        Tuple u(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(i));
        u.push_back(c);
        u.insert(u.end(), t.begin() + static_cast<std::ptrdiff_t>(i + 2), t.end());
        uf.unite(static_cast<Index>(w), index.at(u));
      }
    }
  }

  QuotientGroupoid q;
  q.object_count = objects;
  q.max_word_len = max_word_len;
  q.word_count = words.size();
  Index classes = 0;
  const auto cls = dense_classes(uf, words.size(), classes);
  const auto csz = static_cast<std::size_t>(classes);
  // Words are enumerated by length then lexicographically, so the first
  // member seen is the representative.
  std::vector<Index> rep(csz, -1);
  std::vector<Index> generator_of(csz, -1);
  for (std::size_t w = 0; w < words.size(); ++w) {
    const auto c = static_cast<std::size_t>(cls[w]);
    if (rep[c] < 0) rep[c] = static_cast<Index>(w);
    if (words[w].size() == 1 && !decode_letter(words[w][0]).inverse && generator_of[c] < 0)
      generator_of[c] = decode_letter(words[w][0]).generator;
  }
  // Words of length <= 2 decide closure under inverses and products; longer
  // words only feed the saturation.
  for (std::size_t w = 0; w < words.size() && words[w].size() <= 2 && !q.obstruction; ++w)
    if (generator_of[static_cast<std::size_t>(cls[w])] < 0) q.obstruction = decode_word(words[w]);

  if (q.obstruction) {
    q.completeness = Completeness::saturation_bounded;
    for (std::size_t c = 0; c < csz; ++c) q.representatives.push_back(decode_word(words[static_cast<std::size_t>(rep[c])]));
    for (Index y = 0; y < n1; ++y) q.generator_class.push_back(cls[static_cast<std::size_t>(index.at(Tuple{2 * y}))]);
    for (std::size_t w = 0; w < words.size(); ++w) q.word_table.emplace(words[w], cls[w]);
    return q;
  }

  // Exact: classes are represented by positive generators. Renumber them by
  // lowest generator.
  std::vector<Index> order;
  for (std::size_t c = 0; c < csz; ++c)
    if (generator_of[c] >= 0) order.push_back(static_cast<Index>(c));
  std::sort(order.begin(), order.end(), [&](Index a, Index b) {
    return generator_of[static_cast<std::size_t>(a)] < generator_of[static_cast<std::size_t>(b)];
  });
  const std::size_t gsz = order.size();
  std::vector<Index> renum(csz, -1);
  for (std::size_t i = 0; i < gsz; ++i) renum[static_cast<std::size_t>(order[i])] = static_cast<Index>(i);
  auto class_of = [&](const Tuple& t) { return renum[static_cast<std::size_t>(cls[static_cast<std::size_t>(index.at(t))])]; };

  std::vector<Index> src(gsz), tgt(gsz), inv(gsz), unit(static_cast<std::size_t>(objects));
  std::vector<std::optional<Index>> comp(gsz * gsz);
  for (std::size_t i = 0; i < gsz; ++i) {
    const Index y = generator_of[static_cast<std::size_t>(order[i])];
    src[i] = x.face(1, 0, y);
    tgt[i] = x.face(1, 1, y);
    inv[i] = class_of(Tuple{2 * y + 1});
    q.representatives.push_back(Word{Letter{y, false}});
  }
  for (std::size_t a = 0; a < gsz; ++a)
    for (std::size_t b = 0; b < gsz; ++b)
      if (src[a] == tgt[b])
        comp[a * gsz + b] = class_of(Tuple{2 * q.representatives[a][0].generator,
                                           2 * q.representatives[b][0].generator});
  for (Index m = 0; m < objects; ++m) unit[static_cast<std::size_t>(m)] = class_of(Tuple{2 * x.degeneracy(0, 0, m)});
  for (Index y = 0; y < n1; ++y) q.generator_class.push_back(class_of(Tuple{2 * y}));
  q.groupoid = FiniteGroupoid(objects, std::move(src), std::move(tgt), std::move(unit), std::move(inv),
                              std::move(comp));
  q.completeness = Completeness::exact;
  return q;
}

QuotientGroupoid groupoidize_double(const DoubleGroupoid& d, int max_word_len) {
  const WbarModel w(d, 2);
  if (is_full(d).full) return truncate_full(w.simplicial());
  return truncate_words(w.simplicial(), max_word_len);
}

}  // namespace hgpd
