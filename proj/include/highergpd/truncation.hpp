#ifndef HIGHERGPD_TRUNCATION_HPP
#define HIGHERGPD_TRUNCATION_HPP

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "highergpd/double_groupoid.hpp"
#include "highergpd/nerve_bar.hpp"
#include "highergpd/simplicial.hpp"

namespace hgpd {

/// A generator y in X_1 or its formal inverse. y runs from f_0 y to f_1 y.
struct Letter {
  Index generator = 0;
  bool inverse = false;
  bool operator==(const Letter&) const = default;
};

/// Composable product l_1 . l_2 ... l_m, applied right to left:
/// src(l_i) == tgt(l_{i+1}).
using Word = std::vector<Letter>;

enum class Completeness { exact, saturation_bounded };

const char* to_string(Completeness c);

/// Groupoid presented by X_1 modulo the relations f_1 z ~ f_2 z . f_0 z.
///
/// Class ids are arrow indices of `groupoid` whenever it is present. For a
/// saturation-bounded result the classes are those of words up to
/// `max_word_len` and `groupoid` is empty.
struct QuotientGroupoid {
  std::optional<FiniteGroupoid> groupoid;
  Index object_count = 0;
  std::vector<Index> generator_class;  // X_1 -> class
  std::vector<Word> representatives;   // shortest, then smallest, word per class
  Completeness completeness = Completeness::exact;
  std::optional<Word> obstruction;     // a word with no single-generator equivalent
  int max_word_len = 0;                // 0 when words were not enumerated
  std::size_t word_count = 0;
  std::unordered_map<Tuple, Index, TupleHash> word_table;

  Index class_count() const { return static_cast<Index>(representatives.size()); }
  /// Class of a composable word, when it can be determined.
  std::optional<Index> word_class(const Word& w) const;
};

/// Quotient of X_1 by f_k z ~ f_k z' whenever z and z' have the same
/// (2,k)-horn, closed under composition. Requires every 2-horn to be
/// fillable; throws HornUnfillable with the first unfilled horn otherwise.
QuotientGroupoid truncate_full(const TruncSimplicialSet& x);

/// Bounded saturation over composable words in the letters y, y^-1 of length
/// at most max_word_len, using the relations from X_2, their inverted forms,
/// y y^-1 ~ 1, y^-1 y ~ 1 and 1^-1 ~ 1. Exact when every inverse letter and
/// every product of two letters is equivalent to a single generator.
QuotientGroupoid truncate_words(const TruncSimplicialSet& x, int max_word_len,
                                std::uint64_t budget = 10'000'000);

/// Truncation of the bar construction on the double nerve: truncate_full
/// when D is full, truncate_words otherwise.
QuotientGroupoid groupoidize_double(const DoubleGroupoid& d, int max_word_len = 4);

}  // namespace hgpd

#endif
