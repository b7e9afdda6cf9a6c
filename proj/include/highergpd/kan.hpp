#ifndef HIGHERGPD_KAN_HPP
#define HIGHERGPD_KAN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "highergpd/errors.hpp"
#include "highergpd/nerve_bar.hpp"
#include "highergpd/simplicial.hpp"

namespace hgpd {

inline constexpr std::uint64_t kDefaultHornBudget = 10'000'000;

/// A (q,k)-horn: the faces x_i, i != k, listed in increasing i.
struct Horn {
  int q = 0;
  int k = 0;
  std::vector<Index> faces;

  /// Face with index i (i != k).
  Index at(int i) const { return faces[static_cast<std::size_t>(i < k ? i : i - 1)]; }
  bool operator==(const Horn&) const = default;
};

/// f_i x_j == f_{j-1} x_i for all present i < j.
bool horn_compatible(const TruncSimplicialSet& x, const Horn& h);

/// The horn map: all faces of x except the k-th.
Horn horn_of(const TruncSimplicialSet& x, int q, int k, Index simplex);

/// Every compatible (q,k)-horn, in lexicographic order of the face tuple.
/// Throws BudgetExceeded once more than `budget` candidates are examined.
std::vector<Horn> horns(const TruncSimplicialSet& x, int q, int k, Exec exec = Exec::parallel,
                        std::uint64_t budget = kDefaultHornBudget);

/// All q-simplices whose horn is h, ascending.
std::vector<Index> fillers(const TruncSimplicialSet& x, const Horn& h);

struct KanEntry {
  int q = 0;
  int k = 0;
  std::uint64_t horn_count = 0;
  std::uint64_t filled_count = 0;  // horns with at least one filler
  std::uint64_t max_fillers = 0;
  bool filler_exists_always = true;
  bool filler_unique_always = true;  // at most one filler
  std::optional<Horn> unfilled;      // a horn without filler
  std::optional<std::pair<Index, Index>> repeated;  // two simplices with equal horns
};

struct KanReport {
  int n = 0;
  int top = 0;  // levels examined: 1..top
  std::vector<KanEntry> entries;
  /// Every horn has a filler, and for q > n exactly one.
  bool is_discrete_n_groupoid = false;
  /// For q > n at most one filler; existence not required.
  bool is_discrete_local_n_groupoid = false;
  /// As above, and additionally every horn with q <= n has a filler.
  bool is_discrete_local_n_groupoid_with_low_fillers = false;
  /// Verdicts only cover levels up to `top`.
  bool truncation_bounded = true;

  const KanEntry& entry(int q, int k) const;
};

KanReport classify(const TruncSimplicialSet& x, int n, Exec exec = Exec::parallel,
                   std::uint64_t budget = kDefaultHornBudget);

/// The horn has no filler. For r = 2 the missing double-source fiber element
/// is attached, expressed as (theta, eta) in V x_{s,s} H.
class NoFiller : public Error {
 public:
  NoFiller(const std::string& what, std::optional<SidePair> missing)
      : Error(what), missing_(missing) {}
  const std::optional<SidePair>& missing() const { return missing_; }

 private:
  std::optional<SidePair> missing_;
};

/// Horn level below 2.
class NotApplicable : public Error {
 public:
  using Error::Error;
};

enum class FillMethod { forward_formula, mirrored_formula, double_source, brute_force };

const char* to_string(FillMethod m);

struct WbarFill {
  Index simplex = 0;
  FillMethod method = FillMethod::brute_force;
};

/// Filler of a horn in the bar construction of a double nerve, computed from
/// the square formulas where they apply:
///   k > 2:       faces 0, 1, 2 determine the simplex;
///   k < r - 2:   faces r-2, r-1, r determine it;
///   (3,1), (3,2), (4,2): search;
///   r = 2:       one double-source preimage.
/// Throws NoFiller or NotApplicable.
WbarFill fill_wbar_horn(const WbarModel& w, const Horn& h);

}  // namespace hgpd

#endif
