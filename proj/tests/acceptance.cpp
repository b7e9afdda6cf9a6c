// Acceptance run: one line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "highergpd/errors.hpp"
#include "highergpd/homology.hpp"
#include "highergpd/kan.hpp"
#include "highergpd/linsymp.hpp"
#include "highergpd/nerve_bar.hpp"
#include "highergpd/truncation.hpp"

using namespace hgpd;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failures; keeps the first few messages.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  Outcome outcome(const std::string& summary) const {
    if (failures_ == 0) return {true, summary + " (" + std::to_string(checks_) + " checks)"};
    return {false, std::to_string(failures_) + "/" + std::to_string(checks_) + " checks failed: " + notes_};
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string notes_;
};

Outcome bisimplicial_validity() {
  Tally t;
  std::size_t elements = 0;
  for (const auto& d : {pair2_fixture(), unit_fixture(1), unit_fixture(3), z2grp_fixture()}) {
    const TruncBisimplicialSet x = double_nerve(d, 4);
    const ValidationReport rep = validate_bisimplicial(x, Exec::parallel);
    t.check(rep.ok(), d.name + ": " + std::to_string(rep.total()) + " violations");
    for (const auto& [pq, level] : x.levels()) elements += static_cast<std::size_t>(level.size);
  }
  return t.outcome("PAIR2, UNIT(1), UNIT(3), Z2GRP up to p+q = 4, " + std::to_string(elements) +
                   " elements, zero violations");
}

Outcome kan_theorem() {
  Tally t;
  for (const auto& d : {pair2_fixture(), z2grp_fixture(), unit_fixture(2)}) {
    const KanReport r = classify(WbarModel(d, 4).simplicial(), 2);
    for (const auto& e : r.entries) {
      const std::string at = d.name + " (" + std::to_string(e.q) + "," + std::to_string(e.k) + ")";
      if (e.q == 2) t.check(e.filler_exists_always, at + " has an unfillable horn");
      if (e.q >= 3) t.check(e.filler_exists_always && e.max_fillers == 1, at + " lacks a unique filler");
    }
    t.check(r.is_discrete_n_groupoid, d.name + " is not a discrete 2-groupoid");
  }
  const KanReport nf = classify(WbarModel(pair2_nonfull_fixture(), 4).simplicial(), 2);
  bool some_unfillable = false;
  for (const auto& e : nf.entries) {
    if (e.q == 2) some_unfillable = some_unfillable || !e.filler_exists_always;
    if (e.q >= 3) t.check(e.filler_unique_always, "non-full fixture has two fillers at level " + std::to_string(e.q));
  }
  t.check(some_unfillable, "non-full fixture fills every 2-horn");
  return t.outcome("full fixtures: every 2-horn fillable, unique fillers at levels 3, 4; non-full: unique above 2, "
                   "unfillable 2-horn found");
}

Outcome explicit_fillers() {
  Tally t;
  std::size_t total = 0, by_formula = 0;
  for (const auto& d : {pair2_fixture(), z2grp_fixture()}) {
    const WbarModel w(d, 4);
    const auto& x = w.simplicial();
    for (int r = 3; r <= 4; ++r)
      for (int k = 0; k <= r; ++k) {
        const std::vector<Horn> hs = horns(x, r, k);
        // 0 agrees via formula, 1 agrees via search, 2 no unique filler,
        // 3 filler differs, 4 exception
        std::vector<int> status(hs.size());
#pragma omp parallel for schedule(dynamic, 64) num_threads(thread_count())
        for (long long i = 0; i < static_cast<long long>(hs.size()); ++i) {
          const Horn& h = hs[static_cast<std::size_t>(i)];
          const auto all = fillers(x, h);
          int& st = status[static_cast<std::size_t>(i)];
          if (all.size() != 1) {
            st = 2;
            continue;
          }
          try {
            const WbarFill f = fill_wbar_horn(w, h);
            st = f.simplex != all.front() ? 3 : f.method == FillMethod::brute_force ? 1 : 0;
          } catch (const Error&) {
            st = 4;
          }
        }
        const std::string at = d.name + " (" + std::to_string(r) + "," + std::to_string(k) + ")";
        for (int st : status) {
          ++total;
          if (st == 0) ++by_formula;
          t.check(st != 2, at + " lacks a unique brute-force filler");
          t.check(st != 3, at + " filler differs");
          t.check(st != 4, at + " explicit filler threw");
        }
      }
  }
  return t.outcome(std::to_string(total) + " horns on PAIR2 and Z2GRP, " + std::to_string(by_formula) +
                   " by the square formulas, the rest ((3,1), (3,2), (4,2)) by search");
}

void check_inverse_relation(Tally& t, const DoubleGroupoid& d, const QuotientGroupoid& q) {
  const WbarModel w(d, 1);
  const auto& V = d.side_v;
  const auto& H = d.side_h;
  for (Index y = 0; y < w.simplicial().size(1); ++y) {
    const WbarSimplex s = w.decode(1, y);
    const auto l = w.encode({1, 0, V.unit(H.src(s.eta)), H.inv(s.eta), {}});
    const auto r = w.encode({1, 0, V.inv(s.theta), H.unit(V.tgt(s.theta)), {}});
    if (!l || !r) {
      t.check(false, d.name + ": side generator missing");
      continue;
    }
    const auto lhs = q.word_class({{y, true}});
    t.check(lhs.has_value() && lhs == q.word_class({{*l, false}, {*r, false}}),
            d.name + ": inverse relation fails at generator " + std::to_string(y));
  }
}

Outcome truncation() {
  Tally t;
  for (const auto& d : {pair2_fixture(), z2grp_fixture(), unit_fixture(3)}) {
    const TruncSimplicialSet x = WbarModel(d, 2).simplicial();
    const QuotientGroupoid full = truncate_full(x);
    const QuotientGroupoid words = truncate_words(x, 4);
    t.check(full.groupoid.has_value() && validate_groupoid(*full.groupoid).ok(), d.name + ": invalid quotient");
    t.check(words.completeness == Completeness::exact, d.name + ": word saturation not exact");
    if (full.groupoid && words.groupoid) {
      t.check(*full.groupoid == *words.groupoid && full.generator_class == words.generator_class,
              d.name + ": truncate_full and truncate_words disagree");
    }
    check_inverse_relation(t, d, full);
    check_inverse_relation(t, d, words);
  }
  const auto pair = truncate_full(WbarModel(pair2_fixture(), 2).simplicial());
  t.check(pair.groupoid && find_isomorphism(*pair.groupoid, pair_groupoid(2)).has_value(),
          "G(PAIR2) is not the pair groupoid on 2 objects");
  const auto z2 = truncate_full(WbarModel(z2grp_fixture(), 2).simplicial());
  t.check(z2.groupoid && find_isomorphism(*z2.groupoid, cyclic_group(2)).has_value(), "G(Z2GRP) is not Z/2");
  return t.outcome("G(PAIR2) = pair groupoid on 2 objects, G(Z2GRP) = Z/2, inverse relation on every generator, "
                   "full and word truncations equal");
}

Outcome homology_agreement() {
  Tally t;
  std::string found;
  struct Case {
    DoubleGroupoid d;
    int degree;
  };
  const std::vector<Case> cases{{pair2_fixture(), 2}, {pair2_nonfull_fixture(), 2}, {z2grp_fixture(), 3},
                                {unit_fixture(2), 3}};
  for (const auto& c : cases) {
    const auto x = double_nerve_with_elements(c.d, BidegreeRange::box(c.degree + 1)).bisimplicial;
    const ComparisonReport r = compare(x, c.degree);
    t.check(r.all_agree, c.d.name + ": diagonal, bar and total disagree");
    if (c.d.name == z2grp_fixture().name) {
      const auto& h = r.bar.degrees;
      t.check(h[1] == DegreeHomology{0, {Integer(2)}}, "H1(Z2GRP) is " + h[1].to_string());
      t.check(h[2] == DegreeHomology{0, {}}, "H2(Z2GRP) is " + h[2].to_string());
      t.check(h[3] == DegreeHomology{0, {Integer(2)}}, "H3(Z2GRP) is " + h[3].to_string());
      found = "H1 = H3 = Z/2 for Z2GRP";
    }
  }
  return t.outcome("PAIR2 and PAIR2-nonfull to degree 2, Z2GRP and UNIT(2) to degree 3; " + found);
}

std::vector<QMatrix> rank_deficient(int n) {
  std::vector<QMatrix> out;
  const int cells = n * n;
  long limit = 1;
  for (int i = 0; i < cells; ++i) limit *= 3;
  for (long code = 0; code < limit; ++code) {
    long c = code;
    QMatrix m(n, n);
    for (int i = 0; i < cells; ++i) {
      m(i / n, i % n) = static_cast<int>(c % 3) - 1;
      c /= 3;
    }
    if (rank(m) < n) out.push_back(m);
  }
  return out;
}

Outcome symplectic_verifier() {
  Tally t;
  int trials = 0;
  auto run = [&](const LinearDoubleGroupoid& l, bool expect_nondegenerate) {
    ++trials;
    const LinearBar bar = linear_bar_levels(l);
    const MultiplicativityCheck m = check_multiplicative(bar, pullback_form(l, bar));
    t.check(m.multiplicative && m.residual.is_zero(), l.name + ": nonzero multiplicativity residual");
    const TheoremCheck c = verify_theorem(l);
    t.check(c.omega_nondegenerate == expect_nondegenerate, l.name + ": unexpected rank of omega");
    t.check(c.conditions == expect_nondegenerate, l.name + ": conditions do not match the rank");
    t.check(c.holds, l.name + ": equivalence fails");
  };
  for (std::uint64_t seed = 0; seed < 100; ++seed) run(vv_fixture(1, random_pairing(1, seed)), true);
  for (std::uint64_t seed = 0; seed < 20; ++seed) run(vv_fixture(2, random_pairing(2, 1000 + seed)), true);
  for (std::uint64_t seed = 0; seed < 5; ++seed) run(vv_fixture(3, random_pairing(3, 2000 + seed)), true);
  run(vv_fixture(1, QMatrix(1, 1)), false);
  for (const QMatrix& b : rank_deficient(2)) run(vv_fixture(2, b), false);
  run(linear_pair_fixture(cotangent_groupoid(1), vv_fixture(1).omega), true);
  run(linear_pair_fixture(cotangent_groupoid(1), QMatrix(2, 2)), false);
  const TheoremCheck unit = verify_theorem(linear_unit_fixture());
  t.check(unit.holds && unit.conditions, "zero spaces");
  return t.outcome(std::to_string(trials) + " forms: 100 random on VV1, 25 on VV2/VV3, " +
                   std::to_string(rank_deficient(2).size() + 1) + " degenerate, pair fixture; residual zero");
}

Outcome pairing() {
  Tally t;
  int trials = 0;
  auto check_vv = [&](int n, const QMatrix& b) {
    ++trials;
    const LinearDoubleGroupoid l = vv_fixture(n, b);
    const LinearBar bar = linear_bar_levels(l);
    const TwoForm omega = pullback_form(l, bar);
    // W1 = V (+) H; x in V, y in H = V*.
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        QVector a(static_cast<std::size_t>(2 * n)), c(static_cast<std::size_t>(2 * n));
        a[static_cast<std::size_t>(i)] = 1;
        c[static_cast<std::size_t>(n + j)] = 1;
        t.check(induced_pairing(bar, omega, a, c) == b(j, i), l.name + ": pairing differs from evaluation");
      }
    const PairingReport p = pairing_matrix(bar, omega);
    t.check(p.nondegenerate && rank(p.matrix) == n, l.name + ": pairing degenerate");
  };
  for (std::uint64_t seed = 0; seed < 100; ++seed) check_vv(1, random_pairing(1, seed));
  for (std::uint64_t seed = 0; seed < 20; ++seed) check_vv(2, random_pairing(2, 1000 + seed));
  check_vv(1, QMatrix::identity(1));
  return t.outcome(std::to_string(trials) + " nondegenerate trials: <x, y> = y^T B x, the evaluation scaled by "
                   "the matrix B of omega; full rank");
}

std::string run_command(const std::string& cmd) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return "<popen failed>";
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int status = pclose(p);
  return out + "\n<status " + std::to_string(status) + ">";
}

Outcome determinism() {
  Tally t;
  const std::string cli = HIGHERGPD_CLI_PATH;
  const std::string fx = HIGHERGPD_FIXTURE_DIR;
  const std::vector<std::string> commands{
      "validate " + fx + "/pair2.json",
      "--json validate " + fx + "/pair2_nonfull.json",
      "bar -N 3 " + fx + "/z2grp.json",
      "kan " + fx + "/pair2.json",
      "--json kan " + fx + "/pair2_nonfull.json",
      "groupoidize " + fx + "/pair2.json",
      "groupoidize --max-word-len 4 " + fx + "/pair2_nonfull.json",
      "homology --compare " + fx + "/z2grp.json",
      "--json homology " + fx + "/z2_nerve.json",
      "symplectic " + fx + "/vv1.json",
      "--json symplectic " + fx + "/vv1_zero.json",
      "symplectic --trials 100 --seed 11 " + fx + "/vv1.json",
      "--json symplectic --trials 20 --seed 3 " + fx + "/pair_linear.json",
      "fixture pair2"};
  for (const auto& c : commands) {
    const std::string a = run_command("HIGHERGPD_THREADS=1 " + cli + " " + c + " 2>&1");
    const std::string b = run_command(cli + " " + c + " 2>&1");
    t.check(a == b, "'" + c + "' output differs between runs");
    t.check(a.size() > 20, "'" + c + "' produced no output");
  }
  return t.outcome(std::to_string(commands.size()) + " commands run twice (1 thread and default threads), "
                   "byte-identical");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"bisimplicial validity", bisimplicial_validity},
      {"Kan conditions on the bar construction", kan_theorem},
      {"explicit horn fillers", explicit_fillers},
      {"truncation", truncation},
      {"homology of diagonal, bar and total complex", homology_agreement},
      {"symplectic verifier", symplectic_verifier},
      {"induced pairing", pairing},
      {"determinism", determinism}};
  bool all = true;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.pass;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (o.pass ? "PASS" : "FAIL") << "  " << index << ". " << name << ": " << o.detail << " [" << secs << " s]";
    std::cout << line.str() << std::endl;
  }
  return all ? 0 : 1;
}
