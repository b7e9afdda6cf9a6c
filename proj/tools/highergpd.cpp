// highergpd: command-line front end over the fixture format.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 input error,
// 3 budget exceeded.

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "highergpd/errors.hpp"
#include "highergpd/fixtures_io.hpp"
#include "highergpd/homology.hpp"
#include "highergpd/kan.hpp"
#include "highergpd/linsymp.hpp"
#include "highergpd/nerve_bar.hpp"
#include "highergpd/truncation.hpp"

using namespace hgpd;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInput = 2;
constexpr int kBudget = 3;

struct Options {
  bool json = false;
  std::string path;
  int levels = 4;
  int n = 2;
  std::uint64_t budget = kDefaultHornBudget;
  int max_word_len = 6;
  int degree = -1;
  bool compare = false;
  int trials = 0;
  std::uint64_t seed = 1;
  std::string fixture;
};

template <typename T>
const T& expect(const Fixture& f, const std::string& accepted) {
  if (const T* t = std::get_if<T>(&f)) return *t;
  throw InputError(std::string("this command takes ") + accepted + ", found " + fixture_kind(f));
}

void require_valid(const ValidationReport& rep, const std::string& what) {
  if (!rep.ok()) throw InputError("input is not a valid " + what + ":\n" + rep.to_string());
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

// validate

int cmd_validate(const Options& o, std::ostream& out) {
  const Fixture f = load_fixture(o.path);
  ValidationReport rep;
  Json extra = Json::object();
  std::string text;
  if (const auto* g = std::get_if<FiniteGroupoid>(&f)) {
    rep = validate_groupoid(*g);
  } else if (const auto* d = std::get_if<DoubleGroupoid>(&f)) {
    rep = validate_double_groupoid(*d);
    if (rep.ok()) {
      const FullnessResult full = is_full(*d);
      extra["full"] = full.full;
      text += std::string("full: ") + yes_no(full.full) + "\n";
      if (full.unhit) {
        extra["unhit"] = {full.unhit->theta, full.unhit->eta};
        text += "  no square has double source (theta, eta) = (" + std::to_string(full.unhit->theta) + ", " +
                std::to_string(full.unhit->eta) + ")\n";
      }
    }
  } else if (const auto* x = std::get_if<TruncSimplicialSet>(&f)) {
    rep = validate_simplicial(*x);
  } else if (const auto* b = std::get_if<TruncBisimplicialSet>(&f)) {
    rep = validate_bisimplicial(*b);
  } else {
    rep = validate_linear_double_groupoid(std::get<LinearDoubleGroupoid>(f));
  }
  if (o.json) {
    Json violations = Json::array();
    for (const auto& v : rep.violations())
      violations.push_back({{"rule", v.rule}, {"witness", v.witness}, {"detail", v.detail}});
    Json j{{"kind", "validation"}, {"input", fixture_kind(f)}, {"valid", rep.ok()},
           {"violation_count", rep.total()}, {"violations", std::move(violations)}};
    j.update(extra);
    out << j.dump(2) << "\n";
  } else {
    out << "kind: " << fixture_kind(f) << "\n";
    out << "valid: " << yes_no(rep.ok()) << "\n";
    if (!rep.ok()) out << rep.to_string();
    out << text;
  }
  return rep.ok() ? kPass : kFail;
}

// bar

TruncSimplicialSet bar_of(const Fixture& f, int levels) {
  if (const auto* d = std::get_if<DoubleGroupoid>(&f)) {
    require_valid(validate_double_groupoid(*d), "double groupoid");
    return bar(double_nerve(*d, levels), levels);
  }
  const auto& x = expect<TruncBisimplicialSet>(f, "a double-groupoid or bisimplicial fixture");
  return bar(x, levels);
}

int cmd_bar(const Options& o, std::ostream& out) {
  const Fixture f = load_fixture(o.path);
  out << to_json(bar_of(f, o.levels)).dump(2) << "\n";
  return kPass;
}

// kan

std::string horn_string(const Horn& h) {
  std::string s = "(" + std::to_string(h.q) + "," + std::to_string(h.k) + ") faces [";
  for (int i = 0; i <= h.q; ++i) {
    if (i) s += " ";
    s += i == h.k ? "_" : std::to_string(h.at(i));
  }
  return s + "]";
}

int cmd_kan(const Options& o, std::ostream& out) {
  const Fixture f = load_fixture(o.path);
  TruncSimplicialSet x;
  if (const auto* s = std::get_if<TruncSimplicialSet>(&f)) {
    require_valid(validate_simplicial(*s), "simplicial set");
    x = s->top() > o.levels ? s->truncated(o.levels) : *s;
  } else {
    x = bar_of(f, o.levels);
  }
  const KanReport r = classify(x, o.n, Exec::parallel, o.budget);
  if (o.json) {
    out << to_json(r).dump(2) << "\n";
  } else {
    out << "Kan conditions, n = " << r.n << ", levels 1.." << r.top << "\n";
    out << std::setw(3) << "q" << std::setw(3) << "k" << std::setw(10) << "horns" << std::setw(10) << "filled"
        << std::setw(8) << "max" << std::setw(8) << "exists" << std::setw(8) << "unique" << "\n";
    for (const auto& e : r.entries)
      out << std::setw(3) << e.q << std::setw(3) << e.k << std::setw(10) << e.horn_count << std::setw(10)
          << e.filled_count << std::setw(8) << e.max_fillers << std::setw(8) << yes_no(e.filler_exists_always)
          << std::setw(8) << yes_no(e.filler_unique_always) << "\n";
    for (const auto& e : r.entries) {
      if (e.unfilled) out << "unfilled horn " << horn_string(*e.unfilled) << "\n";
      if (e.repeated)
        out << "two fillers at (" << e.q << "," << e.k << "): simplices " << e.repeated->first << " and "
            << e.repeated->second << "\n";
    }
    out << "discrete " << r.n << "-groupoid: " << yes_no(r.is_discrete_n_groupoid) << "\n";
    out << "discrete local " << r.n << "-groupoid: " << yes_no(r.is_discrete_local_n_groupoid) << "\n";
    out << "  with fillers below level " << r.n + 1 << ": "
        << yes_no(r.is_discrete_local_n_groupoid_with_low_fillers) << "\n";
    if (r.truncation_bounded) out << "verdicts cover levels up to " << r.top << " only\n";
  }
  return r.is_discrete_n_groupoid ? kPass : kFail;
}

// groupoidize

int cmd_groupoidize(const Options& o, std::ostream& out) {
  const Fixture f = load_fixture(o.path);
  QuotientGroupoid q;
  if (const auto* d = std::get_if<DoubleGroupoid>(&f)) {
    require_valid(validate_double_groupoid(*d), "double groupoid");
    q = groupoidize_double(*d, o.max_word_len);
  } else {
    const auto& x = expect<TruncSimplicialSet>(f, "a double-groupoid or simplicial fixture");
    if (x.top() < 2) throw InputError("the simplicial set must store level 2");
    require_valid(validate_simplicial(x), "simplicial set");
    try {
      q = truncate_full(x);
    } catch (const HornUnfillable&) {
      q = truncate_words(x, o.max_word_len, o.budget);
    }
  }
  out << to_json(q).dump(2) << "\n";
  return kPass;
}

// homology

void print_homology(std::ostream& out, const std::string& title, const HomologyResult& h) {
  out << title << "\n" << h.to_string();
}

int cmd_homology(const Options& o, std::ostream& out) {
  const Fixture f = load_fixture(o.path);
  if (o.compare) {
    const int degree = o.degree < 0 ? 2 : o.degree;
    TruncBisimplicialSet x;
    if (const auto* d = std::get_if<DoubleGroupoid>(&f)) {
      require_valid(validate_double_groupoid(*d), "double groupoid");
      x = double_nerve_with_elements(*d, BidegreeRange::box(degree + 1)).bisimplicial;
    } else {
      x = expect<TruncBisimplicialSet>(f, "a double-groupoid or bisimplicial fixture");
    }
    const ComparisonReport r = compare(x, degree);
    if (o.json) {
      out << Json{{"kind", "homology-comparison"},
                  {"diagonal", to_json(r.diagonal)},
                  {"bar", to_json(r.bar)},
                  {"total", to_json(r.total)},
                  {"agree", r.agree},
                  {"all_agree", r.all_agree}}
                 .dump(2)
          << "\n";
    } else {
      out << std::left << std::setw(8) << "degree" << std::setw(16) << "diagonal" << std::setw(16) << "bar"
          << std::setw(16) << "total" << "agree\n";
      for (int q = 0; q <= degree; ++q) {
        const auto i = static_cast<std::size_t>(q);
        out << std::setw(8) << q << std::setw(16) << r.diagonal.degrees[i].to_string() << std::setw(16)
            << r.bar.degrees[i].to_string() << std::setw(16) << r.total.degrees[i].to_string()
            << yes_no(r.agree[i]) << "\n";
      }
      out << "all agree: " << yes_no(r.all_agree) << "\n";
    }
    return r.all_agree ? kPass : kFail;
  }

  ChainComplex c;
  int degree = o.degree;
  std::string source;
  if (const auto* x = std::get_if<TruncSimplicialSet>(&f)) {
    if (degree < 0) degree = x->top() - 1;
    c = chains(*x);
    source = "simplicial set";
  } else if (const auto* d = std::get_if<DoubleGroupoid>(&f)) {
    require_valid(validate_double_groupoid(*d), "double groupoid");
    if (degree < 0) degree = 2;
    c = chains(bar(double_nerve(*d, degree + 1), degree + 1));
    source = "bar construction of the double nerve";
  } else if (const auto* g = std::get_if<FiniteGroupoid>(&f)) {
    require_valid(validate_groupoid(*g), "groupoid");
    if (degree < 0) degree = 2;
    c = chains(nerve(*g, degree + 1));
    source = "nerve";
  } else {
    const auto& x = expect<TruncBisimplicialSet>(f, "a groupoid, double-groupoid, simplicial or bisimplicial fixture");
    if (degree < 0) degree = std::min(x.range().max_p, x.range().max_q) - 1;
    c = chains(diagonal(x));
    source = "diagonal";
  }
  const HomologyResult h = homology(c, degree);
  if (o.json) {
    out << to_json(h).dump(2) << "\n";
  } else {
    print_homology(out, "homology of the " + source + " (normalized chains)", h);
    if (h.truncation_bounded) out << "degrees above " << degree << " not computed\n";
  }
  return kPass;
}

// symplectic

Json matrix_rows(const QMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(rational_to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string vector_string(const QVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + rational_to_string(v[i]);
  return s + ")";
}

Json condition_json(const ConditionResult& c) {
  Json w = Json::array();
  for (const auto& x : c.witness) w.push_back(rational_to_string(x));
  return {{"holds", c.holds}, {"detail", c.detail}, {"witness", std::move(w)}};
}

struct SymplecticRun {
  TheoremCheck theorem;
  std::optional<PairingReport> pairing;
};

SymplecticRun run_symplectic(const LinearDoubleGroupoid& l) {
  SymplecticRun run;
  run.theorem = verify_theorem(l);
  if (run.theorem.report.cond3.holds) {
    const LinearBar bar = linear_bar_levels(l);
    run.pairing = pairing_matrix(bar, pullback_form(l, bar));
  }
  return run;
}

int symplectic_trials(const Options& o, const LinearDoubleGroupoid& l, std::ostream& out) {
  const auto basis = multiplicative_forms(l);
  std::vector<TheoremCheck> checks(static_cast<std::size_t>(o.trials));
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count())
  for (int t = 0; t < o.trials; ++t) {
    LinearDoubleGroupoid m = l;
    m.omega = random_form(basis, l.dim_d(), o.seed + static_cast<std::uint64_t>(t));
    checks[static_cast<std::size_t>(t)] = verify_theorem(m);
  }
  int nondegenerate = 0, conditions = 0, holds = 0;
  for (const auto& c : checks) {
    nondegenerate += c.omega_nondegenerate;
    conditions += c.conditions;
    holds += c.holds;
  }
  if (o.json) {
    Json rows = Json::array();
    for (int t = 0; t < o.trials; ++t) {
      const auto& c = checks[static_cast<std::size_t>(t)];
      rows.push_back({{"seed", o.seed + static_cast<std::uint64_t>(t)},
                      {"omega_nondegenerate", c.omega_nondegenerate},
                      {"conditions", c.conditions},
                      {"holds", c.holds}});
    }
    out << Json{{"kind", "symplectic-trials"},
                {"name", l.name},
                {"form_space_dim", basis.size()},
                {"trials", std::move(rows)},
                {"all_hold", holds == o.trials}}
               .dump(2)
        << "\n";
  } else {
    out << "fixture: " << l.name << "\n";
    out << "multiplicative forms: dimension " << basis.size() << "\n";
    out << "trials: " << o.trials << " (seeds " << o.seed << ".." << o.seed + static_cast<std::uint64_t>(o.trials) - 1
        << ")\n";
    out << "nondegenerate: " << nondegenerate << "\n";
    out << "conditions hold: " << conditions << "\n";
    out << "equivalence holds: " << holds << "/" << o.trials << "\n";
  }
  return holds == o.trials ? kPass : kFail;
}

int cmd_symplectic(const Options& o, std::ostream& out) {
  const Fixture f = load_fixture(o.path);
  const auto& l = expect<LinearDoubleGroupoid>(f, "a linear-double-groupoid fixture");
  require_valid(validate_linear_double_groupoid(l), "linear double groupoid");
  if (o.trials > 0) return symplectic_trials(o, l, out);

  const SymplecticRun run = run_symplectic(l);
  const auto& t = run.theorem;
  const auto& r = t.report;
  const bool pass = t.holds && r.all();
  if (o.json) {
    Json j{{"kind", "symplectic"},
           {"name", l.name},
           {"multiplicative", true},
           {"ranks", {{"dim_w1", r.dim_w1}, {"dim_w2", r.dim_w2}, {"rank_omega_d", r.rank_omega_d},
                      {"rank_Omega", r.rank_omega}, {"dim_w00", r.dim_w00}, {"dim_w10", r.dim_w10},
                      {"dim_w11", r.dim_w11}}},
           {"cond1", condition_json(r.cond1)},
           {"cond2", condition_json(r.cond2)},
           {"cond3", condition_json(r.cond3)},
           {"omega_nondegenerate", t.omega_nondegenerate},
           {"equivalence_holds", t.holds}};
    if (run.pairing)
      j["pairing"] = {{"matrix", matrix_rows(run.pairing->matrix)}, {"nondegenerate", run.pairing->nondegenerate}};
    else
      j["pairing"] = nullptr;
    out << j.dump(2) << "\n";
  } else {
    out << "fixture: " << l.name << "\n";
    out << "Omega multiplicative: yes\n";
    out << "dim W1 = " << r.dim_w1 << ", dim W2 = " << r.dim_w2 << "\n";
    out << "rank omega = " << r.rank_omega_d << " (dim D = " << l.dim_d() << "), rank Omega = " << r.rank_omega
        << "\n";
    out << "dim W00 = " << r.dim_w00 << ", dim W10 = " << r.dim_w10 << ", dim W11 = " << r.dim_w11 << "\n";
    const std::pair<const char*, const ConditionResult*> conds[] = {
        {"condition 1", &r.cond1}, {"condition 2", &r.cond2}, {"condition 3", &r.cond3}};
    for (const auto& [name, c] : conds) {
      out << name << ": " << (c->holds ? "holds" : "fails");
      if (!c->detail.empty()) out << " (" << c->detail << ")";
      out << "\n";
      if (!c->witness.empty()) out << "  witness " << vector_string(c->witness) << "\n";
    }
    if (run.pairing) {
      out << "pairing W11 x W10:\n" << run.pairing->matrix.to_string();
      out << "pairing nondegenerate: " << yes_no(run.pairing->nondegenerate) << "\n";
    } else {
      out << "pairing: unavailable, level 1 does not decompose\n";
    }
    out << "omega nondegenerate: " << yes_no(t.omega_nondegenerate) << "\n";
    out << "equivalence holds: " << yes_no(t.holds) << "\n";
  }
  return pass ? kPass : kFail;
}

// fixture

Json builtin(const std::string& name) {
  if (name == "pair2") return to_json(pair2_fixture());
  if (name == "pair2-nonfull") return to_json(pair2_nonfull_fixture());
  if (name == "z2grp") return to_json(z2grp_fixture());
  if (name == "z2-nerve") return to_json(nerve(cyclic_group(2), 3));
  if (name == "z2grp-nerve") return to_json(double_nerve_with_elements(z2grp_fixture(), BidegreeRange::box(3)).bisimplicial);
  if (name == "vv1") return to_json(vv_fixture(1));
  if (name == "vv1-zero") {
    auto l = vv_fixture(1, QMatrix(1, 1));
    l.name = "VV1-zero";
    return to_json(l);
  }
  if (name == "pair-linear") return to_json(linear_pair_fixture(cotangent_groupoid(1), vv_fixture(1).omega));
  if (name.rfind("unit", 0) == 0 && name.size() > 4) {
    const int m = std::stoi(name.substr(4));
    if (m > 0) return to_json(unit_fixture(m));
  }
  if (name.rfind("vv", 0) == 0 && name.size() > 2) {
    const int n = std::stoi(name.substr(2));
    if (n > 0) return to_json(vv_fixture(n));
  }
  throw InputError("unknown built-in fixture '" + name + "'");
}

int cmd_fixture(const Options& o, std::ostream& out) {
  out << builtin(o.fixture).dump(2) << "\n";
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite double groupoids, their bar constructions, and linear symplectic checks"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Machine-readable output");

  auto* validate = app.add_subcommand("validate", "Check the axioms of a fixture");
  validate->add_option("file", o.path, "Fixture file")->required();

  auto* barc = app.add_subcommand("bar", "Bar construction of a double nerve, as a simplicial fixture");
  barc->add_option("file", o.path, "Double groupoid or bisimplicial fixture")->required();
  barc->add_option("-N,--levels", o.levels, "Top level")->check(CLI::Range(0, 8));

  auto* kan = app.add_subcommand("kan", "Horn filling table");
  kan->add_option("file", o.path, "Double groupoid, bisimplicial or simplicial fixture")->required();
  kan->add_option("-n", o.n, "Uniqueness above this level")->check(CLI::Range(0, 8));
  kan->add_option("-N,--levels", o.levels, "Top level")->check(CLI::Range(1, 8));
  kan->add_option("--budget", o.budget, "Horn enumeration budget");

  auto* gz = app.add_subcommand("groupoidize", "Fundamental groupoid of level 1");
  gz->add_option("file", o.path, "Double groupoid or simplicial fixture")->required();
  gz->add_option("--max-word-len", o.max_word_len, "Word length bound for saturation")->check(CLI::Range(1, 12));
  gz->add_option("--budget", o.budget, "Word enumeration budget");

  auto* hom = app.add_subcommand("homology", "Integral homology");
  hom->add_option("file", o.path, "Fixture")->required();
  hom->add_option("-d,--degree", o.degree, "Highest degree")->check(CLI::Range(0, 8));
  hom->add_flag("--compare", o.compare, "Compare diagonal, bar and total complex");

  auto* sym = app.add_subcommand("symplectic", "Nondegeneracy conditions for a linear double groupoid");
  sym->add_option("file", o.path, "Linear double groupoid fixture")->required();
  sym->add_option("--trials", o.trials, "Random multiplicative forms to test")->check(CLI::Range(0, 100000));
  sym->add_option("--seed", o.seed, "Seed of the first trial");

  auto* fix = app.add_subcommand("fixture", "Print a built-in fixture");
  fix->add_option("name", o.fixture,
                  "pair2, pair2-nonfull, z2grp, unitM, z2-nerve, z2grp-nerve, vvN, vv1-zero, pair-linear")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInput;
  }

  std::ostringstream out;
  int code = kPass;
  try {
    if (*validate) code = cmd_validate(o, out);
    if (*barc) code = cmd_bar(o, out);
    if (*kan) code = cmd_kan(o, out);
    if (*gz) code = cmd_groupoidize(o, out);
    if (*hom) code = cmd_homology(o, out);
    if (*sym) code = cmd_symplectic(o, out);
    if (*fix) code = cmd_fixture(o, out);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  std::cout << out.str();
  return code;
}
