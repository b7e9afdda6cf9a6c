#include "highergpd/validation.hpp"

#include <sstream>

namespace hgpd {

void ValidationReport::add(Violation v) {
  ++total_;
  if (violations_.size() < max_recorded) violations_.push_back(std::move(v));
}

void ValidationReport::add_structural(std::string rule, std::string detail) {
  add({Violation::Kind::structural, std::move(rule), {}, std::move(detail)});
}

void ValidationReport::add_axiom(std::string rule, std::vector<std::int64_t> witness,
                                 std::string detail) {
  add({Violation::Kind::axiom, std::move(rule), std::move(witness), std::move(detail)});
}

void ValidationReport::merge(const ValidationReport& other, const std::string& prefix) {
  for (const auto& v : other.violations_) {
    Violation copy = v;
    if (!prefix.empty()) copy.rule = prefix + copy.rule;
    if (violations_.size() < max_recorded) violations_.push_back(std::move(copy));
  }
  total_ += other.total_;
}

bool ValidationReport::has_structural() const {
  for (const auto& v : violations_)
    if (v.kind == Violation::Kind::structural) return true;
  return false;
}

bool ValidationReport::mentions(const std::string& rule_prefix) const {
  for (const auto& v : violations_)
    if (v.rule.find(rule_prefix) != std::string::npos) return true;
  return false;
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  if (ok()) {
    os << "ok\n";
    return os.str();
  }
  os << total_ << " violation(s)";
  if (total_ > violations_.size()) os << " (first " << violations_.size() << " shown)";
  os << "\n";
  for (const auto& v : violations_) {
    os << (v.kind == Violation::Kind::structural ? "  structural " : "  axiom ") << v.rule;
    if (!v.witness.empty()) {
      os << " witness=(";
      for (std::size_t i = 0; i < v.witness.size(); ++i) os << (i ? "," : "") << v.witness[i];
      os << ")";
    }
    if (!v.detail.empty()) os << " " << v.detail;
    os << "\n";
  }
  return os.str();
}

}  // namespace hgpd
