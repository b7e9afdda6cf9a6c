#ifndef HIGHERGPD_VALIDATION_HPP
#define HIGHERGPD_VALIDATION_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace hgpd {

struct Violation {
  enum class Kind { structural, axiom };
  Kind kind = Kind::axiom;
  std::string rule;                  // short rule identifier, e.g. "inverse-left"
  std::vector<std::int64_t> witness; // indices of the offending elements
  std::string detail;

  bool operator==(const Violation&) const = default;
};

/// Result of a structural/axiomatic check. Empty iff the object is valid.
class ValidationReport {
 public:
  /// Stops recording new witnesses past this many entries.
  static constexpr std::size_t max_recorded = 64;

  void add(Violation v);
  void add_structural(std::string rule, std::string detail);
  void add_axiom(std::string rule, std::vector<std::int64_t> witness, std::string detail = {});
  void merge(const ValidationReport& other, const std::string& prefix = {});

  bool ok() const { return total_ == 0; }
  bool has_structural() const;
  std::size_t total() const { return total_; }
  const std::vector<Violation>& violations() const { return violations_; }
  bool mentions(const std::string& rule_prefix) const;

  std::string to_string() const;

 private:
  std::vector<Violation> violations_;
  std::size_t total_ = 0;
};

}  // namespace hgpd

#endif
