#ifndef HIGHERGPD_FIXTURES_IO_HPP
#define HIGHERGPD_FIXTURES_IO_HPP

#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "highergpd/double_groupoid.hpp"
#include "highergpd/homology.hpp"
#include "highergpd/kan.hpp"
#include "highergpd/linsymp.hpp"
#include "highergpd/simplicial.hpp"
#include "highergpd/truncation.hpp"

namespace hgpd {

using Json = nlohmann::ordered_json;

// Every document carries a "kind" tag. Rationals are "p/q" strings (integers
// are also accepted on input); big integers are decimal strings. Parse errors
// throw InputError naming the offending field.

Json to_json(const FiniteGroupoid& g);
Json to_json(const DoubleGroupoid& d);
Json to_json(const TruncSimplicialSet& x);
Json to_json(const TruncBisimplicialSet& x);
Json to_json(const LinearDoubleGroupoid& l);
Json to_json(const QuotientGroupoid& q);
Json to_json(const KanReport& r);
Json to_json(const HomologyResult& h);

FiniteGroupoid groupoid_from_json(const Json& j);
DoubleGroupoid double_groupoid_from_json(const Json& j);
TruncSimplicialSet simplicial_from_json(const Json& j);
TruncBisimplicialSet bisimplicial_from_json(const Json& j);
LinearDoubleGroupoid linear_from_json(const Json& j);
/// The word table is not serialized, so word_class on a parsed bounded
/// result finds nothing.
QuotientGroupoid quotient_from_json(const Json& j);
KanReport kan_report_from_json(const Json& j);
HomologyResult homology_from_json(const Json& j);

using Fixture = std::variant<FiniteGroupoid, DoubleGroupoid, TruncSimplicialSet, TruncBisimplicialSet,
                             LinearDoubleGroupoid>;

/// Dispatches on "kind": groupoid, double-groupoid, simplicial, bisimplicial,
/// linear-double-groupoid.
Fixture fixture_from_json(const Json& j);
/// Reads and parses a file; syntax errors report line and column.
Json read_json_file(const std::string& path);
Fixture load_fixture(const std::string& path);
const char* fixture_kind(const Fixture& f);

std::string word_to_string(const Word& w);
std::string rational_to_string(const Rational& r);

}  // namespace hgpd

#endif
