// Parsing of command-line values and JSON / TSV rendering for the kmjm tool.
#pragma once

#include "kmjm/sweeps.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace kmjm::cli {

using Json = nlohmann::ordered_json;

/// Raised for malformed user input; reported as a usage error (exit 2).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// {"rank": n, "entries": [[...]]} from a file, or a bare [[...]] inline.
Gcm read_gcm_file(const std::string& path);
Gcm parse_gcm_inline(const std::string& text);

/// "1,2,1" (1-based) to a 0-based word; checks letters against the rank.
WeylWord parse_word(const std::string& text, Eigen::Index rank);
std::vector<Integer> parse_integers(const std::string& text);
RatVector parse_rationals(const std::string& text);
/// "[[1,0],[0,1]]" as roots of the given rank.
std::vector<RootVec> parse_roots(const std::string& text, Eigen::Index rank);

Json to_json(const Integer& z);
Json to_json(const RootVec& r);
Json to_json(const std::vector<RootVec>& roots);
Json to_json(const IntMatrix& m);
/// {"terms": {"[1,0]#0": "p/q", "h#1": ...}}; Cartan basis ids are 1-based.
Json to_json(const AlgElement& x);
Json to_json(const sweeps::SuiteResult& r);

/// Tables become a header row plus one line per record; objects become
/// key/value lines. Nested values are written as compact JSON.
std::string to_tsv(const Json& value);

}  // namespace kmjm::cli
