#include "cli_io.hpp"

#include <fstream>
#include <sstream>

namespace kmjm::cli {

namespace {

Integer json_integer(const Json& v) {
  if (v.is_number_integer()) return Integer(v.get<long long>());
  if (v.is_string()) {
    try {
      return parse_integer(v.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  throw UsageError("expected an integer, got " + v.dump());
}

IntMatrix json_matrix(const Json& rows) {
  if (!rows.is_array() || rows.empty()) throw UsageError("matrix must be a nonempty array of rows");
  const auto n = static_cast<Eigen::Index>(rows.size());
  IntMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) throw UsageError("matrix must be square");
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = json_integer(row[static_cast<std::size_t>(j)]);
  }
  return m;
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError("malformed JSON in " + what + ": " + e.what());
  }
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw UsageError("empty entry in list '" + text + "'");
    out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

std::string cell(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

}  // namespace

Gcm read_gcm_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read GCM file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const Json doc = parse_json(buf.str(), path);
  if (doc.is_array()) return validate_gcm(json_matrix(doc));
  if (!doc.is_object() || !doc.contains("entries")) throw UsageError("GCM file needs an \"entries\" field");
  IntMatrix m = json_matrix(doc.at("entries"));
  if (doc.contains("rank") && json_integer(doc.at("rank")) != m.rows()) {
    throw UsageError("\"rank\" does not match the size of \"entries\"");
  }
  return validate_gcm(m);
}

Gcm parse_gcm_inline(const std::string& text) { return validate_gcm(json_matrix(parse_json(text, "--gcm-inline"))); }

WeylWord parse_word(const std::string& text, Eigen::Index rank) {
  WeylWord w;
  if (text.empty()) return w;
  for (const auto& item : split(text)) {
    int letter = 0;
    try {
      letter = std::stoi(item);
    } catch (const std::exception&) {
      throw UsageError("bad letter '" + item + "' in --word");
    }
    if (letter < 1 || letter > rank) throw UsageError("letter " + item + " outside 1.." + std::to_string(rank));
    w.letters.push_back(letter - 1);
  }
  return w;
}

std::vector<Integer> parse_integers(const std::string& text) {
  std::vector<Integer> out;
  for (const auto& item : split(text)) {
    try {
      out.push_back(parse_integer(item));
    } catch (const std::invalid_argument&) {
      throw UsageError("bad integer '" + item + "'");
    }
  }
  return out;
}

RatVector parse_rationals(const std::string& text) {
  const auto items = split(text);
  RatVector v(static_cast<Eigen::Index>(items.size()));
  for (std::size_t i = 0; i < items.size(); ++i) {
    try {
      v(static_cast<Eigen::Index>(i)) = parse_rational(items[i]);
    } catch (const std::invalid_argument&) {
      throw UsageError("bad rational '" + items[i] + "'");
    }
  }
  return v;
}

std::vector<RootVec> parse_roots(const std::string& text, Eigen::Index rank) {
  const Json doc = parse_json(text, "--roots");
  if (!doc.is_array()) throw UsageError("--roots must be a JSON array of coefficient arrays");
  std::vector<RootVec> out;
  for (const auto& r : doc) {
    if (!r.is_array() || static_cast<Eigen::Index>(r.size()) != rank) {
      throw UsageError("root " + r.dump() + " must have " + std::to_string(rank) + " coefficients");
    }
    IntVector v(rank);
    for (Eigen::Index i = 0; i < rank; ++i) v(i) = json_integer(r[static_cast<std::size_t>(i)]);
    out.emplace_back(std::move(v));
  }
  return out;
}

Json to_json(const Integer& z) {
  // Small values stay numbers; anything beyond 2^53 becomes a decimal string.
  if (abs(z) < (Integer(1) << 53)) return Json(static_cast<long long>(z));
  return Json(z.str());
}

Json to_json(const RootVec& r) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < r.rank(); ++i) out.push_back(to_json(r[i]));
  return out;
}

Json to_json(const std::vector<RootVec>& roots) {
  Json out = Json::array();
  for (const auto& r : roots) out.push_back(to_json(r));
  return out;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const AlgElement& x) {
  Json terms = Json::object();
  for (const auto& [id, coeff] : x.terms()) {
    const std::string key = id.is_cartan() ? "h#" + std::to_string(id.index + 1) : id.root.str() + "#" + std::to_string(id.index);
    terms[key] = coeff.str();
  }
  return Json{{"terms", terms}};
}

Json to_json(const sweeps::SuiteResult& r) {
  Json tallies = Json::object();
  for (const auto& [k, v] : r.tallies) tallies[k] = v;
  return Json{{"suite", r.suite}, {"cases", r.cases}, {"failures", r.failures}, {"seed", r.seed}, {"tallies", tallies}};
}

std::string to_tsv(const Json& value) {
  std::ostringstream out;
  if (value.is_array() && !value.empty() && value.front().is_object()) {
    std::vector<std::string> keys;
    for (const auto& [k, v] : value.front().items()) keys.push_back(k);
    for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "\t" : "") << keys[i];
    out << '\n';
    for (const auto& rec : value) {
      for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "\t" : "") << (rec.contains(keys[i]) ? cell(rec[keys[i]]) : "");
      out << '\n';
    }
  } else if (value.is_object()) {
    for (const auto& [k, v] : value.items()) out << k << '\t' << cell(v) << '\n';
  } else if (value.is_array()) {
    for (const auto& v : value) out << cell(v) << '\n';
  } else {
    out << cell(value) << '\n';
  }
  return out.str();
}

}  // namespace kmjm::cli
