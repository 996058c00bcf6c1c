#include "cremona/document.hpp"

#include <cctype>
#include <sstream>

#include "cremona/error.hpp"

namespace cremona {

namespace {

std::vector<std::int64_t> parse_line(const std::string& line, std::size_t lineno) {
  std::vector<std::int64_t> values;
  std::istringstream in(line);
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size())
      fail(ErrorKind::Malformed, "line " + std::to_string(lineno) + ": not an integer: '" + token + "'");
    values.push_back(v);
  }
  return values;
}

MatrixDocument parse_text(std::string_view text) {
  std::vector<std::vector<std::int64_t>> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    auto values = parse_line(line, lineno);
    if (!values.empty()) lines.push_back(std::move(values));
  }
  if (lines.empty()) fail(ErrorKind::Malformed, "empty matrix");

  MatrixDocument doc;
  // Matrices have at least 3 columns, so a two-number line is the header.
  if (lines.front().size() == 2) {
    doc.n = static_cast<int>(lines.front()[0]);
    doc.d = lines.front()[1];
    lines.erase(lines.begin());
    if (static_cast<std::int64_t>(lines.size()) != doc.n + 1)
      fail(ErrorKind::Malformed, "header declares n = " + std::to_string(doc.n) + " but found " +
                                     std::to_string(lines.size()) + " rows");
  } else {
    doc.n = static_cast<int>(lines.size()) - 1;
  }
  doc.rows = std::move(lines);
  return doc;
}

MatrixDocument parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& err) {
    fail(ErrorKind::Malformed, std::string("invalid JSON: ") + err.what());
  }
  if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array())
    fail(ErrorKind::Malformed, "JSON matrix document needs a \"rows\" array");
  MatrixDocument doc;
  try {
    doc.rows = j["rows"].get<RawMatrix>();
    doc.n = j.contains("n") ? j["n"].get<int>() : static_cast<int>(doc.rows.size()) - 1;
    if (j.contains("d") && !j["d"].is_null()) doc.d = j["d"].get<std::int64_t>();
  } catch (const nlohmann::json::exception& err) {
    fail(ErrorKind::Malformed, std::string("bad matrix document: ") + err.what());
  }
  if (static_cast<std::int64_t>(doc.rows.size()) != doc.n + 1)
    fail(ErrorKind::Malformed, "n = " + std::to_string(doc.n) + " but found " +
                                   std::to_string(doc.rows.size()) + " rows");
  return doc;
}

}  // namespace

MatrixDocument parse_document(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) fail(ErrorKind::Malformed, "empty input");
  MatrixDocument doc = text[first] == '{' ? parse_json(text) : parse_text(text);
  for (std::size_t r = 0; r < doc.rows.size(); ++r)
    if (doc.rows[r].size() != doc.rows.size())
      fail(ErrorKind::Malformed, "row " + std::to_string(r) + " has " + std::to_string(doc.rows[r].size()) +
                                     " entries, expected " + std::to_string(doc.rows.size()));
  return doc;
}

ExponentMatrix to_exponent_matrix(const MatrixDocument& doc, ValidateOptions options) {
  ExponentMatrix e = validate(doc.rows, options);
  // A declared degree describes the input, so compare before normalization.
  if (doc.d && !doc.rows.empty()) {
    std::int64_t sum = 0;
    for (auto v : doc.rows.front()) sum += v;
    if (sum != *doc.d)
      fail(ErrorKind::Malformed, "declared d = " + std::to_string(*doc.d) + " but rows sum to " +
                                     std::to_string(sum));
  }
  return e;
}

std::string to_text(const ExponentMatrix& e) {
  std::ostringstream os;
  os << e.n() << ' ' << e.degree() << '\n';
  for (std::size_t r = 0; r < e.size(); ++r) {
    for (std::size_t c = 0; c < e.size(); ++c) os << (c ? " " : "") << e(r, c);
    os << '\n';
  }
  return os.str();
}

nlohmann::ordered_json to_json(const ExponentMatrix& e) {
  nlohmann::ordered_json j;
  j["n"] = e.n();
  j["d"] = e.degree();
  j["rows"] = e.rows();
  return j;
}

}  // namespace cremona
