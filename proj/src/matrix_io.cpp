#include "qwalk/matrix_io.hpp"

#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace qwalk {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
      line_(line) {}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

// Line-oriented reader that skips blank lines and tracks 1-based numbers.
class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  bool next(std::vector<std::string_view>& tokens) {
    while (pos_ <= text_.size()) {
      std::size_t end = text_.find('\n', pos_);
      if (end == std::string_view::npos) end = text_.size();
      std::string_view line = text_.substr(pos_, end - pos_);
      pos_ = end + 1;
      ++line_;
      tokens = split_ws(line);
      if (!tokens.empty()) return true;
    }
    return false;
  }
  std::size_t line() const { return line_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
};

std::size_t parse_count(std::string_view tok, std::size_t line, const char* what) {
  if (tok.empty() || tok.size() > 18)
    throw ParseError(line, std::string("invalid ") + what + " '" + std::string(tok) + "'");
  std::size_t v = 0;
  for (char c : tok) {
    if (c < '0' || c > '9')
      throw ParseError(line, std::string("invalid ") + what + " '" + std::string(tok) + "'");
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  return v;
}

}  // namespace

BigInt parse_bigint(std::string_view token, std::size_t line) {
  std::size_t start = (!token.empty() && (token[0] == '-' || token[0] == '+')) ? 1 : 0;
  if (token.size() == start)
    throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
  for (std::size_t i = start; i < token.size(); ++i)
    if (token[i] < '0' || token[i] > '9')
      throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
  std::string digits(token.substr(token[0] == '+' ? 1 : 0));
  return BigInt(digits, 10);
}

IntMatrix parse_matrix_text(std::string_view text) {
  LineReader reader(text);
  std::vector<std::string_view> tok;
  if (!reader.next(tok)) throw ParseError(1, "empty input, expected 'rows cols'");
  if (tok.size() != 2) throw ParseError(reader.line(), "header must be 'rows cols'");
  const std::size_t rows = parse_count(tok[0], reader.line(), "row count");
  const std::size_t cols = parse_count(tok[1], reader.line(), "column count");

  std::vector<BigInt> entries;
  entries.reserve(rows * cols);
  if (cols > 0) {
    for (std::size_t i = 0; i < rows; ++i) {
      if (!reader.next(tok))
        throw ParseError(reader.line(), "expected " + std::to_string(rows) + " rows, found " +
                                            std::to_string(i));
      if (tok.size() != cols)
        throw ParseError(reader.line(), "expected " + std::to_string(cols) + " entries, found " +
                                            std::to_string(tok.size()));
      for (auto t : tok) entries.push_back(parse_bigint(t, reader.line()));
    }
  }
  if (reader.next(tok)) throw ParseError(reader.line(), "trailing data after matrix");
  return {rows, cols, std::move(entries)};
}

std::string format_matrix_text(const IntMatrix& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += to_string(m(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string format_matrix_csv(const IntMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += to_string(m(i, j));
    }
    out += '\n';
  }
  return out;
}

IntMatrix parse_matrix_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // byte offset -> line number
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    throw ParseError(line, e.what());
  }
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw ParseError(0, "matrix JSON needs \"rows\", \"cols\" and \"entries\"");
  if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned())
    throw ParseError(0, "\"rows\" and \"cols\" must be non-negative integers");
  const auto rows = j["rows"].get<std::size_t>();
  const auto cols = j["cols"].get<std::size_t>();
  const auto& arr = j["entries"];
  if (!arr.is_array() || arr.size() != rows * cols)
    throw ParseError(0, "\"entries\" must be an array of rows*cols decimal strings");
  std::vector<BigInt> entries;
  entries.reserve(arr.size());
  for (const auto& e : arr) {
    if (e.is_string())
      entries.push_back(parse_bigint(e.get<std::string>()));
    else if (e.is_number_integer())
      entries.emplace_back(std::to_string(e.get<std::int64_t>()), 10);
    else
      throw ParseError(0, "matrix entries must be decimal strings");
  }
  return {rows, cols, std::move(entries)};
}

std::string format_matrix_json(const IntMatrix& m) {
  nlohmann::ordered_json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  auto& arr = j["entries"] = nlohmann::ordered_json::array();
  for (const auto& v : m.entries()) arr.push_back(to_string(v));
  return j.dump() + "\n";
}

IntMatrix parse_matrix(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_matrix_json(text) : parse_matrix_text(text);
  }
  return parse_matrix_text(text);
}

}  // namespace qwalk
