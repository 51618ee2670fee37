#include "troptab/text_format.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "troptab/error.hpp"

namespace troptab {

namespace {

struct Token {
  std::string text;
  std::size_t pos;
};

struct Row : std::vector<Token> {
  std::size_t start = 0;
};

using TokenRows = std::vector<Row>;

TokenRows tokenize(const std::string& text) {
  TokenRows rows(1);
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '/' || c == '\n') {
      rows.emplace_back();
      rows.back().start = ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else {
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != '/') ++j;
      rows.back().push_back({text.substr(i, j - i), i});
      i = j;
    }
  }
  // A trailing newline does not open a row.
  while (rows.size() > 1 && rows.back().empty()) rows.pop_back();
  return rows;
}

bool whole_input_is_dash(const TokenRows& rows) {
  return rows.size() == 1 && rows[0].size() == 1 && rows[0][0].text == "-";
}

bool is_empty_input(const TokenRows& rows) {
  return whole_input_is_dash(rows) || (rows.size() == 1 && rows[0].empty());
}

int parse_positive(const Token& t, bool allow_zero = false) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size())
    throw ParseError("expected a number, got '" + t.text + "'", t.pos);
  if (v < 0 || (v == 0 && !allow_zero)) throw ParseError("number out of range: " + t.text, t.pos);
  return v;
}

std::string join_rows(const std::vector<std::string>& rows) {
  if (rows.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out += " / ";
    out += rows[i].empty() ? "-" : rows[i];
  }
  return out;
}

}  // namespace

SkewTableau parse_tableau(const std::string& text) {
  const TokenRows rows = tokenize(text);
  if (is_empty_input(rows)) return {};
  std::vector<int> inner;
  std::vector<std::vector<int>> filled;
  for (const auto& row : rows) {
    if (row.empty()) throw ParseError("empty row", row.start);
    int dots = 0;
    std::vector<int> entries;
    for (const Token& t : row) {
      if (t.text.find_first_not_of('.') == std::string::npos) {
        if (!entries.empty()) throw ParseError("inner box after a filled box", t.pos);
        dots += static_cast<int>(t.text.size());
      } else {
        entries.push_back(parse_positive(t));
      }
    }
    inner.push_back(dots);
    filled.push_back(std::move(entries));
  }
  for (std::size_t r = 1; r < inner.size(); ++r) {
    if (inner[r] > inner[r - 1]) throw ParseError("inner boxes do not form a partition", rows[r].start);
    if (inner[r] + filled[r].size() > inner[r - 1] + filled[r - 1].size())
      throw ParseError("row is longer than the row above", rows[r].start);
  }
  return SkewTableau(Partition(inner), std::move(filled));
}

std::string format_tableau(const SkewTableau& t) {
  std::vector<std::string> rows;
  for (int r = 1; r <= t.num_rows(); ++r) {
    std::string s;
    for (int c = 1; c <= t.outer()[r]; ++c) {
      if (c > 1) s += ' ';
      s += c <= t.inner()[r] ? std::string(".") : std::to_string(t.at(r, c));
    }
    rows.push_back(std::move(s));
  }
  return join_rows(rows);
}

CircledArray parse_circled_array(const std::string& text) {
  const TokenRows rows = tokenize(text);
  if (is_empty_input(rows)) return {};
  std::vector<std::vector<int>> out;
  for (const auto& row : rows) {
    std::vector<int> values;
    if (row.size() == 1 && row[0].text == "-") {
      out.push_back(values);
      continue;
    }
    if (row.empty()) throw ParseError("empty row (write '-')", row.start);
    for (const Token& t : row) {
      const int v = parse_positive(t);
      if (!values.empty() && v < values.back()) throw ParseError("row is not weakly increasing", t.pos);
      values.push_back(v);
    }
    out.push_back(std::move(values));
  }
  return CircledArray(std::move(out));
}

std::string format_circled_array(const CircledArray& m) {
  std::vector<std::string> rows;
  for (const auto& row : m.rows()) rows.push_back(format_int_list(row, " "));
  return join_rows(rows);
}

WMatrix parse_wmatrix(const std::string& text) {
  const TokenRows rows = tokenize(text);
  if (is_empty_input(rows)) return {};
  std::vector<std::vector<int>> out;
  for (const auto& row : rows) {
    if (row.empty()) throw ParseError("empty row", row.start);
    if (!out.empty() && row.size() != out.front().size())
      throw ParseError("rows have different lengths", row.front().pos);
    std::vector<int> values;
    for (const Token& t : row) values.push_back(parse_positive(t, true));
    out.push_back(std::move(values));
  }
  return WMatrix::from_rows(out);
}

std::string format_wmatrix(const WMatrix& w) {
  std::vector<std::string> rows;
  for (const auto& row : w.to_rows()) rows.push_back(format_int_list(row, " "));
  return join_rows(rows);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && text[j] != ',' && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    out.push_back(parse_positive({text.substr(i, j - i), i}));
    i = j;
  }
  return out;
}

std::string format_int_list(const std::vector<int>& v, const std::string& sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

}  // namespace troptab
