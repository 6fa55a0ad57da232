#include "ortab/io.hpp"

#include <charconv>
#include <sstream>

namespace ortab {

ParseError::ParseError(int line, int column, const std::string& msg)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r' && line[j] != '#') ++j;
    out.push_back(Token{line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

bool parse_int(const std::string& s, int& v) {
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  return ec == std::errc() && p == s.data() + s.size();
}

struct ParsedColumn {
  SkewColumn column;
  int line;
};

}  // namespace

SkewTableau parse_skew(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int n = 0;
  bool have_n = false;
  int stars = 0;
  std::vector<ParsedColumn> cols;

  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (!have_n) {
      if (toks[0].text != "n") throw ParseError(lineno, toks[0].column, "expected header 'n <rank>'");
      if (toks.size() != 2) throw ParseError(lineno, toks[0].column, "header takes exactly one integer");
      if (!parse_int(toks[1].text, n) || n < 1 || n > 31) {
        throw ParseError(lineno, toks[1].column, "rank must be an integer in [1,31]");
      }
      have_n = true;
      continue;
    }
    if (toks[0].text != "col") throw ParseError(lineno, toks[0].column, "expected 'col'");
    SkewColumn c;
    std::size_t k = 1;
    if (k < toks.size() && (toks[k].text == "sp" || toks[k].text == "spr")) {
      c.kind = toks[k].text == "sp" ? ColumnKind::spin : ColumnKind::spin_rotated;
      ++k;
    }
    if (k < toks.size() && toks[k].text.rfind("skip=", 0) == 0) {
      if (!parse_int(toks[k].text.substr(5), c.skip) || c.skip < 0) {
        throw ParseError(lineno, toks[k].column, "skip must be a non-negative integer");
      }
      ++k;
    }
    for (; k < toks.size(); ++k) {
      const Token& t = toks[k];
      if (t.text == "*") {
        if (++stars > 1) throw ParseError(lineno, t.column, "at most one star");
        c.cells.push_back(kStar);
        continue;
      }
      int v = 0;
      if (!parse_int(t.text, v)) throw ParseError(lineno, t.column, "bad entry '" + t.text + "'");
      if (v > n || v < -n) throw ParseError(lineno, t.column, "entry " + t.text + " out of range");
      c.cells.push_back(v);
    }
    cols.push_back(ParsedColumn{std::move(c), lineno});
  }
  if (!have_n) throw ParseError(lineno + 1, 1, "missing header 'n <rank>'");

  SkewTableau s;
  s.n = n;
  for (auto& pc : cols) s.columns.push_back(pc.column);
  try {
    validate_skew(s);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    // Messages name the offending column; point at its line.
    std::string msg = e.what();
    int line = cols.empty() ? 1 : cols.front().line;
    const std::string prefix = "column ";
    if (msg.rfind(prefix, 0) == 0) {
      int j = 0;
      if (std::from_chars(msg.data() + prefix.size(), msg.data() + msg.size(), j).ec == std::errc() &&
          j >= 1 && j <= static_cast<int>(cols.size())) {
        line = cols[j - 1].line;
      }
    }
    throw ParseError(line, 1, msg);
  }
  return s;
}

Tableau parse_tableau(const std::string& text) {
  SkewTableau s = parse_skew(text);
  for (std::size_t j = 0; j < s.columns.size(); ++j) {
    const SkewColumn& c = s.columns[j];
    const std::string where = "column " + std::to_string(j + 1);
    if (c.skip != 0) throw Error(where + ": skip is not allowed in a tableau");
    if (!s.stars().empty()) throw Error("a tableau cannot contain a star");
    if (c.kind == ColumnKind::spin_rotated) throw Error(where + ": rotated spin column in a tableau");
    if (c.cells.empty()) throw Error(where + " is empty");
  }
  return to_tableau(s);
}

std::string format_skew(const SkewTableau& s) {
  std::string out = "n " + std::to_string(s.n);
  for (const SkewColumn& c : s.columns) {
    out += "\ncol";
    if (c.kind == ColumnKind::spin) out += " sp";
    if (c.kind == ColumnKind::spin_rotated) out += " spr";
    if (c.skip) out += " skip=" + std::to_string(c.skip);
    for (Entry e : c.cells) out += e == kStar ? std::string(" *") : " " + std::to_string(e);
  }
  return out;
}

std::string format_tableau(const Tableau& t) { return format_skew(to_skew(t)); }

std::string format_pretty(const SkewTableau& s) {
  const int rows = s.max_height();
  const int cols = static_cast<int>(s.columns.size());
  std::string out;
  for (int r = 1; r <= rows; ++r) {
    std::string line;
    for (int c = 1; c <= cols; ++c) {
      const SkewColumn& col = s.columns[c - 1];
      std::string cell;
      if (r <= col.skip) {
        cell = ".";
      } else if (auto e = s.at(r, c)) {
        cell = *e == kStar ? "*" : std::to_string(*e);
      }
      if (cell.size() < 3) cell.insert(0, 3 - cell.size(), ' ');
      line += cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    if (r < rows) out += "\n";
  }
  return out;
}

}  // namespace ortab
