#pragma once

// Text format for tableaux:
//
//   n 5
//   col 1 2 0 -2
//   col sp 1 -2
//   col skip=1 * 3
//
// One line per column, entries top to bottom, barred letters negative, "*"
// for the star. "sp" marks a spin column and "spr" its σ-rotated form.
// '#' starts a comment; blank lines are ignored.

#include <string>

#include "ortab/tableaux.hpp"

namespace ortab {

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& msg);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Accepts skips, stars and any column kinds. Letters are validated per kind.
SkewTableau parse_skew(const std::string& text);
// Additionally rejects skips and stars. Columns must be admissible (or spin)
// but the tableau need not be semistandard.
Tableau parse_tableau(const std::string& text);

// Canonical text without a trailing newline.
std::string format_tableau(const Tableau& t);
std::string format_skew(const SkewTableau& s);

// ASCII grid: one text row per tableau row, "." for removed boxes.
std::string format_pretty(const SkewTableau& s);

}  // namespace ortab
