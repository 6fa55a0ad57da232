#pragma once

#include <string>
#include <vector>

#include "doctest.h"
#include "ortab/io.hpp"

namespace ortab::testing {

inline Tableau tab(const std::string& text) { return parse_tableau(text); }
inline SkewTableau skew(const std::string& text) { return parse_skew(text); }

inline std::vector<std::vector<Entry>> columns_of(const std::vector<TwoLetterColumn>& cols) {
  std::vector<std::vector<Entry>> out;
  for (const auto& c : cols) out.push_back(c.entries());
  return out;
}

// The worked push example in rank 5 and its image.
inline const char* kPushT = "n 5\ncol 1 2 0 -2\ncol 1 3 -1\ncol 2 0";
inline const char* kPushU = "n 5\ncol 1 3 0 -2\ncol 2 0 -1";

}  // namespace ortab::testing

namespace doctest {
template <>
struct StringMaker<ortab::Tableau> {
  static String convert(const ortab::Tableau& t) { return ortab::format_tableau(t).c_str(); }
};
template <>
struct StringMaker<ortab::SkewTableau> {
  static String convert(const ortab::SkewTableau& t) { return ortab::format_skew(t).c_str(); }
};
template <>
struct StringMaker<ortab::LetterSet> {
  static String convert(const ortab::LetterSet& s) { return s.to_string().c_str(); }
};
}  // namespace doctest
