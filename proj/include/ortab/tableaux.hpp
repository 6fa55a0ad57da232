#pragma once

// Orthogonal tableaux, skew tableaux with a star, doubling, the NQS levels
// and the half-turn involution σ.

#include <climits>
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "ortab/columns.hpp"
#include "ortab/core.hpp"

namespace ortab {

// One column of a (non-skew) tableau.
class Column {
 public:
  Column(AdmissibleColumn c) : v_(std::move(c)) {}
  Column(SpinColumn c) : v_(std::move(c)) {}
  static Column from_entries(int n, const std::vector<Entry>& entries, bool spin);

  bool is_spin() const { return std::holds_alternative<SpinColumn>(v_); }
  const AdmissibleColumn& admissible() const { return std::get<AdmissibleColumn>(v_); }
  const SpinColumn& spin() const { return std::get<SpinColumn>(v_); }
  int n() const;
  int height() const;
  std::vector<Entry> entries() const;
  ColumnPair dble() const;

  friend bool operator==(const Column&, const Column&) = default;

 private:
  std::variant<AdmissibleColumn, SpinColumn> v_;
};

// Canonical order: height, then spin before admissible, then entry keys.
int compare_columns(const Column& x, const Column& y);

struct Tableau {
  int n = 0;
  std::vector<Column> columns;

  Tableau() = default;
  explicit Tableau(int n_, std::vector<Column> cols = {});

  static Tableau trivial(const Shape& lambda);
  Shape shape() const;
  bool empty() const { return columns.empty(); }

  friend bool operator==(const Tableau&, const Tableau&) = default;
};

bool operator<(const Tableau& x, const Tableau& y);

// Marks the star box inside a skew column.
inline constexpr Entry kStar = INT_MIN;

// spin_rotated is what σ makes of a spin column: it sits last and doubles to
// (itself, n̄..1̄) instead of (1..n, itself).
enum class ColumnKind { admissible, spin, spin_rotated };

struct Box {
  int row = 0;  // 1-based
  int col = 0;  // 1-based
  friend bool operator==(const Box&, const Box&) = default;
};

// Cells occupy rows skip+1 .. skip+cells.size(); kStar cells are the star.
struct SkewColumn {
  ColumnKind kind = ColumnKind::admissible;
  int skip = 0;
  std::vector<Entry> cells;

  int height() const { return skip + static_cast<int>(cells.size()); }
  std::vector<Entry> letters() const;
  friend bool operator==(const SkewColumn&, const SkewColumn&) = default;
};

// Skew tableau at either the orthogonal level or the two-letter level (the
// latter uses only admissible kinds and has no zeros).
struct SkewTableau {
  int n = 0;
  std::vector<SkewColumn> columns;

  // The letter or star at a box, if the box holds one.
  std::optional<Entry> at(int row, int col) const;
  std::optional<Entry> letter_at(int row, int col) const;
  std::vector<Box> stars() const;
  int max_height() const;
  friend bool operator==(const SkewTableau&, const SkewTableau&) = default;
};

SkewTableau to_skew(const Tableau& t);
// Requires no stars, no skips and non-rotated kinds; drops empty columns.
Tableau to_tableau(const SkewTableau& s);
SkewTableau without_stars(const SkewTableau& s);

// Checks column letters per kind, zero-free two-letter columns when asked,
// and that both the removed region and the outer shape are Young diagrams.
void validate_skew(const SkewTableau& s, bool two_letter = false);

std::vector<TwoLetterColumn> dble(const Tableau& t);
// Doubles each column's letters in place; star cells are copied to both halves.
SkewTableau dble(const SkewTableau& s);
// Inverse of dble for a two-letter tableau whose columns pair up as doubles.
// Throws NotAdmissible when a pair is not the double of a column of that kind.
SkewTableau undouble(const SkewTableau& two_letter, const std::vector<ColumnKind>& kinds);

// Columns strictly increasing and rows weakly increasing, where boxes exist.
bool is_sl_semistandard(const SkewTableau& two_letter);
bool is_semistandard(const Tableau& t);
bool is_semistandard(const SkewTableau& s);

std::set<int> nqs_levels(const Tableau& t);
bool is_quasistandard(const Tableau& t);

// Half-turn inside rows 1..height and all columns; height 0 means the
// tallest column. Letters are barred, 0 and the star are kept.
SkewTableau sigma(const SkewTableau& s, int height = 0);
SkewTableau sigma(const Tableau& t);

Weight weight_of(const Tableau& t);

}  // namespace ortab
