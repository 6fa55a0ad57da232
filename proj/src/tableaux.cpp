#include "ortab/tableaux.hpp"

#include <algorithm>

namespace ortab {

namespace {

std::vector<int> letter_rows(const SkewColumn& c) {
  std::vector<int> rows;
  for (std::size_t i = 0; i < c.cells.size(); ++i) {
    if (c.cells[i] != kStar) rows.push_back(c.skip + 1 + static_cast<int>(i));
  }
  return rows;
}

// Copy of `c` with its letter cells replaced, in order, by `letters`.
SkewColumn refill(const SkewColumn& c, const std::vector<Entry>& letters, ColumnKind kind) {
  SkewColumn out{kind, c.skip, c.cells};
  std::size_t k = 0;
  for (Entry& e : out.cells) {
    if (e == kStar) continue;
    if (k >= letters.size()) throw Error("refill: too few letters");
    e = letters[k++];
  }
  if (k != letters.size()) throw Error("refill: too many letters");
  return out;
}

void check_spin_letters(const std::vector<Entry>& letters, int n, int col) {
  EntrySplit sp = split_entries(letters, n);
  if (sp.zeros || !(sp.up & sp.down).empty()) {
    throw NotAdmissible("column " + std::to_string(col) + ": spin letters must avoid 0 and pairs i, ī");
  }
}

bool stars_match(const SkewColumn& x, const SkewColumn& y) {
  if (x.skip != y.skip || x.cells.size() != y.cells.size()) return false;
  for (std::size_t i = 0; i < x.cells.size(); ++i) {
    if ((x.cells[i] == kStar) != (y.cells[i] == kStar)) return false;
  }
  return true;
}

}  // namespace

Column Column::from_entries(int n, const std::vector<Entry>& entries, bool spin) {
  if (spin) return Column(SpinColumn::from_entries(n, entries));
  return Column(AdmissibleColumn::from_entries(n, entries));
}

int Column::n() const {
  return is_spin() ? spin().n() : admissible().n();
}

int Column::height() const { return is_spin() ? spin().height() : admissible().height(); }

std::vector<Entry> Column::entries() const {
  return is_spin() ? spin().entries() : admissible().entries();
}

ColumnPair Column::dble() const {
  return is_spin() ? double_column(spin()) : double_column(admissible());
}

int compare_columns(const Column& x, const Column& y) {
  if (x.height() != y.height()) return x.height() < y.height() ? -1 : 1;
  if (x.is_spin() != y.is_spin()) return x.is_spin() ? -1 : 1;
  const int n = x.n();
  auto ex = x.entries();
  auto ey = y.entries();
  for (std::size_t i = 0; i < ex.size(); ++i) {
    int kx = order_key(ex[i], n);
    int ky = order_key(ey[i], n);
    if (kx != ky) return kx < ky ? -1 : 1;
  }
  return 0;
}

Tableau::Tableau(int n_, std::vector<Column> cols) : n(n_), columns(std::move(cols)) {
  if (n < 1) throw Error("rank must be positive");
  for (std::size_t j = 0; j < columns.size(); ++j) {
    const Column& c = columns[j];
    const std::string where = "column " + std::to_string(j + 1);
    if (c.n() != n) throw Error(where + " has rank " + std::to_string(c.n()));
    if (c.height() == 0) throw Error(where + " is empty");
    if (c.is_spin() && j != 0) throw Error(where + ": a spin column must come first");
    if (j > 0 && c.height() > columns[j - 1].height()) {
      throw Error(where + " is taller than the column before it");
    }
  }
}

Tableau Tableau::trivial(const Shape& lambda) {
  std::vector<Column> cols;
  bool spin = lambda.has_spin();
  for (int h : lambda.heights()) {
    if (spin) {
      cols.emplace_back(SpinColumn::trivial(lambda.n));
      spin = false;
    } else {
      cols.emplace_back(AdmissibleColumn::complete(lambda.n, LetterSet::range(1, h), 0, {}));
    }
  }
  return Tableau(lambda.n, std::move(cols));
}

Shape Tableau::shape() const {
  Shape s = Shape::zero(n);
  for (const Column& c : columns) {
    if (c.is_spin()) {
      s.a[n - 1] += 1;
    } else if (c.height() == n) {
      s.a[n - 1] += 2;
    } else {
      s.a[c.height() - 1] += 1;
    }
  }
  return s;
}

bool operator<(const Tableau& x, const Tableau& y) {
  if (x.n != y.n) return x.n < y.n;
  const std::size_t m = std::min(x.columns.size(), y.columns.size());
  for (std::size_t j = 0; j < m; ++j) {
    int c = compare_columns(x.columns[j], y.columns[j]);
    if (c != 0) return c < 0;
  }
  return x.columns.size() < y.columns.size();
}

std::vector<Entry> SkewColumn::letters() const {
  std::vector<Entry> out;
  for (Entry e : cells) {
    if (e != kStar) out.push_back(e);
  }
  return out;
}

std::optional<Entry> SkewTableau::at(int row, int col) const {
  if (col < 1 || col > static_cast<int>(columns.size())) return std::nullopt;
  const SkewColumn& c = columns[col - 1];
  int i = row - c.skip - 1;
  if (i < 0 || i >= static_cast<int>(c.cells.size())) return std::nullopt;
  return c.cells[i];
}

std::optional<Entry> SkewTableau::letter_at(int row, int col) const {
  auto e = at(row, col);
  if (e && *e == kStar) return std::nullopt;
  return e;
}

std::vector<Box> SkewTableau::stars() const {
  std::vector<Box> out;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    const SkewColumn& c = columns[j];
    for (std::size_t i = 0; i < c.cells.size(); ++i) {
      if (c.cells[i] == kStar) out.push_back(Box{c.skip + 1 + static_cast<int>(i), static_cast<int>(j) + 1});
    }
  }
  return out;
}

int SkewTableau::max_height() const {
  int h = 0;
  for (const SkewColumn& c : columns) h = std::max(h, c.height());
  return h;
}

SkewTableau to_skew(const Tableau& t) {
  SkewTableau s;
  s.n = t.n;
  for (const Column& c : t.columns) {
    s.columns.push_back(
        SkewColumn{c.is_spin() ? ColumnKind::spin : ColumnKind::admissible, 0, c.entries()});
  }
  return s;
}

Tableau to_tableau(const SkewTableau& s) {
  std::vector<Column> cols;
  bool ended = false;
  for (std::size_t j = 0; j < s.columns.size(); ++j) {
    const SkewColumn& c = s.columns[j];
    const std::string where = "column " + std::to_string(j + 1);
    if (c.cells.empty()) {
      ended = true;
      continue;
    }
    if (ended) throw Error(where + " follows an empty column");
    if (c.skip != 0) throw Error(where + " has removed boxes");
    if (c.kind == ColumnKind::spin_rotated) throw Error(where + " is a rotated spin column");
    for (Entry e : c.cells) {
      if (e == kStar) throw Error(where + " holds a star");
    }
    cols.push_back(Column::from_entries(s.n, c.cells, c.kind == ColumnKind::spin));
  }
  return Tableau(s.n, std::move(cols));
}

SkewTableau without_stars(const SkewTableau& s) {
  SkewTableau out = s;
  for (SkewColumn& c : out.columns) {
    // A leading star becomes a removed box, a trailing one leaves the shape.
    while (!c.cells.empty() && c.cells.front() == kStar) {
      c.cells.erase(c.cells.begin());
      ++c.skip;
    }
    while (!c.cells.empty() && c.cells.back() == kStar) c.cells.pop_back();
    for (Entry e : c.cells) {
      if (e == kStar) throw Error("star strictly inside a column");
    }
  }
  return out;
}

void validate_skew(const SkewTableau& s, bool two_letter) {
  if (s.n < 1) throw Error("rank must be positive");
  int prev_removed = INT_MAX;
  int prev_outer = INT_MAX;
  for (std::size_t j = 0; j < s.columns.size(); ++j) {
    const SkewColumn& c = s.columns[j];
    const int col = static_cast<int>(j) + 1;
    const std::string where = "column " + std::to_string(col);
    if (c.skip < 0) throw Error(where + ": negative skip");
    auto letters = c.letters();
    if (two_letter && c.kind != ColumnKind::admissible) {
      throw Error(where + ": two-letter columns have no spin kind");
    }
    if (c.kind == ColumnKind::admissible) {
      EntrySplit sp = split_entries(letters, s.n);
      if (two_letter && sp.zeros) throw Error(where + ": 0 in a two-letter column");
      AdmissibleColumn::complete(s.n, sp.up, sp.zeros, sp.down);
    } else {
      if (j != 0 && c.kind == ColumnKind::spin) throw Error(where + ": spin column must be first");
      if (j + 1 != s.columns.size() && c.kind == ColumnKind::spin_rotated) {
        throw Error(where + ": rotated spin column must be last");
      }
      check_spin_letters(letters, s.n, col);
      if (c.height() > s.n) throw Error(where + ": spin column taller than n");
    }
    int removed = c.skip;
    int outer = c.height();
    if (c.cells.size() == 1 && c.cells.front() == kStar) {
      // A lone star is either the next removed box or an exited one.
      if (c.skip + 1 > prev_removed) --outer;
      else ++removed;
    } else {
      if (!c.cells.empty() && c.cells.front() == kStar) ++removed;
      if (!c.cells.empty() && c.cells.back() == kStar) --outer;
    }
    if (removed > prev_removed) throw Error(where + ": removed region is not a Young diagram");
    if (outer > prev_outer) throw Error(where + ": outer shape is not a Young diagram");
    prev_removed = removed;
    prev_outer = outer;
  }
}

std::vector<TwoLetterColumn> dble(const Tableau& t) {
  std::vector<TwoLetterColumn> out;
  for (const Column& c : t.columns) {
    auto [l, r] = c.dble();
    out.push_back(l);
    out.push_back(r);
  }
  return out;
}

SkewTableau dble(const SkewTableau& s) {
  SkewTableau out;
  out.n = s.n;
  const int n = s.n;
  for (const SkewColumn& c : s.columns) {
    auto letters = c.letters();
    auto rows = letter_rows(c);
    std::vector<Entry> left, right;
    switch (c.kind) {
      case ColumnKind::admissible: {
        auto [l, r] = double_column(AdmissibleColumn::from_entries(n, letters));
        left = l.entries();
        right = r.entries();
        break;
      }
      case ColumnKind::spin:
        left.assign(rows.begin(), rows.end());
        right = letters;
        break;
      case ColumnKind::spin_rotated:
        left = letters;
        for (int r : rows) right.push_back(-(n + 1 - r));
        break;
    }
    out.columns.push_back(refill(c, left, ColumnKind::admissible));
    out.columns.push_back(refill(c, right, ColumnKind::admissible));
  }
  return out;
}

SkewTableau undouble(const SkewTableau& two, const std::vector<ColumnKind>& kinds) {
  if (two.columns.size() != 2 * kinds.size()) throw Error("undouble: column count mismatch");
  const int n = two.n;
  SkewTableau out;
  out.n = n;
  for (std::size_t k = 0; k < kinds.size(); ++k) {
    const SkewColumn& L = two.columns[2 * k];
    const SkewColumn& R = two.columns[2 * k + 1];
    const std::string where = "columns " + std::to_string(2 * k + 1) + "," + std::to_string(2 * k + 2);
    if (!stars_match(L, R)) throw NotAdmissible(where + " are not aligned as a double");
    auto ll = L.letters();
    auto rl = R.letters();
    auto rows = letter_rows(L);
    std::vector<Entry> letters;
    switch (kinds[k]) {
      case ColumnKind::admissible: {
        EntrySplit left = split_entries(ll, n);
        EntrySplit right = split_entries(rl, n);
        if (left.zeros || right.zeros) throw NotAdmissible(where + " contain 0");
        int o = left.up.size() - right.up.size();
        if (o < 0) throw NotAdmissible(where + " are not a double");
        AdmissibleColumn col = AdmissibleColumn::from_coadmissible(n, right.up, o, left.down);
        auto [dl, dr] = double_column(col);
        if (dl != TwoLetterColumn{n, left.up, left.down} ||
            dr != TwoLetterColumn{n, right.up, right.down}) {
          throw NotAdmissible(where + " are not the double of an admissible column");
        }
        letters = col.entries();
        break;
      }
      case ColumnKind::spin:
        for (std::size_t i = 0; i < rows.size(); ++i) {
          if (ll[i] != rows[i]) throw NotAdmissible(where + ": left half of a spin column is not trivial");
        }
        check_spin_letters(rl, n, static_cast<int>(k) + 1);
        letters = rl;
        break;
      case ColumnKind::spin_rotated:
        for (std::size_t i = 0; i < rows.size(); ++i) {
          if (rl[i] != -(n + 1 - rows[i])) {
            throw NotAdmissible(where + ": right half of a rotated spin column is not trivial");
          }
        }
        check_spin_letters(ll, n, static_cast<int>(k) + 1);
        letters = ll;
        break;
    }
    out.columns.push_back(refill(L, letters, kinds[k]));
  }
  return out;
}

bool is_sl_semistandard(const SkewTableau& two) {
  const int n = two.n;
  for (const SkewColumn& c : two.columns) {
    auto l = c.letters();
    for (std::size_t i = 1; i < l.size(); ++i) {
      if (!entry_less(l[i - 1], l[i], n)) return false;
    }
  }
  for (std::size_t j = 0; j + 1 < two.columns.size(); ++j) {
    const int col = static_cast<int>(j) + 1;
    const SkewColumn& c = two.columns[j];
    for (int row = c.skip + 1; row <= c.height(); ++row) {
      auto x = two.letter_at(row, col);
      auto y = two.letter_at(row, col + 1);
      if (x && y && entry_less(*y, *x, n)) return false;
    }
  }
  return true;
}

bool is_semistandard(const Tableau& t) {
  const int n = t.n;
  auto cols = dble(t);
  std::vector<std::vector<Entry>> e;
  for (const auto& c : cols) e.push_back(c.entries());
  for (std::size_t j = 0; j + 1 < e.size(); ++j) {
    for (std::size_t i = 0; i < e[j + 1].size() && i < e[j].size(); ++i) {
      if (entry_less(e[j + 1][i], e[j][i], n)) return false;
    }
  }
  return true;
}

bool is_semistandard(const SkewTableau& s) {
  try {
    validate_skew(s);
  } catch (const Error&) {
    return false;
  }
  return is_sl_semistandard(dble(s));
}

std::set<int> nqs_levels(const Tableau& t) {
  std::set<int> out;
  if (t.empty()) return out;
  const int n = t.n;
  auto first = t.columns.front().entries();
  std::vector<std::vector<Entry>> d;
  for (const auto& c : dble(t)) d.push_back(c.entries());
  std::set<int> heights;
  for (const Column& c : t.columns) heights.insert(c.height());

  for (int s = 1; s <= static_cast<int>(first.size()); ++s) {
    if (first[s - 1] != s) break;  // trivial top fails for every larger s too
    if (!heights.count(s)) continue;
    bool ok = true;
    for (std::size_t j = 0; ok && j + 1 < d.size(); ++j) {
      if (static_cast<int>(d[j].size()) > s && static_cast<int>(d[j + 1].size()) >= s) {
        ok = order_key(d[j][s], n) > order_key(d[j + 1][s - 1], n);
      }
    }
    if (ok) out.insert(s);
  }
  return out;
}

bool is_quasistandard(const Tableau& t) { return nqs_levels(t).empty(); }

SkewTableau sigma(const SkewTableau& s, int height) {
  const int h = height == 0 ? s.max_height() : height;
  if (h < s.max_height()) throw Error("sigma: rectangle shorter than the tableau");
  SkewTableau out;
  out.n = s.n;
  for (auto it = s.columns.rbegin(); it != s.columns.rend(); ++it) {
    SkewColumn c;
    switch (it->kind) {
      case ColumnKind::admissible: c.kind = ColumnKind::admissible; break;
      case ColumnKind::spin: c.kind = ColumnKind::spin_rotated; break;
      case ColumnKind::spin_rotated: c.kind = ColumnKind::spin; break;
    }
    c.skip = h - it->height();
    for (auto e = it->cells.rbegin(); e != it->cells.rend(); ++e) {
      c.cells.push_back(*e == kStar ? kStar : -*e);
    }
    out.columns.push_back(std::move(c));
  }
  return out;
}

SkewTableau sigma(const Tableau& t) { return sigma(to_skew(t)); }

Weight weight_of(const Tableau& t) {
  Weight w = Weight::zero(t.n);
  for (const Column& c : t.columns) {
    const int unit = c.is_spin() ? 1 : 2;
    for (Entry e : c.entries()) {
      if (e > 0) w.twice[e - 1] += unit;
      if (e < 0) w.twice[-e - 1] -= unit;
    }
  }
  return w;
}

}  // namespace ortab
