#include "ortab/jdt.hpp"

namespace ortab {

namespace {

Entry& cell_ref(SkewTableau& t, Box b) {
  SkewColumn& c = t.columns[b.col - 1];
  return c.cells[b.row - c.skip - 1];
}

Box single_star(const SkewTableau& s) {
  auto stars = s.stars();
  if (stars.size() != 1) {
    throw Error("expected exactly one star, found " + std::to_string(stars.size()));
  }
  return stars.front();
}

void check_star_at(const SkewTableau& s, Box b) {
  auto e = s.at(b.row, b.col);
  if (!e || *e != kStar) {
    throw Error("no star at (" + std::to_string(b.row) + "," + std::to_string(b.col) + ")");
  }
}

void check_interior(const SkewTableau& s, Box b) {
  check_star_at(s, b);
  if (s.letter_at(b.row - 1, b.col) || s.letter_at(b.row, b.col - 1)) {
    throw Error("star at (" + std::to_string(b.row) + "," + std::to_string(b.col) +
                ") is not at an interior corner");
  }
}

// Rewrites the letter cells of `c` in order.
void set_letters(SkewColumn& c, const std::vector<Entry>& letters) {
  std::size_t k = 0;
  for (Entry& e : c.cells) {
    if (e == kStar) continue;
    if (k >= letters.size()) throw NotAdmissible("column lost a letter during a move");
    e = letters[k++];
  }
  if (k != letters.size()) throw NotAdmissible("column gained a letter during a move");
}

AdmissibleColumn column_of(const SkewColumn& c, int n) {
  return AdmissibleColumn::from_entries(n, c.letters());
}

// Letter of the left (A over C̄) or right (B over D̄) half of a two-letter
// column at `row`, the column's letters being read as a symplectic column.
std::optional<Entry> half_at(const SkewTableau& t, int row, int col, bool right_half) {
  if (!t.letter_at(row, col)) return std::nullopt;
  const SkewColumn& c = t.columns[col - 1];
  int idx = 0;
  for (int i = 0; i < row - c.skip - 1; ++i) {
    if (c.cells[i] != kStar) ++idx;
  }
  auto [l, r] = double_column(column_of(c, t.n));
  return (right_half ? r : l).entries()[idx];
}

// Star at `p` takes the place of the letter `alpha` from the next column.
void symplectic_horizontal(SkewTableau& t, Box p, Entry alpha) {
  const int n = t.n;
  SkewColumn& L = t.columns[p.col - 1];
  SkewColumn& R = t.columns[p.col];
  AdmissibleColumn lc = column_of(L, n);
  AdmissibleColumn rc = column_of(R, n);
  std::vector<Entry> new_left, new_right;
  if (alpha > 0) {
    if (lc.B().contains(alpha) || !rc.A().contains(alpha)) {
      throw NotAdmissible("letter " + std::to_string(alpha) + " cannot cross");
    }
    LetterSet b = lc.B();
    b.insert(alpha);
    new_left = AdmissibleColumn::from_coadmissible(n, b, 0, lc.C()).entries();
    new_right = AdmissibleColumn::complete(n, rc.A() - LetterSet{alpha}, 0, rc.D()).entries();
  } else {
    const int c = -alpha;
    if (lc.D().contains(c) || !rc.C().contains(c)) {
      throw NotAdmissible("letter " + std::to_string(alpha) + " cannot cross");
    }
    new_left = AdmissibleColumn::complete(n, lc.A(), 0, lc.D() | LetterSet{c}).entries();
    new_right = AdmissibleColumn::from_coadmissible(n, rc.B(), 0, rc.C() - LetterSet{c}).entries();
  }
  cell_ref(t, p) = alpha;
  cell_ref(t, Box{p.row, p.col + 1}) = kStar;
  set_letters(L, new_left);
  set_letters(R, new_right);
}

void swap_down(SkewTableau& t, Box p) {
  std::swap(cell_ref(t, p), cell_ref(t, Box{p.row + 1, p.col}));
}

void record(SlideTrace* trace, Box p, MoveKind k, const SkewTableau& t) {
  if (trace) trace->steps.push_back(SlideStep{p, k, t});
}

}  // namespace

const char* to_string(MoveKind k) {
  switch (k) {
    case MoveKind::right: return "right";
    case MoveKind::down: return "down";
    case MoveKind::exit: return "exit";
  }
  return "?";
}

SkewTableau sl_jdt(const SkewTableau& s, Box corner, const std::function<bool(Entry, Entry)>& less,
                   SlideTrace* trace) {
  check_interior(s, corner);
  SkewTableau t = s;
  Box p = corner;
  while (true) {
    auto right = t.letter_at(p.row, p.col + 1);
    auto below = t.letter_at(p.row + 1, p.col);
    if (!right && !below) {
      record(trace, p, MoveKind::exit, t);
      return t;
    }
    if (below && (!right || !less(*right, *below))) {
      swap_down(t, p);
      record(trace, p, MoveKind::down, t);
      ++p.row;
    } else {
      std::swap(cell_ref(t, p), cell_ref(t, Box{p.row, p.col + 1}));
      record(trace, p, MoveKind::right, t);
      ++p.col;
    }
  }
}

SkewTableau sjdt_slide(const SkewTableau& two, Box corner, SlideTrace* trace) {
  check_interior(two, corner);
  const int n = two.n;
  SkewTableau t = two;
  Box p = corner;
  while (true) {
    auto right = half_at(t, p.row, p.col + 1, false);
    auto below = half_at(t, p.row + 1, p.col, true);
    if (!right && !below) {
      record(trace, p, MoveKind::exit, t);
      return t;
    }
    if (below && (!right || order_key(*below, n) <= order_key(*right, n))) {
      swap_down(t, p);
      record(trace, p, MoveKind::down, t);
      ++p.row;
    } else {
      symplectic_horizontal(t, p, *right);
      record(trace, p, MoveKind::right, t);
      ++p.col;
    }
  }
}

SkewTableau ojdt_slide(const SkewTableau& s, SlideTrace* double_trace) {
  const Box b = single_star(s);
  check_interior(s, b);
  validate_skew(s);
  SkewTableau d = dble(s);
  if (!is_sl_semistandard(d)) throw Error("ojdt_slide: the skew filling is not semistandard");
  std::vector<ColumnKind> kinds;
  for (const SkewColumn& c : s.columns) kinds.push_back(c.kind);
  d = sjdt_slide(d, Box{b.row, 2 * b.col}, double_trace);
  d = sjdt_slide(d, Box{b.row, 2 * b.col - 1}, double_trace);
  return undouble(d, kinds);
}

bool satisfies_hs(const SkewTableau& s) {
  auto stars = s.stars();
  if (stars.size() != 1) return false;
  const Box b = stars.front();
  const int n = s.n;
  SkewTableau d = dble(s);
  for (int j = 1; j < static_cast<int>(d.columns.size()); ++j) {
    auto x = d.letter_at(b.row, j + 1);
    auto y = d.letter_at(b.row + 1, j);
    if (x && y && order_key(*x, n) >= order_key(*y, n)) return false;
  }
  int last = b.col;
  while (s.at(b.row, last + 1)) ++last;
  return !s.letter_at(b.row + 1, last);
}

namespace {

// One direct move, with HS assumed to hold for the slide this move belongs to.
DirectStep direct_move(const SkewTableau& s) {
  const Box p = single_star(s);
  const int n = s.n;
  const int r = p.row;
  auto right = s.letter_at(r, p.col + 1);
  if (!right) {
    if (s.letter_at(r + 1, p.col)) throw Error("ojdt_direct_step: vertical move under HS");
    return DirectStep{s, MoveKind::exit};
  }
  SkewTableau t = s;
  SkewColumn& L = t.columns[p.col - 1];
  SkewColumn& R = t.columns[p.col];
  if (R.kind != ColumnKind::admissible || L.kind == ColumnKind::spin_rotated) {
    throw Error("ojdt_direct_step: rotated spin columns are outside the direct rules");
  }
  const Entry x = *right;
  AdmissibleColumn rc = column_of(R, n);
  std::vector<Entry> new_left, new_right;

  if (L.kind == ColumnKind::spin) {
    // The entering letter e joins A; if ē was present it becomes r̄. A
    // zero entering (possible when the next column ends on row r) turns
    // into r̄ and leaves the next column as in Move 3.
    if (x < 0) throw NotAdmissible("spin column cannot receive a barred letter");
    EntrySplit sp = split_entries(L.letters(), n);
    LetterSet a = sp.up;
    LetterSet d = sp.down;
    if (x == 0) {
      d.insert(r);
      new_right = AdmissibleColumn::complete(n, rc.A(), rc.o() - 1, rc.D()).entries();
    } else {
      a.insert(x);
      if (d.contains(x)) {
        d = (d - LetterSet{x}) | LetterSet{r};
      } else if (x != r) {
        throw NotAdmissible("spin column cannot receive " + std::to_string(x));
      }
      new_right = AdmissibleColumn::complete(n, rc.A() - LetterSet{x}, rc.o(), rc.D()).entries();
    }
    if (!(a & d).empty()) throw NotAdmissible("spin column would hold a letter and its bar");
    new_left = column_entries(a, 0, d);
  } else {
    AdmissibleColumn lc = column_of(L, n);
    if (x > 0) {
      // Move 1
      LetterSet b = lc.B() | LetterSet{x};
      new_left = AdmissibleColumn::from_coadmissible(n, b, lc.o(), lc.C()).entries();
      new_right = AdmissibleColumn::complete(n, rc.A() - LetterSet{x}, rc.o(), rc.D()).entries();
    } else if (x == 0) {
      // Move 3
      new_left = AdmissibleColumn::complete(n, lc.A(), lc.o() + 1, lc.D()).entries();
      new_right = AdmissibleColumn::complete(n, rc.A(), rc.o() - 1, rc.D()).entries();
    } else {
      // Move 2: the letter crossing is the g-presentation entry of row r.
      int idx = 0;
      for (int i = 0; i < r - R.skip - 1; ++i) {
        if (R.cells[i] != kStar) ++idx;
      }
      const int c = -rc.g_entries()[idx];
      if (c <= 0) throw NotAdmissible("g-presentation entry is not barred");
      new_left = AdmissibleColumn::complete(n, lc.A(), lc.o(), lc.D() | LetterSet{c}).entries();
      new_right =
          AdmissibleColumn::from_coadmissible(n, rc.B(), rc.o(), rc.C() - LetterSet{c}).entries();
    }
  }
  cell_ref(t, p) = x;
  cell_ref(t, Box{r, p.col + 1}) = kStar;
  set_letters(L, new_left);
  set_letters(R, new_right);
  return DirectStep{t, MoveKind::right};
}

}  // namespace

DirectStep ojdt_direct_step(const SkewTableau& s) {
  if (!satisfies_hs(s)) throw Error("ojdt_direct_step: HS does not hold");
  return direct_move(s);
}

// HS is a hypothesis on the starting position only; the row condition it
// states need not survive the moves.
SkewTableau ojdt_direct_slide(const SkewTableau& s, SlideTrace* trace) {
  if (!satisfies_hs(s)) throw Error("ojdt_direct_slide: HS does not hold");
  SkewTableau t = s;
  while (true) {
    const Box p = single_star(t);
    DirectStep step = direct_move(t);
    record(trace, p, step.kind, step.tableau);
    if (step.kind == MoveKind::exit) return step.tableau;
    t = std::move(step.tableau);
  }
}

SkewTableau ojdt_inverse_slide(const SkewTableau& s, SlideTrace* double_trace) {
  const Box b = single_star(s);
  const SkewColumn& c = s.columns[b.col - 1];
  if (c.cells.back() != kStar) throw Error("ojdt_inverse_slide: star is not at the bottom of its column");
  if (s.letter_at(b.row, b.col + 1)) throw Error("ojdt_inverse_slide: star is not at an exterior corner");
  if (b.col > 1 && !s.letter_at(b.row, b.col - 1) && b.row > s.columns[b.col - 2].skip) {
    throw Error("ojdt_inverse_slide: star is not at an exterior corner");
  }
  bool any_letter = false;
  for (const SkewColumn& col : s.columns) any_letter = any_letter || !col.letters().empty();
  if (!any_letter) throw Error("ojdt_inverse_slide: nothing to slide");
  const int h = s.max_height();
  return sigma(ojdt_slide(sigma(s, h), double_trace), h);
}

SkewTableau drop_exited_star(const SkewTableau& s) {
  const Box b = single_star(s);
  SkewTableau t = s;
  SkewColumn& c = t.columns[b.col - 1];
  if (c.cells.back() != kStar) throw Error("drop_exited_star: star has not exited");
  c.cells.pop_back();
  return t;
}

SkewTableau place_star(const SkewTableau& s, Box corner) {
  if (corner.col < 1 || corner.col > static_cast<int>(s.columns.size())) {
    throw Error("place_star: no such column");
  }
  SkewTableau t = s;
  SkewColumn& c = t.columns[corner.col - 1];
  if (c.skip != corner.row) throw Error("place_star: box is not the last removed box of its column");
  --c.skip;
  c.cells.insert(c.cells.begin(), kStar);
  check_interior(t, corner);
  return t;
}

}  // namespace ortab
