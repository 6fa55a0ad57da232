#pragma once

// Jeu de taquin slides.
//
// All slides take a skew tableau whose star is a cell of its column (see
// SkewColumn) and return the tableau with the star left behind as the last
// cell of the column it exited from. Callers drop it with drop_exited_star.

#include <functional>
#include <vector>

#include "ortab/tableaux.hpp"

namespace ortab {

enum class MoveKind { right, down, exit };

struct SlideStep {
  Box star;        // star position before the move
  MoveKind kind;
  SkewTableau after;
};

struct SlideTrace {
  std::vector<SlideStep> steps;
};

const char* to_string(MoveKind k);

// Plain jeu de taquin over integer letters ordered by `less`.
SkewTableau sl_jdt(const SkewTableau& s, Box corner,
                   const std::function<bool(Entry, Entry)>& less = std::less<Entry>(),
                   SlideTrace* trace = nullptr);

// Slide of the star at `corner` through a two-letter tableau. Other stars stay
// put and count as missing boxes. Horizontal moves rewrite both columns with
// the symplectic rule; vertical moves swap the star with the letter below.
SkewTableau sjdt_slide(const SkewTableau& two_letter, Box corner, SlideTrace* trace = nullptr);

// Orthogonal slide through the double: the right star of the doubled corner
// slides first, then the left one, and the result is undoubled.
SkewTableau ojdt_slide(const SkewTableau& s, SlideTrace* double_trace = nullptr);

// The horizontal-situation hypothesis for the star's row.
bool satisfies_hs(const SkewTableau& s);

struct DirectStep {
  SkewTableau tableau;
  MoveKind kind;
};

// One move of the star on the orthogonal tableau itself, valid under HS.
DirectStep ojdt_direct_step(const SkewTableau& s);
// Iterates ojdt_direct_step until the star exits.
SkewTableau ojdt_direct_slide(const SkewTableau& s, SlideTrace* trace = nullptr);

// σ ∘ ojdt ∘ σ inside the tableau's bounding rectangle; the star must sit at
// an exterior corner.
SkewTableau ojdt_inverse_slide(const SkewTableau& s, SlideTrace* double_trace = nullptr);

// Removes the single star, which must be the last cell of its column.
SkewTableau drop_exited_star(const SkewTableau& s);
// Turns the removed box at `corner` into the star cell.
SkewTableau place_star(const SkewTableau& s, Box corner);

}  // namespace ortab
