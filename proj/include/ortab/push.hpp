#pragma once

// The map p = (ojdt)^max from SS^[λ] onto the quasistandard tableaux of
// shapes μ ≤ λ, and its inverse.

#include <vector>

#include "ortab/jdt.hpp"
#include "ortab/tableaux.hpp"

namespace ortab {

struct PushPass {
  int block = 0;      // index of the column-removal block
  int level = 0;      // s for this strip
  bool spin_dropped = false;  // a trivial spin column was removed whole
  SkewTableau slid;   // the stripped tableau with its star, before sliding
  SlideTrace trace;   // double-level steps of the slide
  Tableau result;     // after refilling
};

struct PushTrace {
  std::vector<PushPass> passes;
};

// Removes the top s boxes of the first column, slides the star at (s,1) and
// refills rows 1..s-1 with 1..s-1. A trivial spin column at s = n is dropped.
Tableau strip_and_slide(const Tableau& t, int s, PushTrace* trace = nullptr);
// strip_and_slide at levels s, s-1, ..., 1.
Tableau remove_column(const Tableau& t, int s, PushTrace* trace = nullptr);
Tableau push(const Tableau& t, PushTrace* trace = nullptr);
Tableau unpush(const Tableau& u, const Shape& lambda);

}  // namespace ortab
