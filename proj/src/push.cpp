#include "ortab/push.hpp"

#include <algorithm>

namespace ortab {

namespace {

Tableau without_first_column(const Tableau& t) {
  return Tableau(t.n, std::vector<Column>(t.columns.begin() + 1, t.columns.end()));
}

// Fills every removed top box (i, j) with i.
SkewTableau fill_trivial_tops(SkewTableau s) {
  for (SkewColumn& c : s.columns) {
    if (c.skip == 0) continue;
    std::vector<Entry> top;
    for (int i = 1; i <= c.skip; ++i) top.push_back(i);
    c.cells.insert(c.cells.begin(), top.begin(), top.end());
    c.skip = 0;
  }
  return s;
}

}  // namespace

Tableau strip_and_slide(const Tableau& t, int s, PushTrace* trace) {
  if (!nqs_levels(t).count(s)) {
    throw Error("strip_and_slide: " + std::to_string(s) + " is not an NQS level");
  }
  const int block = trace && !trace->passes.empty() ? trace->passes.back().block : 0;
  if (t.columns.front().is_spin() && s == t.n) {
    Tableau out = without_first_column(t);
    if (trace) trace->passes.push_back(PushPass{block, s, true, {}, {}, out});
    return out;
  }
  SkewTableau sk = to_skew(t);
  SkewColumn& first = sk.columns.front();
  first.cells.erase(first.cells.begin(), first.cells.begin() + s);
  first.skip = s;
  sk = place_star(sk, Box{s, 1});

  PushPass pass{block, s, false, sk, {}, Tableau(t.n)};
  SkewTableau slid = drop_exited_star(ojdt_slide(sk, trace ? &pass.trace : nullptr));
  if (slid.columns.front().skip != s - 1) throw Error("strip_and_slide: first column moved");
  Tableau out = to_tableau(fill_trivial_tops(slid));
  if (trace) {
    pass.result = out;
    trace->passes.push_back(std::move(pass));
  }
  return out;
}

Tableau remove_column(const Tableau& t, int s, PushTrace* trace) {
  if (!nqs_levels(t).count(s)) {
    throw Error("remove_column: " + std::to_string(s) + " is not an NQS level");
  }
  if (t.columns.front().is_spin() && s == t.n) return strip_and_slide(t, s, trace);
  Tableau cur = t;
  for (int level = s; level >= 1; --level) cur = strip_and_slide(cur, level, trace);
  return cur;
}

Tableau push(const Tableau& t, PushTrace* trace) {
  Tableau cur = t;
  int block = 0;
  while (true) {
    auto levels = nqs_levels(cur);
    if (levels.empty()) return cur;
    if (trace) {
      // Tag the next passes with a fresh block index.
      PushTrace local;
      cur = remove_column(cur, *levels.rbegin(), &local);
      for (PushPass& p : local.passes) {
        p.block = block;
        trace->passes.push_back(std::move(p));
      }
    } else {
      cur = remove_column(cur, *levels.rbegin());
    }
    ++block;
  }
}

Tableau unpush(const Tableau& u, const Shape& lambda) {
  const int n = lambda.n;
  if (u.n != n) throw Error("unpush: rank mismatch");
  if (!shape_leq(u.shape(), lambda)) {
    throw Error("unpush: shape " + u.shape().to_string() + " is not below " + lambda.to_string());
  }
  // push drops a trivial spin column whole, so it is put back whole.
  if (lambda.has_spin() && (u.empty() || !u.columns.front().is_spin())) {
    Tableau rest = unpush(u, remove_height(lambda, n, HeightNRemoval::spin));
    std::vector<Column> cols{Column(SpinColumn::trivial(n))};
    cols.insert(cols.end(), rest.columns.begin(), rest.columns.end());
    return Tableau(n, std::move(cols));
  }
  // Blocks remove columns tallest first, so they are undone shortest first.
  std::vector<int> missing = lambda.heights();
  for (int h : u.shape().heights()) {
    auto it = std::find(missing.begin(), missing.end(), h);
    if (it == missing.end()) throw Error("unpush: shape mismatch");
    missing.erase(it);
  }
  std::sort(missing.begin(), missing.end());

  SkewTableau w = to_skew(u);
  for (int s : missing) {
    if (w.columns.empty()) w.columns.push_back(SkewColumn{});
    // Undo the strips at levels 1, ..., s: each slides a star back from the
    // end of row k into (k,1), whose rows above are already emptied.
    for (int k = 1; k <= s; ++k) {
      int c = 0;
      while (c < static_cast<int>(w.columns.size()) && w.columns[c].height() >= k) ++c;
      if (c == 0) {
        // Row k is empty: the forward star left straight from (k,1).
        w.columns.front().skip = k;
        continue;
      }
      if (c == static_cast<int>(w.columns.size())) w.columns.push_back(SkewColumn{});
      SkewColumn& col = w.columns[c];
      if (col.height() != k - 1) throw Error("unpush: row " + std::to_string(k) + " cannot grow");
      col.cells.push_back(kStar);
      w = ojdt_inverse_slide(w);
      SkewColumn& first = w.columns.front();
      if (first.skip != k - 1 || first.cells.empty() || first.cells.front() != kStar) {
        throw Error("unpush: star did not return to the first column");
      }
      first.cells.erase(first.cells.begin());
      first.skip = k;
    }
    w = fill_trivial_tops(w);
  }

  Tableau t = to_tableau(w);
  if (t.shape() != lambda) throw Error("unpush: result has shape " + t.shape().to_string());
  return t;
}

}  // namespace ortab
