// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <future>
#include <set>
#include <string>
#include <vector>

#include "ortab/enumeration.hpp"
#include "ortab/io.hpp"
#include "ortab/jdt.hpp"
#include "ortab/push.hpp"

using namespace ortab;

namespace {

// Wall-clock budgets, in seconds.
constexpr double kGoldenBudget = 1.0;
constexpr double kGridBudget = 300.0;
constexpr double kSubsetBudget = 60.0;

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void report(const char* id, const char* what, const std::function<Outcome()>& body, double budget = 0) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = Outcome{false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget > 0 && secs > budget) {
    o.ok = false;
    o.detail += " over budget (" + std::to_string(budget) + " s)";
  }
  if (!o.ok) ++failures;
  std::printf("%s %s  %s  [%.3f s]%s%s\n", id, o.ok ? "PASS" : "FAIL", what, secs,
              o.detail.empty() ? "" : "  ", o.detail.c_str());
  std::fflush(stdout);
}

std::vector<Shape> grid() {
  std::vector<Shape> out = shapes_up_to(2, 4);
  for (const Shape& s : shapes_up_to(3, 2)) out.push_back(s);
  return out;
}

template <class T, class F>
std::vector<T> parallel_map(const std::vector<Shape>& shapes, F f) {
  std::vector<std::future<T>> jobs;
  for (const Shape& s : shapes) jobs.push_back(std::async(std::launch::async, f, s));
  std::vector<T> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

SkewTableau two(int n, std::vector<std::pair<int, std::vector<Entry>>> cols) {
  SkewTableau t;
  t.n = n;
  for (auto& [skip, cells] : cols) t.columns.push_back(SkewColumn{ColumnKind::admissible, skip, cells});
  return t;
}

Outcome a1() {
  const Tableau t = parse_tableau("n 5\ncol 1 2 0 -2\ncol 1 3 -1\ncol 2 0");
  const Tableau u = parse_tableau("n 5\ncol 1 3 0 -2\ncol 2 0 -1");
  const std::vector<std::vector<Entry>> printed = {
      {1, 2, 5, -3}, {1, 3, -5, -2}, {1, 3, -2}, {2, 3, -1}, {2, 5}, {2, -5}};
  std::vector<std::vector<Entry>> d;
  for (const auto& c : dble(t)) d.push_back(c.entries());
  if (d != printed) return {false, "dble(T) differs"};
  const Tableau p = push(t);
  if (p != u) return {false, "push(T) = " + format_tableau(p)};
  const Tableau back = unpush(u, Shape::parse("0,1,1,1,0"));
  if (back != t) return {false, "unpush(U) = " + format_tableau(back)};
  return {};
}

Outcome a2() {
  const LecouveyColumn cl{3, {3}, 1, {3}};
  const LecouveyData d = lecouvey_data(cl);
  if (d.I != LetterSet{2} || d.K != LetterSet{1}) return {false, "I or K differs"};
  const AdmissibleColumn phi = lecouvey_phi(cl);
  if (phi.entries() != std::vector<Entry>{2, 0, -2}) return {false, "Φ differs"};
  const ColumnPair split = lecouvey_split(cl);
  if (split != double_column(phi)) return {false, "split differs from the double"};
  if (split.first.entries() != std::vector<Entry>{1, 2, -3} ||
      split.second.entries() != std::vector<Entry>{3, -2, -1}) {
    return {false, "split differs from the printed columns"};
  }
  return {};
}

Outcome a3() {
  auto rows = parallel_map<std::pair<std::uint64_t, std::uint64_t>>(grid(), [](const Shape& s) {
    return std::make_pair(count_tableaux(s), weyl_dim(s));
  });
  const auto shapes = grid();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].first != rows[i].second) {
      return {false, shapes[i].to_string() + ": " + std::to_string(rows[i].first) + " tableaux, dim " +
                         std::to_string(rows[i].second)};
    }
  }
  return {true, std::to_string(rows.size()) + " shapes"};
}

Outcome a4() {
  const auto shapes = grid();
  auto reports = parallel_map<VerifyReport>(shapes, verify_shape);
  std::uint64_t total = 0;
  Outcome o;
  for (const VerifyReport& r : reports) {
    total += r.ss_count;
    if (!r.ok() && o.ok) {
      o.ok = false;
      o.detail = "\n" + r.to_text();
    }
  }
  if (o.ok) o.detail = std::to_string(total) + " tableaux";
  return o;
}

Outcome a5() {
  const SkewTableau t = parse_skew("n 3\ncol skip=1 * 3\ncol 1 0 -3");
  SlideTrace tr;
  const SkewTableau out = ojdt_slide(t, &tr);
  if (out != parse_skew("n 3\ncol skip=1 3 0\ncol 1 -3 *")) return {false, "final " + format_skew(out)};
  constexpr Entry S = kStar;
  const std::vector<SkewTableau> printed = {
      two(3, {{1, {S, 3}}, {1, {2, 3}}, {0, {1, S, -3}}, {0, {1, -3, -2}}}),
      two(3, {{1, {S, 3}}, {1, {2, 3}}, {0, {1, -3, S}}, {0, {1, -3, -2}}}),
      two(3, {{1, {S, 3}}, {1, {2, 3}}, {0, {1, -3, -2}}, {0, {1, -3, S}}}),
      two(3, {{1, {2, 3}}, {1, {S, 3}}, {0, {1, -3, -2}}, {0, {1, -3, S}}}),
      two(3, {{1, {2, 3}}, {1, {3, S}}, {0, {1, -3, -2}}, {0, {1, -3, S}}}),
      two(3, {{1, {2, 3}}, {1, {3, -2}}, {0, {1, -3, S}}, {0, {1, -3, S}}}),
  };
  std::vector<SkewTableau> moves;
  for (const auto& st : tr.steps) {
    if (st.kind != MoveKind::exit) moves.push_back(st.after);
  }
  if (moves != printed) return {false, "double trace differs"};
  return {};
}

struct HsCount {
  std::uint64_t instances = 0;
  std::uint64_t mismatches = 0;
  std::string first;
};

HsCount hs_for_shape(const Shape& s) {
  HsCount c;
  for_each_tableau(s, false, [&](const Tableau& t) {
    PushTrace tr;
    push(t, &tr);
    for (const PushPass& p : tr.passes) {
      if (p.spin_dropped || !satisfies_hs(p.slid)) continue;
      ++c.instances;
      SlideTrace direct;
      bool same = false;
      try {
        same = ojdt_direct_slide(p.slid, &direct) == ojdt_slide(p.slid);
        const int row = p.slid.stars().front().row;
        for (const SlideStep& st : direct.steps) same = same && st.star.row == row;
      } catch (const Error&) {
        same = false;
      }
      if (!same && c.mismatches++ == 0) c.first = format_skew(p.slid);
    }
  });
  return c;
}

Outcome a6() {
  auto counts = parallel_map<HsCount>(grid(), hs_for_shape);
  std::uint64_t inst = 0, bad = 0;
  std::string first;
  for (const HsCount& c : counts) {
    inst += c.instances;
    bad += c.mismatches;
    if (first.empty()) first = c.first;
  }
  if (inst == 0) return {false, "no HS instances"};
  if (bad) return {false, std::to_string(bad) + " of " + std::to_string(inst) + " differ, first:\n" + first};
  return {true, std::to_string(inst) + " HS slides"};
}

Outcome a7() {
  auto bad = parallel_map<std::uint64_t>(grid(), [](const Shape& s) {
    std::uint64_t k = 0;
    const int h = s.heights().empty() ? 0 : s.heights().front();
    for_each_tableau(s, false, [&](const Tableau& t) {
      const SkewTableau st = sigma(t);
      if (sigma(st, h) != to_skew(t) || dble(st) != sigma(dble(to_skew(t)), h)) ++k;
    });
    return k;
  });
  std::uint64_t total = 0;
  for (auto k : bad) total += k;
  if (total) return {false, std::to_string(total) + " tableaux fail"};
  return {};
}

// Independent left-side test on sorted vectors.
bool left_of(const std::vector<int>& I, const std::vector<int>& J) {
  if (I.size() != J.size()) return false;
  for (std::size_t i = 0; i < I.size(); ++i) {
    if (I[i] >= J[i]) return false;
  }
  return true;
}

std::vector<int> bits(unsigned m) {
  std::vector<int> out;
  for (int i = 1; i <= 8; ++i) {
    if (m >> (i - 1) & 1u) out.push_back(i);
  }
  return out;
}

LetterSet set_of(unsigned m) { return LetterSet::from_mask(static_cast<std::uint64_t>(m) << 1); }

Outcome a8() {
  // L({2,6}) and L({1,3}) in [1,10].
  const LetterSet ten = LetterSet::range(1, 10);
  if (left_gamma(ten, {2, 6}) != LetterSet{1, 5}) return {false, "γ({2,6}) differs"};
  if (left_gamma(ten, {1, 3}).has_value()) return {false, "L({1,3}) should be empty"};

  std::uint64_t checked = 0;
  for (unsigned x = 0; x < 256; ++x) {
    for (unsigned j = x;; j = (j - 1) & x) {
      // Elementwise max of L(J) and min of R(J), by brute force over subsets of X \ J.
      const unsigned rest = x & ~j;
      std::vector<int> gmax, dmin;
      bool any_l = false, any_r = false;
      const auto jv = bits(j);
      for (unsigned i = rest;; i = (i - 1) & rest) {
        const auto iv = bits(i);
        if (left_of(iv, jv)) {
          if (!any_l) gmax = iv;
          for (std::size_t k = 0; k < iv.size(); ++k) gmax[k] = std::max(gmax[k], iv[k]);
          any_l = true;
        }
        if (left_of(jv, iv)) {
          if (!any_r) dmin = iv;
          for (std::size_t k = 0; k < iv.size(); ++k) dmin[k] = std::min(dmin[k], iv[k]);
          any_r = true;
        }
        if (i == 0) break;
      }
      auto g = left_gamma(set_of(x), set_of(j));
      auto d = right_delta(set_of(x), set_of(j));
      if (g.has_value() != any_l || (any_l && g->elems() != gmax)) {
        return {false, "γ mismatch at X=" + set_of(x).to_string() + " J=" + set_of(j).to_string()};
      }
      if (d.has_value() != any_r || (any_r && d->elems() != dmin)) {
        return {false, "δ mismatch at X=" + set_of(x).to_string() + " I=" + set_of(j).to_string()};
      }
      ++checked;
      if (j == 0) break;
    }
  }
  return {true, std::to_string(checked) + " (X, J) pairs"};
}

Outcome a9() {
  for (int n = 1; n <= 5; ++n) {
    if (spin_columns(n).size() != (std::size_t{1} << n)) return {false, "enumeration at n=" + std::to_string(n)};
  }
  for (int n = 1; n <= 10; ++n) {
    std::vector<int> a(n, 0);
    a[n - 1] = 1;
    if (weyl_dim(Shape(n, a)) != (std::uint64_t{1} << n)) return {false, "formula at n=" + std::to_string(n)};
  }
  return {};
}

}  // namespace

int main() {
  report("A1", "push golden example", a1, kGoldenBudget);
  report("A2", "Lecouvey golden example", a2);
  report("A3", "dimension oracle", a3, kGridBudget);
  report("A4", "push bijection", a4, kGridBudget);
  report("A5", "diagonal-move golden trace", a5);
  report("A6", "direct moves equal the double slide", a6);
  report("A7", "σ compatibility", a7);
  report("A8", "subset oracle", a8, kSubsetBudget);
  report("A9", "spin column count", a9);
  return failures ? 1 : 0;
}
