#include "ortab/subsets.hpp"

#include <algorithm>
#include <bit>

#include "ortab/core.hpp"

namespace ortab {

namespace {

void check_letter(int x) {
  if (x < 1 || x > LetterSet::kMaxLetter) {
    throw Error("letter " + std::to_string(x) + " outside [1," +
                std::to_string(LetterSet::kMaxLetter) + "]");
  }
}

std::uint64_t bit(int x) { return std::uint64_t{1} << x; }

bool side_check(LetterSet X, LetterSet I, LetterSet J, bool left) {
  if (!I.subset_of(X) || !J.subset_of(X)) throw Error("side check: I and J must lie in X");
  if (I.size() != J.size() || !(I & J).empty()) return false;
  auto xs = I.elems();
  auto ys = J.elems();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (left ? !(xs[i] < ys[i]) : !(ys[i] < xs[i])) return false;
  }
  return true;
}

}  // namespace

LetterSet::LetterSet(std::initializer_list<int> xs) {
  for (int x : xs) insert(x);
}

LetterSet::LetterSet(const std::vector<int>& xs) {
  for (int x : xs) insert(x);
}

LetterSet LetterSet::range(int lo, int hi) {
  LetterSet s;
  for (int x = lo; x <= hi; ++x) s.insert(x);
  return s;
}

bool LetterSet::contains(int x) const { return x >= 1 && x <= kMaxLetter && (bits_ & bit(x)); }

void LetterSet::insert(int x) {
  check_letter(x);
  bits_ |= bit(x);
}

void LetterSet::erase(int x) {
  check_letter(x);
  bits_ &= ~bit(x);
}

int LetterSet::size() const { return std::popcount(bits_); }

int LetterSet::min() const {
  if (empty()) throw Error("min of empty set");
  return std::countr_zero(bits_);
}

int LetterSet::max() const {
  if (empty()) throw Error("max of empty set");
  return 63 - std::countl_zero(bits_);
}

std::vector<int> LetterSet::elems() const {
  std::vector<int> out;
  for (std::uint64_t m = bits_; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

LetterSet LetterSet::largest(int k) const {
  LetterSet out;
  std::uint64_t m = bits_;
  for (int i = 0; i < k && m; ++i) {
    int top = 63 - std::countl_zero(m);
    out.bits_ |= bit(top);
    m &= ~bit(top);
  }
  return out;
}

std::string LetterSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int x : elems()) {
    if (!first) out += ',';
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

bool is_left_side(LetterSet X, LetterSet I, LetterSet J) { return side_check(X, I, J, true); }
bool is_right_side(LetterSet X, LetterSet I, LetterSet J) { return side_check(X, I, J, false); }

std::optional<LetterSet> left_gamma(LetterSet X, LetterSet J) {
  if (!J.subset_of(X)) throw Error("left_gamma: J must lie in X");
  const LetterSet free = X - J;
  auto ys = J.elems();
  LetterSet out;
  // Downward induction: x_s below y_s, then each x_i below both x_{i+1} and y_i.
  int bound = LetterSet::kMaxLetter + 1;
  for (int i = static_cast<int>(ys.size()) - 1; i >= 0; --i) {
    bound = std::min(bound, ys[i]);
    LetterSet below = free & LetterSet::range(1, bound - 1);
    if (below.empty()) return std::nullopt;
    bound = below.max();
    out.insert(bound);
  }
  return out;
}

std::optional<LetterSet> right_delta(LetterSet X, LetterSet I) {
  if (!I.subset_of(X)) throw Error("right_delta: I must lie in X");
  const LetterSet free = X - I;
  LetterSet out;
  int bound = 0;
  for (int x : I.elems()) {
    bound = std::max(bound, x);
    LetterSet above = free & LetterSet::range(bound + 1, LetterSet::kMaxLetter);
    if (above.empty()) return std::nullopt;
    bound = above.min();
    out.insert(bound);
  }
  return out;
}

}  // namespace ortab
