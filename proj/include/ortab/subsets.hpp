#pragma once

// Finite subsets of [1,63] and the extremal left/right-side maps γ and δ.
//
// For J = {y_1 < ... < y_s} ⊆ X, L(J) is the family of I = {x_1 < ... < x_s}
// in X \ J with x_i < y_i; R(I) is the mirror family. γ(J) is the
// elementwise-largest member of L(J) and δ(I) the elementwise-smallest member
// of R(I). Both maps take the ambient set X directly.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace ortab {

class LetterSet {
 public:
  static constexpr int kMaxLetter = 63;

  LetterSet() = default;
  LetterSet(std::initializer_list<int> xs);
  explicit LetterSet(const std::vector<int>& xs);

  static LetterSet range(int lo, int hi);  // [lo, hi], empty if lo > hi
  static LetterSet from_mask(std::uint64_t m) { return LetterSet(m, 0); }

  std::uint64_t mask() const { return bits_; }
  bool contains(int x) const;
  void insert(int x);
  void erase(int x);
  int size() const;
  bool empty() const { return bits_ == 0; }
  int min() const;  // requires non-empty
  int max() const;
  bool subset_of(LetterSet other) const { return (bits_ & ~other.bits_) == 0; }
  std::vector<int> elems() const;
  // The k largest elements (all of them if fewer than k).
  LetterSet largest(int k) const;
  std::string to_string() const;  // "{1,5}"

  friend LetterSet operator|(LetterSet a, LetterSet b) { return LetterSet(a.bits_ | b.bits_, 0); }
  friend LetterSet operator&(LetterSet a, LetterSet b) { return LetterSet(a.bits_ & b.bits_, 0); }
  friend LetterSet operator-(LetterSet a, LetterSet b) { return LetterSet(a.bits_ & ~b.bits_, 0); }
  friend LetterSet operator^(LetterSet a, LetterSet b) { return LetterSet(a.bits_ ^ b.bits_, 0); }
  friend bool operator==(LetterSet a, LetterSet b) = default;
  friend auto operator<=>(LetterSet a, LetterSet b) = default;

 private:
  LetterSet(std::uint64_t m, int) : bits_(m) {}
  std::uint64_t bits_ = 0;
};

bool is_left_side(LetterSet X, LetterSet I, LetterSet J);
bool is_right_side(LetterSet X, LetterSet I, LetterSet J);

std::optional<LetterSet> left_gamma(LetterSet X, LetterSet J);
std::optional<LetterSet> right_delta(LetterSet X, LetterSet I);

}  // namespace ortab
