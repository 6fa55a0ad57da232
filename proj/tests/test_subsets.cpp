#include "support.hpp"

#include <optional>

using namespace ortab;

namespace {

// All I ⊆ X \ J on the left side of J, by brute force.
std::vector<LetterSet> left_family(LetterSet X, LetterSet J) {
  std::vector<LetterSet> out;
  const LetterSet free = X - J;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << 9); ++m) {
    LetterSet I = LetterSet::from_mask(m << 1);
    if (!I.subset_of(free)) continue;
    if (is_left_side(X, I, J)) out.push_back(I);
  }
  return out;
}

}  // namespace

TEST_CASE("left side examples") {
  const LetterSet X = LetterSet::range(1, 10);
  CHECK(is_left_side(X, {1, 3}, {2, 6}));
  CHECK_FALSE(is_left_side(X, {1, 6}, {2, 6}));
  CHECK_FALSE(is_left_side(X, {3, 4}, {2, 6}));

  auto fam = left_family(X, {2, 6});
  CHECK(fam == std::vector<LetterSet>{{1, 3}, {1, 4}, {1, 5}});
  CHECK(left_gamma(X, {2, 6}) == LetterSet{1, 5});
  CHECK(left_gamma(X, {}) == LetterSet{});
  CHECK_FALSE(left_gamma(X, {1, 3}).has_value());
}

TEST_CASE("right side examples") {
  CHECK(right_delta({2, 3}, {2}) == LetterSet{3});
  CHECK(right_delta({2, 3}, {}) == LetterSet{});
  CHECK_FALSE(right_delta({1, 2}, {2}).has_value());
  CHECK_THROWS_AS(right_delta({1, 2}, {3}), Error);
}

TEST_CASE("gamma leaves no gap below the y_i") {
  // With I = γ(J): every t ∈ X \ (I∪J) with t < y_i also has t < x_i.
  const LetterSet X = LetterSet::range(1, 7);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << 7); ++m) {
    const LetterSet J = LetterSet::from_mask(m << 1);
    auto I = left_gamma(X, J);
    if (!I) continue;
    auto x = I->elems();
    auto y = J.elems();
    for (int t : (X - (*I | J)).elems()) {
      for (std::size_t i = 0; i < y.size(); ++i) {
        if (t < y[i]) CHECK(t < x[i]);
      }
    }
  }
}
