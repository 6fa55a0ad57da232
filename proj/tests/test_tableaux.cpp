#include "support.hpp"

#include "ortab/enumeration.hpp"

using namespace ortab;
using testing::skew;
using testing::tab;

TEST_CASE("dble of the rank 5 push example") {
  auto d = testing::columns_of(dble(tab(testing::kPushT)));
  std::vector<std::vector<Entry>> expected = {
      {1, 2, 5, -3}, {1, 3, -5, -2}, {1, 3, -2}, {2, 3, -1}, {2, 5}, {2, -5}};
  CHECK(d == expected);
  CHECK(dble(Tableau(2)).empty());
  CHECK(testing::columns_of(dble(tab("n 2\ncol sp 1 -2"))) ==
        std::vector<std::vector<Entry>>{{1, 2}, {1, -2}});
}

TEST_CASE("is_semistandard") {
  CHECK(is_semistandard(tab(testing::kPushT)));
  CHECK_FALSE(is_semistandard(tab("n 2\ncol 2\ncol 1")));
  CHECK(is_semistandard(tab("n 3\ncol 1 2 -2")));
}

TEST_CASE("NQS levels") {
  CHECK(nqs_levels(tab(testing::kPushT)) == std::set<int>{2});
  CHECK(nqs_levels(tab(testing::kPushU)).empty());
  CHECK(is_quasistandard(tab(testing::kPushU)));
  CHECK(nqs_levels(tab("n 2\ncol 1 2")) == std::set<int>{2});
  CHECK(nqs_levels(Tableau(3)).empty());
}

TEST_CASE("Tableau rejects malformed column lists") {
  CHECK_THROWS_AS(tab("n 2\ncol 1\ncol 1 2"), Error);
  CHECK_THROWS_AS(tab("n 2\ncol 1 2\ncol sp 1 2"), Error);
  CHECK_THROWS_AS(tab("n 2\ncol 1 1"), Error);
}

TEST_CASE("σ of the rank 4 example") {
  auto t = skew("n 4\ncol skip=2 0 -1\ncol 1 3 -1\ncol 2 0");
  CHECK(sigma(t) == skew("n 4\ncol skip=2 0 -2\ncol skip=1 1 -3 -1\ncol 1 0"));
  CHECK(sigma(sigma(t), 4) == t);
  CHECK(sigma(tab("n 2\ncol 1")) == skew("n 2\ncol -1"));
}

TEST_CASE("σ properties over small shapes") {
  for (int n = 1; n <= 3; ++n) {
    for (const Shape& lambda : shapes_up_to(n, 3)) {
      for_each_tableau(lambda, false, [&](const Tableau& t) {
        const int h = lambda.heights().empty() ? 0 : lambda.heights().front();
        SkewTableau s = sigma(t);
        CHECK(sigma(s, h) == to_skew(t));
        CHECK(dble(s) == sigma(dble(to_skew(t)), h));
        CHECK(is_semistandard(s));
      });
    }
  }
}

TEST_CASE("weight of σ(T) is the negated weight") {
  // σ(T) is only a skew tableau; its weight is read letter by letter.
  for (const Shape& lambda : shapes_up_to(2, 3)) {
    for_each_tableau(lambda, false, [&](const Tableau& t) {
      Weight w = Weight::zero(2);
      SkewTableau s = sigma(t);
      for (const SkewColumn& c : s.columns) {
        for (Entry e : c.letters()) {
          if (e == 0) continue;
          w.twice[std::abs(e) - 1] += (e > 0 ? 1 : -1) * (c.kind == ColumnKind::admissible ? 2 : 1);
        }
      }
      CHECK(w == -weight_of(t));
    });
  }
}
