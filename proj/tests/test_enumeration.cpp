#include "support.hpp"

#include <set>

#include "ortab/enumeration.hpp"

using namespace ortab;
using testing::tab;

TEST_CASE("height-one columns in rank 2") {
  auto all = enumerate_tableaux(Shape(2, {1, 0}));
  std::vector<Tableau> expected = {tab("n 2\ncol 1"), tab("n 2\ncol 2"), tab("n 2\ncol 0"),
                                   tab("n 2\ncol -2"), tab("n 2\ncol -1")};
  CHECK(all == expected);
}

TEST_CASE("small counts") {
  CHECK(count_tableaux(Shape(2, {0, 1})) == 4);
  CHECK(count_tableaux(Shape(2, {0, 2})) == 10);
  CHECK(count_tableaux(Shape::zero(3)) == 1);
  CHECK(count_tableaux(Shape::zero(3), true) == 1);
  CHECK(count_tableaux(Shape(2, {1, 0}), true) == 4);
}

TEST_CASE("weyl_dim") {
  CHECK(weyl_dim(Shape(2, {1, 0})) == 5);
  CHECK(weyl_dim(Shape(2, {0, 1})) == 4);
  CHECK(weyl_dim(Shape(3, {0, 1, 0})) == 21);
  CHECK(weyl_dim(Shape(2, {0, 2})) == 10);
  for (int n = 1; n <= 5; ++n) {
    CHECK(weyl_dim(Shape::zero(n)) == 1);
    CHECK(weyl_data(n).positive_roots.size() == static_cast<std::size_t>(n * n));
    std::vector<int> spin(n, 0);
    spin[n - 1] = 1;
    CHECK(weyl_dim(Shape(n, spin)) == (std::uint64_t{1} << n));
  }
  for (int n = 1; n <= 3; ++n) {
    for (const Shape& s : shapes_up_to(n, 3)) {
      if (s != Shape::zero(n)) CHECK(weyl_dim(s) > 1);
    }
  }
  CHECK_THROWS_AS(weyl_dim(Weight{{1, 2}}), Error);
  CHECK_THROWS_AS(weyl_dim(Weight{{2, 1}}), Error);
  CHECK(weyl_dim_string(Weight{{40, 40, 40, 40, 40, 40, 40, 40}}).size() > 10);
}

TEST_CASE("enumeration is duplicate-free, semistandard and ordered") {
  for (int n = 1; n <= 3; ++n) {
    for (const Shape& s : shapes_up_to(n, 3)) {
      auto all = enumerate_tableaux(s);
      std::set<Tableau> seen(all.begin(), all.end());
      CHECK(seen.size() == all.size());
      for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(is_semistandard(all[i]));
        CHECK(all[i].shape() == s);
        if (i) CHECK(all[i - 1] < all[i]);
      }
      for (const Tableau& q : enumerate_tableaux(s, true)) CHECK(nqs_levels(q).empty());
    }
  }
}

TEST_CASE("verify_shape small cases") {
  auto r = verify_shape(Shape(2, {1, 0}));
  CHECK(r.ok());
  CHECK(r.ss_count == 5);
  CHECK(r.qs_sum == 5);
  auto z = verify_shape(Shape::zero(2));
  CHECK(z.ok());
  CHECK(z.ss_count == 1);
  CHECK(z.to_text().find("status ok") != std::string::npos);
}
