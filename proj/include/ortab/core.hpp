#pragma once

// Alphabet, shapes and weights for so(2n+1) tableaux.
//
// Letters of the B_n alphabet 1 < 2 < ... < n < 0 < n̄ < ... < 1̄ are stored as
// plain ints: i for the unbarred letter, 0 for zero, -i for ī.

#include <stdexcept>
#include <string>
#include <vector>

namespace ortab {

using Entry = int;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a column or a rewritten column fails admissibility.
class NotAdmissible : public Error {
 public:
  using Error::Error;
};

int order_key(Entry e, int n);
bool entry_less(Entry a, Entry b, int n);
std::string entry_to_string(Entry e);  // "3", "0", "-3"

// λ = Σ a_i ω_i. Height-n data is folded into a_n: ⌊a_n/2⌋ admissible
// columns of height n plus one spin column iff a_n is odd.
struct Shape {
  int n = 0;
  std::vector<int> a;

  Shape() = default;
  Shape(int n_, std::vector<int> a_);

  static Shape zero(int n);
  static Shape parse(const std::string& text, int n = 0);  // "0,1,1,1,0"

  bool has_spin() const { return a.back() % 2 == 1; }
  int admissible_n_count() const { return a.back() / 2; }
  // Column heights in tableau order, the spin column (if any) first.
  std::vector<int> heights() const;
  int column_count() const;
  int box_count() const;
  int degree() const;  // Σ a_i
  std::string to_string() const;

  friend bool operator==(const Shape&, const Shape&) = default;
  friend auto operator<=>(const Shape&, const Shape&) = default;
};

// a_i(μ) ≤ a_i(λ) for every i, and a_n(μ) = a_n(λ) when μ has a spin column.
bool shape_leq(const Shape& mu, const Shape& lambda);

enum class HeightNRemoval { admissible, spin };
Shape remove_height(const Shape& lambda, int s,
                    HeightNRemoval which = HeightNRemoval::admissible);

// All shapes of rank n with Σ a_i ≤ max_degree, in lexicographic order.
std::vector<Shape> shapes_up_to(int n, int max_degree);

// Weight in the ε basis, stored doubled so spin halves stay integral.
struct Weight {
  std::vector<int> twice;

  static Weight zero(int n) { return Weight{std::vector<int>(n, 0)}; }
  static Weight of_shape(const Shape& lambda);
  Weight operator-() const;
  Weight& operator+=(const Weight& o);
  std::string to_string() const;  // "(1/2,-1/2)"

  friend bool operator==(const Weight&, const Weight&) = default;
};

}  // namespace ortab
