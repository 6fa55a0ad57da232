#pragma once

// Exhaustive generation of SS^[λ] and QS^[λ], the Weyl dimension oracle and
// the bijection checker.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ortab/tableaux.hpp"

namespace ortab {

// All admissible columns of the given height, in canonical order.
std::vector<AdmissibleColumn> admissible_columns(int n, int height);
// All spin columns, in canonical order.
std::vector<SpinColumn> spin_columns(int n);

// Visits every semistandard tableau of shape λ once, in canonical order.
// With `quasi`, only the quasistandard ones.
void for_each_tableau(const Shape& lambda, bool quasi, const std::function<void(const Tableau&)>& f);
std::vector<Tableau> enumerate_tableaux(const Shape& lambda, bool quasi = false);
std::uint64_t count_tableaux(const Shape& lambda, bool quasi = false);

struct WeylData {
  int n = 0;
  std::vector<std::vector<int>> positive_roots;  // coordinates in the ε basis
  Weight rho;
};
WeylData weyl_data(int n);

// Π_{α>0} ⟨λ+ρ,α⟩ / ⟨ρ,α⟩ over B_n in exact arithmetic.
std::string weyl_dim_string(const Weight& lambda);
std::uint64_t weyl_dim(const Weight& lambda);  // throws if it does not fit
std::uint64_t weyl_dim(const Shape& lambda);

struct VerifyReport {
  Shape lambda;
  std::uint64_t ss_count = 0;
  std::uint64_t qs_sum = 0;  // Σ_{μ≤λ} |QS^[μ]|
  std::uint64_t weyl = 0;
  bool injective = true;
  bool image_ok = true;       // image of push equals the union of the QS^[μ]
  bool round_trips = true;    // unpush∘push and push∘unpush are identities
  std::vector<std::string> failures;  // witnesses in the tableau file format

  bool ok() const {
    return injective && image_ok && round_trips && ss_count == qs_sum && ss_count == weyl;
  }
  std::string to_text() const;
};

VerifyReport verify_shape(const Shape& lambda);

}  // namespace ortab
