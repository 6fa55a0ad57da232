#pragma once

// Orthogonal columns over the B_n alphabet.
//
// An admissible column f(A,O,D) lists A increasing, o zeros, then the bars of
// D. Its dual presentation g(B,O,C) comes from I = A∩D, J = δ(I) over
// [1,n] \ (AΔD), B = (A\I)∪J, C = (D\I)∪J. Symplectic columns are the o = 0
// instances of the same class.

#include <utility>
#include <vector>

#include "ortab/core.hpp"
#include "ortab/subsets.hpp"

namespace ortab {

// Column entries: `up` increasing, then `zeros` zeros, then the bars of `down`.
std::vector<Entry> column_entries(LetterSet up, int zeros, LetterSet down);

// Splits increasing entries into (unbarred, zero count, barred). Only 0 may
// repeat. Throws on any other repeat, a descent or an out-of-range letter.
struct EntrySplit {
  LetterSet up;
  int zeros = 0;
  LetterSet down;
};
EntrySplit split_entries(const std::vector<Entry>& entries, int n);

class AdmissibleColumn {
 public:
  static AdmissibleColumn complete(int n, LetterSet A, int o, LetterSet D);
  static AdmissibleColumn from_coadmissible(int n, LetterSet B, int o, LetterSet C);
  static AdmissibleColumn from_entries(int n, const std::vector<Entry>& entries);

  int n() const { return n_; }
  LetterSet A() const { return A_; }
  int o() const { return o_; }
  LetterSet D() const { return D_; }
  LetterSet I() const { return I_; }
  LetterSet J() const { return J_; }
  LetterSet B() const { return B_; }
  LetterSet C() const { return C_; }
  LetterSet K() const { return K_; }
  int height() const { return A_.size() + o_ + D_.size(); }

  std::vector<Entry> entries() const { return column_entries(A_, o_, D_); }
  std::vector<Entry> g_entries() const { return column_entries(B_, o_, C_); }

  friend bool operator==(const AdmissibleColumn& x, const AdmissibleColumn& y) {
    return x.n_ == y.n_ && x.A_ == y.A_ && x.o_ == y.o_ && x.D_ == y.D_;
  }

 private:
  AdmissibleColumn() = default;
  int n_ = 0;
  LetterSet A_, D_, I_, J_, B_, C_, K_;
  int o_ = 0;
};

class SpinColumn {
 public:
  static SpinColumn make(int n, LetterSet A, LetterSet D);
  static SpinColumn from_entries(int n, const std::vector<Entry>& entries);
  static SpinColumn trivial(int n) { return make(n, LetterSet::range(1, n), {}); }

  int n() const { return n_; }
  LetterSet A() const { return A_; }
  LetterSet D() const { return D_; }
  int height() const { return n_; }
  std::vector<Entry> entries() const { return column_entries(A_, 0, D_); }

  friend bool operator==(const SpinColumn&, const SpinColumn&) = default;

 private:
  SpinColumn() = default;
  int n_ = 0;
  LetterSet A_, D_;
};

// A column over {1..n, n̄..1̄}: `up` unbarred letters over the bars of `down`.
struct TwoLetterColumn {
  int n = 0;
  LetterSet up;
  LetterSet down;

  static TwoLetterColumn from_entries(int n, const std::vector<Entry>& entries);
  std::vector<Entry> entries() const { return column_entries(up, 0, down); }
  int height() const { return up.size() + down.size(); }

  friend bool operator==(const TwoLetterColumn&, const TwoLetterColumn&) = default;
};

using ColumnPair = std::pair<TwoLetterColumn, TwoLetterColumn>;

// left = A∪K over C̄, right = B over (K∪D)‾.
ColumnPair double_column(const AdmissibleColumn& col);
// left = 1..n, right = the spin column.
ColumnPair double_column(const SpinColumn& col);

// Lecouvey's presentation of an orthogonal column: B over o zeros over C̄.
struct LecouveyColumn {
  int n = 0;
  LetterSet B;
  int o = 0;
  LetterSet C;

  std::vector<Entry> entries() const { return column_entries(B, o, C); }
  friend bool operator==(const LecouveyColumn&, const LecouveyColumn&) = default;
};

// Ψ(f(A,O,D)) = (B, O, C̄).
LecouveyColumn lecouvey_psi(const AdmissibleColumn& col);

// Φ = Ψ⁻¹, built from I¹ = γ^{n+k}(J¹) with J¹ = (B∩C) ∪ {n+1..n+k}.
// Throws NotAdmissible when the input is not admissible in Lecouvey's sense.
AdmissibleColumn lecouvey_phi(const LecouveyColumn& col);

// split(C_L) = (A¹ over C̄, B over D̄¹), computed directly from J¹ and I¹.
ColumnPair lecouvey_split(const LecouveyColumn& col);

// Intermediate sets of the Lecouvey construction, exposed for tests.
struct LecouveyData {
  LetterSet J1, I1, I, K;
};
LecouveyData lecouvey_data(const LecouveyColumn& col);

}  // namespace ortab
