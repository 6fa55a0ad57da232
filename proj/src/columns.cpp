#include "ortab/columns.hpp"

#include <cstdlib>

namespace ortab {

namespace {

void check_within(LetterSet s, int n, const char* what) {
  if (!s.subset_of(LetterSet::range(1, n))) {
    throw Error(std::string(what) + " " + s.to_string() + " not inside [1," + std::to_string(n) +
                "]");
  }
}

}  // namespace

std::vector<Entry> column_entries(LetterSet up, int zeros, LetterSet down) {
  std::vector<Entry> out = up.elems();
  out.insert(out.end(), zeros, 0);
  auto d = down.elems();
  for (auto it = d.rbegin(); it != d.rend(); ++it) out.push_back(-*it);
  return out;
}

EntrySplit split_entries(const std::vector<Entry>& entries, int n) {
  EntrySplit s;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    Entry e = entries[i];
    order_key(e, n);  // range check
    if (i > 0 && !entry_less(entries[i - 1], e, n) && !(e == 0 && entries[i - 1] == 0)) {
      throw Error("column entries are not increasing at position " +
                  std::to_string(i + 1));
    }
    if (e > 0) {
      s.up.insert(e);
    } else if (e == 0) {
      ++s.zeros;
    } else {
      s.down.insert(-e);
    }
  }
  return s;
}

AdmissibleColumn AdmissibleColumn::complete(int n, LetterSet A, int o, LetterSet D) {
  if (n < 1) throw Error("rank must be positive");
  if (o < 0) throw Error("negative zero count");
  check_within(A, n, "A");
  check_within(D, n, "D");
  const LetterSet all = LetterSet::range(1, n);
  AdmissibleColumn c;
  c.n_ = n;
  c.A_ = A;
  c.o_ = o;
  c.D_ = D;
  c.I_ = A & D;
  auto J = right_delta(all - (A ^ D), c.I_);
  if (!J) {
    throw NotAdmissible("column " + A.to_string() + "," + std::to_string(o) + "," + D.to_string() +
                        ": no right side for I=" + c.I_.to_string());
  }
  c.J_ = *J;
  const LetterSet used = A | D | c.J_;
  if (used.size() + o > n) {
    throw NotAdmissible("column " + A.to_string() + "," + std::to_string(o) + "," + D.to_string() +
                        ": #(A∪D∪J)+o exceeds n");
  }
  c.B_ = (A - c.I_) | c.J_;
  c.C_ = (D - c.I_) | c.J_;
  c.K_ = (all - used).largest(o);
  return c;
}

AdmissibleColumn AdmissibleColumn::from_coadmissible(int n, LetterSet B, int o, LetterSet C) {
  check_within(B, n, "B");
  check_within(C, n, "C");
  const LetterSet J = B & C;
  auto I = left_gamma(LetterSet::range(1, n) - (B ^ C), J);
  if (!I) {
    throw NotAdmissible("co-admissible " + B.to_string() + "," + C.to_string() +
                        ": no left side for J=" + J.to_string());
  }
  AdmissibleColumn c = complete(n, (B - J) | *I, o, (C - J) | *I);
  if (c.B_ != B || c.C_ != C) {
    throw NotAdmissible("co-admissible " + B.to_string() + "," + C.to_string() +
                        " has no admissible preimage");
  }
  return c;
}

AdmissibleColumn AdmissibleColumn::from_entries(int n, const std::vector<Entry>& entries) {
  EntrySplit s = split_entries(entries, n);
  return complete(n, s.up, s.zeros, s.down);
}

SpinColumn SpinColumn::make(int n, LetterSet A, LetterSet D) {
  check_within(A, n, "A");
  check_within(D, n, "D");
  if (!(A & D).empty() || A.size() + D.size() != n) {
    throw NotAdmissible("spin column needs A, D disjoint with #A+#D=n");
  }
  SpinColumn c;
  c.n_ = n;
  c.A_ = A;
  c.D_ = D;
  return c;
}

SpinColumn SpinColumn::from_entries(int n, const std::vector<Entry>& entries) {
  EntrySplit s = split_entries(entries, n);
  if (s.zeros) throw NotAdmissible("spin column cannot contain 0");
  return make(n, s.up, s.down);
}

TwoLetterColumn TwoLetterColumn::from_entries(int n, const std::vector<Entry>& entries) {
  EntrySplit s = split_entries(entries, n);
  if (s.zeros) throw Error("two-letter column cannot contain 0");
  return TwoLetterColumn{n, s.up, s.down};
}

ColumnPair double_column(const AdmissibleColumn& col) {
  const int n = col.n();
  return {TwoLetterColumn{n, col.A() | col.K(), col.C()},
          TwoLetterColumn{n, col.B(), col.K() | col.D()}};
}

ColumnPair double_column(const SpinColumn& col) {
  const int n = col.n();
  return {TwoLetterColumn{n, LetterSet::range(1, n), {}}, TwoLetterColumn{n, col.A(), col.D()}};
}

LecouveyColumn lecouvey_psi(const AdmissibleColumn& col) {
  return LecouveyColumn{col.n(), col.B(), col.o(), col.C()};
}

LecouveyData lecouvey_data(const LecouveyColumn& col) {
  const int n = col.n;
  const int k = col.o;
  if (k < 0) throw Error("negative zero count");
  if (n + k > LetterSet::kMaxLetter) throw Error("rank too large for the extended alphabet");
  check_within(col.B, n, "B");
  check_within(col.C, n, "C");
  LecouveyData d;
  const LetterSet J = col.B & col.C;
  d.J1 = J | LetterSet::range(n + 1, n + k);
  auto I1 = left_gamma(LetterSet::range(1, n + k) - (col.B ^ col.C), d.J1);
  if (!I1) throw NotAdmissible("Lecouvey column: J¹ " + d.J1.to_string() + " has no left side");
  d.I1 = *I1;
  auto I = left_gamma((d.I1 | J) & LetterSet::range(1, n), J);
  if (!I) throw NotAdmissible("Lecouvey column: J " + J.to_string() + " has no left side");
  d.I = *I;
  d.K = d.I1 - d.I;
  return d;
}

AdmissibleColumn lecouvey_phi(const LecouveyColumn& col) {
  LecouveyData d = lecouvey_data(col);
  const LetterSet J = col.B & col.C;
  AdmissibleColumn c =
      AdmissibleColumn::complete(col.n, (col.B - J) | d.I, col.o, (col.C - J) | d.I);
  if (c.B() != col.B || c.C() != col.C || c.K() != d.K) {
    throw NotAdmissible("Lecouvey column does not come from an admissible column");
  }
  return c;
}

ColumnPair lecouvey_split(const LecouveyColumn& col) {
  LecouveyData d = lecouvey_data(col);
  const LetterSet A1 = (col.B - d.J1) | d.I1;
  const LetterSet D1 = (col.C - d.J1) | d.I1;
  check_within(A1, col.n, "A¹");
  return {TwoLetterColumn{col.n, A1, col.C}, TwoLetterColumn{col.n, col.B, D1}};
}

}  // namespace ortab
