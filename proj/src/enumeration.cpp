#include "ortab/enumeration.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <set>
#include <sstream>

#include "ortab/io.hpp"
#include "ortab/push.hpp"

namespace ortab {

namespace {

bool keys_less(const std::vector<Entry>& x, const std::vector<Entry>& y, int n) {
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                      [n](Entry a, Entry b) { return entry_less(a, b, n); });
}

// A column candidate together with its double, precomputed once per shape.
struct Candidate {
  Column column;
  std::vector<Entry> left;
  std::vector<Entry> right;
};

std::vector<Candidate> candidates(int n, int height, bool spin) {
  std::vector<Candidate> out;
  auto add = [&](Column c) {
    ColumnPair p = c.dble();
    out.push_back(Candidate{std::move(c), p.first.entries(), p.second.entries()});
  };
  if (spin) {
    for (const SpinColumn& c : spin_columns(n)) add(Column(c));
  } else {
    for (const AdmissibleColumn& c : admissible_columns(n, height)) add(Column(c));
  }
  return out;
}

// Row condition between adjacent halves: prev[i] ≤ next[i] wherever both exist.
bool rows_ok(const std::vector<Entry>& prev, const std::vector<Entry>& next, int n) {
  const std::size_t m = std::min(prev.size(), next.size());
  for (std::size_t i = 0; i < m; ++i) {
    if (entry_less(next[i], prev[i], n)) return false;
  }
  return true;
}

}  // namespace

std::vector<AdmissibleColumn> admissible_columns(int n, int height) {
  std::vector<AdmissibleColumn> out;
  if (height < 0 || height > n) return out;
  const std::uint64_t full = std::uint64_t{1} << n;
  for (std::uint64_t a = 0; a < full; ++a) {
    const LetterSet A = LetterSet::from_mask(a << 1);
    if (A.size() > height) continue;
    for (std::uint64_t d = 0; d < full; ++d) {
      const LetterSet D = LetterSet::from_mask(d << 1);
      const int o = height - A.size() - D.size();
      if (o < 0) continue;
      try {
        out.push_back(AdmissibleColumn::complete(n, A, o, D));
      } catch (const NotAdmissible&) {
      }
    }
  }
  std::sort(out.begin(), out.end(), [n](const AdmissibleColumn& x, const AdmissibleColumn& y) {
    return keys_less(x.entries(), y.entries(), n);
  });
  return out;
}

std::vector<SpinColumn> spin_columns(int n) {
  std::vector<SpinColumn> out;
  const LetterSet all = LetterSet::range(1, n);
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
    const LetterSet A = LetterSet::from_mask(a << 1);
    out.push_back(SpinColumn::make(n, A, all - A));
  }
  std::sort(out.begin(), out.end(), [n](const SpinColumn& x, const SpinColumn& y) {
    return keys_less(x.entries(), y.entries(), n);
  });
  return out;
}

void for_each_tableau(const Shape& lambda, bool quasi,
                      const std::function<void(const Tableau&)>& f) {
  const int n = lambda.n;
  const std::vector<int> heights = lambda.heights();
  if (heights.empty()) {
    f(Tableau(n));
    return;
  }
  // One candidate list per distinct (height, spin) pair.
  std::vector<const std::vector<Candidate>*> per_col;
  std::vector<std::vector<Candidate>> pool;
  pool.reserve(heights.size());
  for (std::size_t j = 0; j < heights.size(); ++j) {
    const bool spin = j == 0 && lambda.has_spin();
    if (j > 0 && !(j == 1 && lambda.has_spin()) && heights[j] == heights[j - 1]) {
      per_col.push_back(per_col.back());
      continue;
    }
    pool.push_back(candidates(n, heights[j], spin));
    per_col.push_back(&pool.back());
  }

  std::vector<const Candidate*> chosen(heights.size(), nullptr);
  std::vector<Column> cols;
  cols.reserve(heights.size());
  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j == heights.size()) {
      cols.clear();
      for (const Candidate* c : chosen) cols.push_back(c->column);
      Tableau t(n, cols);
      if (!quasi || nqs_levels(t).empty()) f(t);
      return;
    }
    for (const Candidate& c : *per_col[j]) {
      if (j > 0 && !rows_ok(chosen[j - 1]->right, c.left, n)) continue;
      chosen[j] = &c;
      self(self, j + 1);
    }
  };
  rec(rec, 0);
}

std::vector<Tableau> enumerate_tableaux(const Shape& lambda, bool quasi) {
  std::vector<Tableau> out;
  for_each_tableau(lambda, quasi, [&](const Tableau& t) { out.push_back(t); });
  return out;
}

std::uint64_t count_tableaux(const Shape& lambda, bool quasi) {
  std::uint64_t k = 0;
  for_each_tableau(lambda, quasi, [&](const Tableau&) { ++k; });
  return k;
}

WeylData weyl_data(int n) {
  WeylData w;
  w.n = n;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> minus(n, 0), plus(n, 0);
      minus[i] = 1, minus[j] = -1;
      plus[i] = 1, plus[j] = 1;
      w.positive_roots.push_back(minus);
      w.positive_roots.push_back(plus);
    }
    std::vector<int> e(n, 0);
    e[i] = 1;
    w.positive_roots.push_back(e);
  }
  // Half the root sum, kept doubled: the plain sum of the roots.
  w.rho.twice.assign(n, 0);
  for (const auto& r : w.positive_roots) {
    for (int i = 0; i < n; ++i) w.rho.twice[i] += r[i];
  }
  return w;
}

namespace {

using boost::multiprecision::cpp_int;

cpp_int weyl_dim_exact(const Weight& lambda) {
  const int n = static_cast<int>(lambda.twice.size());
  if (n == 0) throw Error("weyl_dim: empty weight");
  const auto& x = lambda.twice;
  for (int i = 0; i < n; ++i) {
    if ((x[i] - x[0]) % 2 != 0) throw Error("weyl_dim: mixed integral and half-integral coordinates");
    if (x[i] < 0 || (i + 1 < n && x[i] < x[i + 1])) {
      throw Error("weyl_dim: weight " + lambda.to_string() + " is not dominant");
    }
  }
  const WeylData w = weyl_data(n);
  cpp_int num = 1, den = 1;
  for (const auto& root : w.positive_roots) {
    long long lr = 0, rr = 0;
    for (int i = 0; i < n; ++i) {
      lr += static_cast<long long>(x[i] + w.rho.twice[i]) * root[i];
      rr += static_cast<long long>(w.rho.twice[i]) * root[i];
    }
    num *= lr;
    den *= rr;
  }
  if (num % den != 0) throw Error("weyl_dim: non-integral quotient");
  return num / den;
}

}  // namespace

std::string weyl_dim_string(const Weight& lambda) { return weyl_dim_exact(lambda).str(); }

std::uint64_t weyl_dim(const Weight& lambda) {
  cpp_int d = weyl_dim_exact(lambda);
  if (d > std::numeric_limits<std::uint64_t>::max()) throw Error("weyl_dim: result exceeds 64 bits");
  return static_cast<std::uint64_t>(d);
}

std::uint64_t weyl_dim(const Shape& lambda) {
  // ω_i = ε_1+…+ε_i for i < n and ω_n = ½(ε_1+…+ε_n), doubled.
  const int n = lambda.n;
  Weight w{std::vector<int>(n, 0)};
  for (int i = 1; i <= n; ++i) {
    const int c = i < n ? 2 * lambda.a[i - 1] : lambda.a[i - 1];
    for (int k = 0; k < i; ++k) w.twice[k] += c;
  }
  return weyl_dim(w);
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  os << "shape " << lambda.to_string() << "\n";
  os << "ss " << ss_count << "\n";
  os << "qs_sum " << qs_sum << "\n";
  os << "weyl " << weyl << "\n";
  os << "injective " << (injective ? "yes" : "no") << "\n";
  os << "image " << (image_ok ? "ok" : "bad") << "\n";
  os << "round_trips " << (round_trips ? "ok" : "bad") << "\n";
  os << "status " << (ok() ? "ok" : "FAIL") << "\n";
  for (const std::string& w : failures) {
    os << "witness\n" << w;
    if (!w.empty() && w.back() != '\n') os << "\n";
  }
  return os.str();
}

VerifyReport verify_shape(const Shape& lambda) {
  constexpr std::size_t kMaxWitnesses = 4;
  VerifyReport r;
  r.lambda = lambda;
  r.weyl = weyl_dim(lambda);
  auto witness = [&](const std::string& what, const Tableau& t) {
    if (r.failures.size() < kMaxWitnesses) r.failures.push_back("# " + what + "\n" + format_tableau(t));
  };

  std::set<Tableau> image;
  for_each_tableau(lambda, false, [&](const Tableau& t) {
    ++r.ss_count;
    Tableau u;
    try {
      u = push(t);
    } catch (const Error& e) {
      r.image_ok = false;
      witness(std::string("push threw: ") + e.what(), t);
      return;
    }
    if (!is_quasistandard(u) || !shape_leq(u.shape(), lambda)) {
      r.image_ok = false;
      witness("push left the union of QS strata", t);
    }
    if (!image.insert(u).second) {
      r.injective = false;
      witness("push collision", t);
    }
    try {
      if (unpush(u, lambda) != t) {
        r.round_trips = false;
        witness("unpush(push(T)) differs from T", t);
      }
    } catch (const Error& e) {
      r.round_trips = false;
      witness(std::string("unpush threw: ") + e.what(), t);
    }
  });

  std::vector<int> bound = lambda.a;
  std::vector<int> a(lambda.n, 0);
  auto visit = [&](auto&& self, int i) -> void {
    if (i == lambda.n) {
      const Shape mu(lambda.n, a);
      if (!shape_leq(mu, lambda)) return;
      for_each_tableau(mu, true, [&](const Tableau& u) {
        ++r.qs_sum;
        if (!image.count(u)) {
          r.image_ok = false;
          witness("quasistandard tableau outside the image", u);
        }
        try {
          if (push(unpush(u, lambda)) != u) {
            r.round_trips = false;
            witness("push(unpush(U)) differs from U", u);
          }
        } catch (const Error& e) {
          r.round_trips = false;
          witness(std::string("unpush threw: ") + e.what(), u);
        }
      });
      return;
    }
    for (a[i] = 0; a[i] <= bound[i]; ++a[i]) self(self, i + 1);
  };
  visit(visit, 0);
  return r;
}

}  // namespace ortab
