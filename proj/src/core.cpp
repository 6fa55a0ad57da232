#include "ortab/core.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

namespace ortab {

int order_key(Entry e, int n) {
  if (n < 1 || std::abs(e) > n) {
    throw Error("entry " + std::to_string(e) + " out of range for n=" + std::to_string(n));
  }
  if (e > 0) return e;
  if (e == 0) return n + 1;
  return 2 * n + 2 + e;
}

bool entry_less(Entry a, Entry b, int n) { return order_key(a, n) < order_key(b, n); }

std::string entry_to_string(Entry e) { return std::to_string(e); }

Shape::Shape(int n_, std::vector<int> a_) : n(n_), a(std::move(a_)) {
  if (n < 1) throw Error("rank must be positive");
  if (static_cast<int>(a.size()) != n) {
    throw Error("shape needs " + std::to_string(n) + " coefficients, got " +
                std::to_string(a.size()));
  }
  for (int x : a) {
    if (x < 0) throw Error("shape coefficients must be non-negative");
  }
}

Shape Shape::zero(int n) { return Shape(n, std::vector<int>(n, 0)); }

Shape Shape::parse(const std::string& text, int n) {
  std::vector<int> a;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw Error("bad shape coefficient '" + tok + "'");
    }
    if (used != tok.size()) throw Error("bad shape coefficient '" + tok + "'");
    a.push_back(v);
  }
  if (n != 0 && static_cast<int>(a.size()) != n) {
    throw Error("shape '" + text + "' does not have " + std::to_string(n) + " coefficients");
  }
  const int rank = static_cast<int>(a.size());
  return Shape(rank, std::move(a));
}

std::vector<int> Shape::heights() const {
  std::vector<int> h;
  if (has_spin()) h.push_back(n);
  for (int k = 0; k < admissible_n_count(); ++k) h.push_back(n);
  for (int i = n - 1; i >= 1; --i) {
    for (int k = 0; k < a[i - 1]; ++k) h.push_back(i);
  }
  return h;
}

int Shape::column_count() const { return static_cast<int>(heights().size()); }

int Shape::box_count() const {
  auto h = heights();
  return std::accumulate(h.begin(), h.end(), 0);
}

int Shape::degree() const { return std::accumulate(a.begin(), a.end(), 0); }

std::string Shape::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(a[i]);
  }
  return out;
}

bool shape_leq(const Shape& mu, const Shape& lambda) {
  if (mu.n != lambda.n) throw Error("shape_leq: rank mismatch");
  for (int i = 0; i < mu.n; ++i) {
    if (mu.a[i] > lambda.a[i]) return false;
  }
  // Height-n columns can only leave once the spin column is gone, and the
  // spin column itself only leaves whole, so a spin μ keeps all of a_n.
  if (mu.has_spin() && mu.a.back() != lambda.a.back()) return false;
  return true;
}

Shape remove_height(const Shape& lambda, int s, HeightNRemoval which) {
  if (s < 1 || s > lambda.n) throw Error("remove_height: height out of range");
  Shape out = lambda;
  if (s < lambda.n) {
    if (out.a[s - 1] == 0) throw Error("remove_height: no column of height " + std::to_string(s));
    out.a[s - 1] -= 1;
    return out;
  }
  if (which == HeightNRemoval::spin) {
    if (!lambda.has_spin()) throw Error("remove_height: no spin column");
    out.a.back() -= 1;
  } else {
    if (lambda.admissible_n_count() == 0) {
      throw Error("remove_height: no admissible column of height " + std::to_string(s));
    }
    out.a.back() -= 2;
  }
  return out;
}

std::vector<Shape> shapes_up_to(int n, int max_degree) {
  std::vector<Shape> out;
  std::vector<int> a(n, 0);
  // Odometer over all coefficient vectors with bounded sum.
  while (true) {
    if (std::accumulate(a.begin(), a.end(), 0) <= max_degree) out.emplace_back(n, a);
    int i = n - 1;
    while (i >= 0) {
      if (++a[i] <= max_degree) break;
      a[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

Weight Weight::of_shape(const Shape& lambda) {
  // λ_i = a_i + ... + a_{n-1} + a_n/2
  Weight w = zero(lambda.n);
  for (int i = 0; i < lambda.n; ++i) {
    int t = lambda.a.back();
    for (int k = i; k < lambda.n - 1; ++k) t += 2 * lambda.a[k];
    w.twice[i] = t;
  }
  return w;
}

Weight Weight::operator-() const {
  Weight w = *this;
  for (int& x : w.twice) x = -x;
  return w;
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.twice.size() != twice.size()) throw Error("weight rank mismatch");
  for (std::size_t i = 0; i < twice.size(); ++i) twice[i] += o.twice[i];
  return *this;
}

std::string Weight::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < twice.size(); ++i) {
    if (i) out += ',';
    int t = twice[i];
    out += (t % 2 == 0) ? std::to_string(t / 2) : std::to_string(t) + "/2";
  }
  return out + ")";
}

}  // namespace ortab
