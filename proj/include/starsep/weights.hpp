#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "starsep/graph.hpp"

namespace starsep {

/// Tolerance for floating-point weights: normalization and threshold comparisons.
inline constexpr double weight_tolerance = 1e-9;

/// A non-negative rational constant such as the balance constant c.
struct Ratio {
  std::int64_t num = 1;
  std::int64_t den = 2;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Ratio&, const Ratio&) = default;
};

inline constexpr Ratio one_half{1, 2};

/**
 * A total weight. Exact masses are integers over a denominator shared by the
 * weight function that produced them; real masses are doubles compared with
 * weight_tolerance.
 */
class Mass {
 public:
  static Mass exact(std::int64_t num, std::int64_t den) { return Mass(true, num, den, 0.0); }
  static Mass real(double value) { return Mass(false, 0, 1, value); }

  bool is_exact() const { return exact_; }
  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }
  double value() const {
    return exact_ ? static_cast<double>(num_) / static_cast<double>(den_) : value_;
  }

  Mass operator+(const Mass& o) const {
    if (exact_ && o.exact_) {
      if (den_ == o.den_) return exact(num_ + o.num_, den_);
      __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
      __int128 d = static_cast<__int128>(den_) * o.den_;
      return reduce(n, d);
    }
    return real(value() + o.value());
  }

  /// -1, 0, 1. Real comparisons treat differences within tolerance as ties.
  friend int compare(const Mass& a, const Mass& b) {
    if (a.exact_ && b.exact_) {
      __int128 l = static_cast<__int128>(a.num_) * b.den_;
      __int128 r = static_cast<__int128>(b.num_) * a.den_;
      return l < r ? -1 : (l > r ? 1 : 0);
    }
    double d = a.value() - b.value();
    if (std::abs(d) <= weight_tolerance) return 0;
    return d < 0 ? -1 : 1;
  }
  friend bool operator==(const Mass& a, const Mass& b) { return compare(a, b) == 0; }

  /// this <= c * total
  bool at_most(Ratio c, const Mass& total) const {
    if (exact_ && total.exact_) {
      __int128 l = static_cast<__int128>(num_) * total.den_ * c.den;
      __int128 r = static_cast<__int128>(total.num_) * den_ * c.num;
      return l <= r;
    }
    return value() <= c.value() * total.value() + weight_tolerance;
  }

  std::string to_string() const {
    if (!exact_) return std::to_string(value_);
    std::int64_t g = std::gcd(num_, den_);
    if (g == 0) g = 1;
    return std::to_string(num_ / g) + "/" + std::to_string(den_ / g);
  }

 private:
  Mass(bool exact, std::int64_t num, std::int64_t den, double value)
      : exact_(exact), num_(num), den_(den), value_(value) {}

  static Mass reduce(__int128 n, __int128 d) {
    __int128 a = n < 0 ? -n : n, b = d;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    if (d > INT64_MAX || n > INT64_MAX) throw CapacityError("rational weight overflow");
    return exact(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
  }

  bool exact_ = true;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  double value_ = 0.0;
};

/**
 * Vertex weights on a host graph. Normalized functions (the public factories)
 * have every weight in [0, 1] and total 1; `raw` functions drop the total-1
 * requirement and serve derived weights such as the auxiliary-graph weights.
 */
class WeightFn {
 public:
  WeightFn() = default;

  /// Exact weights num[v] / den. Requires sum over V(G) == den.
  static WeightFn exact(const Graph& g, std::vector<std::int64_t> num, std::int64_t den) {
    WeightFn w = raw_exact(g, std::move(num), den);
    if (w.total().numerator() != den)
      throw InputError("weights sum to " + w.total().to_string() + ", expected 1");
    return w;
  }

  static WeightFn raw_exact(const Graph& g, std::vector<std::int64_t> num, std::int64_t den) {
    if (den <= 0) throw InputError("weight denominator must be positive");
    if (num.size() < static_cast<std::size_t>(g.capacity())) num.resize(static_cast<std::size_t>(g.capacity()), 0);
    for (Vertex v : g.vertices())
      if (num[v] < 0 || num[v] > den) throw InputError("weight of vertex " + std::to_string(v) + " outside [0,1]");
    WeightFn w;
    w.exact_ = true;
    w.den_ = den;
    w.num_ = std::move(num);
    w.support_ = g.vertices();
    return w;
  }

  /// Floating-point weights; total must be 1 within weight_tolerance.
  static WeightFn real(const Graph& g, std::vector<double> values) {
    WeightFn w = raw_real(g, std::move(values));
    if (std::abs(w.total().value() - 1.0) > weight_tolerance)
      throw InputError("weights sum to " + std::to_string(w.total().value()) + ", expected 1");
    return w;
  }

  static WeightFn raw_real(const Graph& g, std::vector<double> values) {
    if (values.size() < static_cast<std::size_t>(g.capacity())) values.resize(static_cast<std::size_t>(g.capacity()), 0.0);
    for (Vertex v : g.vertices())
      if (!(values[v] >= -weight_tolerance && values[v] <= 1.0 + weight_tolerance))
        throw InputError("weight of vertex " + std::to_string(v) + " outside [0,1]");
    WeightFn w;
    w.exact_ = false;
    w.real_ = std::move(values);
    w.support_ = g.vertices();
    return w;
  }

  /// 1/|V(G)| on every vertex.
  static WeightFn uniform(const Graph& g) { return uniform_on(g, g.vertices()); }

  /// 1/|W| on W, 0 elsewhere.
  static WeightFn uniform_on(const Graph& g, const VertexSet& w) {
    g.require_subset(w);
    if (w.empty()) throw InputError("uniform weights on an empty set");
    std::vector<std::int64_t> num(static_cast<std::size_t>(g.capacity()), 0);
    for (Vertex v : w) num[v] = 1;
    return exact(g, std::move(num), w.size());
  }

  bool is_exact() const { return exact_; }
  std::int64_t denominator() const { return den_; }
  const VertexSet& support() const { return support_; }

  Mass of(Vertex v) const {
    if (exact_) return Mass::exact(num_[v], den_);
    return Mass::real(real_[v]);
  }

  Mass mass(const VertexSet& x) const {
    if (exact_) {
      std::int64_t sum = 0;
      for (Vertex v : x) sum += num_[v];
      return Mass::exact(sum, den_);
    }
    double sum = 0.0;
    for (Vertex v : x) sum += real_[v];
    return Mass::real(sum);
  }

  Mass total() const { return mass(support_); }

  /// Copy with some weights replaced; the caller re-validates.
  WeightFn with_values(const Graph& g, const std::vector<Mass>& values) const {
    if (exact_) {
      std::vector<std::int64_t> num(static_cast<std::size_t>(g.capacity()), 0);
      for (Vertex v : g.vertices()) num[v] = rescale(values[v]);
      return raw_exact(g, std::move(num), den_);
    }
    std::vector<double> out(static_cast<std::size_t>(g.capacity()), 0.0);
    for (Vertex v : g.vertices()) out[v] = values[v].value();
    return raw_real(g, std::move(out));
  }

  /// Restriction to V(h) with the same values (total may drop below 1).
  WeightFn restricted(const Graph& h) const {
    if (exact_) return raw_exact(h, num_, den_);
    return raw_real(h, real_);
  }

 private:
  std::int64_t rescale(const Mass& m) const {
    if (!m.is_exact()) throw InternalError("mixing real and exact weights");
    __int128 n = static_cast<__int128>(m.numerator()) * den_;
    if (n % m.denominator() != 0) throw InternalError("mass not representable over weight denominator");
    return static_cast<std::int64_t>(n / m.denominator());
  }

  bool exact_ = true;
  std::int64_t den_ = 1;
  std::vector<std::int64_t> num_;
  std::vector<double> real_;
  VertexSet support_;
};

/// True iff every component of G - X has weight at most c * w(G).
inline bool is_balanced_separator(const Graph& g, const WeightFn& w, const VertexSet& x, Ratio c = one_half) {
  Mass total = w.mass(g.vertices());
  for (const auto& d : components(g, g.vertices() - x))
    if (!w.mass(d).at_most(c, total)) return false;
  return true;
}

/// Weight of the heaviest component of G - X (zero when G - X is empty).
inline Mass heaviest_component_mass(const Graph& g, const WeightFn& w, const VertexSet& x) {
  Mass best = w.is_exact() ? Mass::exact(0, w.denominator()) : Mass::real(0.0);
  for (const auto& d : components(g, g.vertices() - x)) {
    Mass m = w.mass(d);
    if (compare(m, best) > 0) best = m;
  }
  return best;
}

}  // namespace starsep
