#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace starsep {

using Vertex = int;

/// Largest vertex identity (exclusive) any graph in the library may use.
inline constexpr int max_vertices = 256;

/**
 * Fixed-width bit set over vertex identities 0..max_vertices-1.
 *
 * Every set operation is a handful of word operations, which keeps the
 * exhaustive searches in the detectors and the separator engine cheap.
 */
class VertexSet {
 public:
  static constexpr int word_count = max_vertices / 64;

  constexpr VertexSet() = default;

  VertexSet(std::initializer_list<Vertex> members) {
    for (Vertex v : members) insert(v);
  }

  template <typename Range>
  static VertexSet of(const Range& members) {
    VertexSet s;
    for (Vertex v : members) s.insert(v);
    return s;
  }

  /// {0, ..., n-1}
  static VertexSet range(int n) {
    VertexSet s;
    for (int w = 0; w < word_count && n > 0; ++w, n -= 64)
      s.words_[w] = n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    return s;
  }

  bool contains(Vertex v) const {
    return v >= 0 && v < max_vertices && ((words_[v >> 6] >> (v & 63)) & 1U);
  }
  void insert(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  int size() const {
    int total = 0;
    for (auto w : words_) total += std::popcount(w);
    return total;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  /// Smallest member, or -1.
  Vertex first() const {
    for (int w = 0; w < word_count; ++w)
      if (words_[w]) return w * 64 + std::countr_zero(words_[w]);
    return -1;
  }

  /// Smallest member strictly greater than `after`, or -1.
  Vertex next(Vertex after) const {
    int v = after + 1;
    if (v >= max_vertices) return -1;
    int w = v >> 6;
    std::uint64_t word = words_[w] & (~std::uint64_t{0} << (v & 63));
    while (true) {
      if (word) return w * 64 + std::countr_zero(word);
      if (++w == word_count) return -1;
      word = words_[w];
    }
  }

  Vertex last() const {
    for (int w = word_count - 1; w >= 0; --w)
      if (words_[w]) return w * 64 + 63 - std::countl_zero(words_[w]);
    return -1;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (int w = 0; w < word_count; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (int w = 0; w < word_count; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    for (int w = 0; w < word_count; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet with(Vertex v) const {
    VertexSet s = *this;
    s.insert(v);
    return s;
  }
  VertexSet without(Vertex v) const {
    VertexSet s = *this;
    s.erase(v);
    return s;
  }

  bool intersects(const VertexSet& o) const {
    for (int w = 0; w < word_count; ++w)
      if (words_[w] & o.words_[w]) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const {
    for (int w = 0; w < word_count; ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (Vertex v : *this) out.push_back(v);
    return out;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    iterator() = default;
    iterator(const VertexSet* set, Vertex v) : set_(set), v_(v) {}
    Vertex operator*() const { return v_; }
    iterator& operator++() {
      v_ = set_->next(v_);
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.v_ == b.v_; }

   private:
    const VertexSet* set_ = nullptr;
    Vertex v_ = -1;
  };

  iterator begin() const { return {this, first()}; }
  iterator end() const { return {this, -1}; }

 private:
  std::array<std::uint64_t, word_count> words_{};
};

/// Compares the sorted member sequences lexicographically.
inline bool lex_less(const VertexSet& a, const VertexSet& b) {
  auto ia = a.begin(), ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib)
    if (*ia != *ib) return *ia < *ib;
  return ia == a.end() && ib != b.end();
}

/// Orders by size first, then lexicographically.
inline bool shortlex_less(const VertexSet& a, const VertexSet& b) {
  int sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  return lex_less(a, b);
}

}  // namespace starsep
