#pragma once

#include "comax/subalgebra.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace comax {

/// Fixed-size dynamic bitset over vertex indices.
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void set_all() {
    for (auto& w : words_) w = ~std::uint64_t{0};
    trim();
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const {
    for (auto w : words_) if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  /// First set index at or after `from`, or size() if none.
  std::size_t find_next(std::size_t from) const {
    if (from >= size_) return size_;
    std::size_t wi = from >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) return std::min(size_, (wi << 6) + static_cast<std::size_t>(std::countr_zero(w)));
      if (++wi >= words_.size()) return size_;
      w = words_[wi];
    }
  }
  std::size_t find_first() const { return find_next(0); }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// this & ~o
  Bitset& subtract(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend bool operator==(const Bitset&, const Bitset&) = default;

  std::vector<int> indices() const {
    std::vector<int> out;
    for (std::size_t i = find_first(); i < size_; i = find_next(i + 1)) out.push_back(static_cast<int>(i));
    return out;
  }

private:
  void trim() {
    if (size_ & 63) words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Simple undirected graph on vertices 0..order-1 with bitset rows.
class Graph {
public:
  Graph() = default;
  explicit Graph(int order);

  static Graph complete(int order);

  int order() const { return static_cast<int>(rows_.size()); }
  bool adjacent(int a, int b) const { return rows_[a].test(b); }
  void add_edge(int a, int b);
  const Bitset& neighbors(int v) const { return rows_[v]; }
  int degree(int v) const { return static_cast<int>(rows_[v].count()); }
  long long size() const;

  Graph complement() const;
  /// Subgraph induced on `keep` (ascending); vertex i of the result is keep[i].
  Graph induced(const std::vector<int>& keep) const;

private:
  std::vector<Bitset> rows_;
};

enum class VertexKind { line, nilpotent_line, split_line, nonsplit_line, plane, borel, other };

std::string to_string(VertexKind kind);

/// Gamma(L): vertices are the nontrivial proper subalgebras in inventory
/// order, A ~ B iff <A, B> = L.
struct ComaximalGraph {
  AlgebraPtr algebra;
  std::vector<Subspace> vertices;
  std::vector<VertexKind> kinds;
  Graph graph;

  int order() const { return graph.order(); }
  /// Index of a vertex, or -1.
  int index_of(const Subspace& s) const;
  std::vector<int> isolated() const;
  /// Vertices with at least one neighbor (the vertex set of Gamma*).
  std::vector<int> non_isolated() const;
};

/// Builds Gamma(L). Kind tags: sl2 over odd q gets nilpotent/split/nonsplit
/// lines and Borels; otherwise lines, planes, and higher-dimensional
/// subalgebras.
ComaximalGraph build_graph(const SubalgebraInventory& inventory);

} // namespace comax
