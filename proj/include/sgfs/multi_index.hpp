#pragma once

#include <cstdint>
#include <vector>

namespace sgfs {

/// Multi-index (p_1, ..., p_N) of non-negative integers.
struct MultiIndex {
  std::vector<int> components;

  int dim() const { return static_cast<int>(components.size()); }
  int operator[](int n) const { return components[static_cast<std::size_t>(n)]; }

  int total_degree() const {
    int d = 0;
    for (int c : components) d += c;
    return d;
  }

  /// True if every component has the same value (includes the zero index).
  bool all_components_equal() const {
    for (int c : components)
      if (c != components.front()) return false;
    return true;
  }

  bool operator==(const MultiIndex& other) const = default;
};

/// Graded-lexicographic comparison: total degree first, then lexicographic
/// on components. This is the canonical mode ordering everywhere downstream.
bool graded_lex_less(const MultiIndex& a, const MultiIndex& b);

/// All multi-indices of dimension N with total degree at most `degree`,
/// in graded-lexicographic order. The first element is always the zero index.
class IndexSet {
 public:
  IndexSet(int dimension, int degree);

  int dimension() const { return dimension_; }
  int degree() const { return degree_; }
  int size() const { return static_cast<int>(indices_.size()); }

  const MultiIndex& operator[](int i) const { return indices_[static_cast<std::size_t>(i)]; }
  const std::vector<MultiIndex>& indices() const { return indices_; }

  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }

 private:
  int dimension_;
  int degree_;
  std::vector<MultiIndex> indices_;
};

/// Enumerates J(p) = { p in N^N : sum p_n <= p }.
/// Throws std::invalid_argument on N < 1 or p < 0, and std::overflow_error
/// when the set size (N+p)!/(N!p!) does not fit a platform integer.
IndexSet build_index_set(int dimension, int degree);

/// (N+p)!/(N!p!), the size of J(p). Throws std::overflow_error past 2^31-1.
std::int64_t index_set_size(int dimension, int degree);

}  // namespace sgfs
