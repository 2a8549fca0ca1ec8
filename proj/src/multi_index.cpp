#include "sgfs/multi_index.hpp"

#include <limits>
#include <stdexcept>

namespace sgfs {

bool graded_lex_less(const MultiIndex& a, const MultiIndex& b) {
  const int da = a.total_degree();
  const int db = b.total_degree();
  if (da != db) return da < db;
  return a.components < b.components;
}

std::int64_t index_set_size(int dimension, int degree) {
  if (dimension < 1) throw std::invalid_argument("index_set_size: dimension must be >= 1");
  if (degree < 0) throw std::invalid_argument("index_set_size: degree must be >= 0");
  // C(N+p, N) computed with exact integer division at each step.
  std::int64_t result = 1;
  for (int i = 1; i <= dimension; ++i) {
    result = result * (degree + i) / i;
    if (result > std::numeric_limits<std::int32_t>::max())
      throw std::overflow_error("index_set_size: (N+p)!/(N!p!) exceeds platform integer");
  }
  return result;
}

namespace {

void enumerate_degree(int dimension, int remaining, std::vector<int>& stack,
                      std::vector<MultiIndex>& out) {
  const int position = static_cast<int>(stack.size());
  if (position == dimension - 1) {
    stack.push_back(remaining);
    out.push_back(MultiIndex{stack});
    stack.pop_back();
    return;
  }
  for (int c = 0; c <= remaining; ++c) {
    stack.push_back(c);
    enumerate_degree(dimension, remaining - c, stack, out);
    stack.pop_back();
  }
}

}  // namespace

IndexSet::IndexSet(int dimension, int degree) : dimension_(dimension), degree_(degree) {
  const auto expected = index_set_size(dimension, degree);
  indices_.reserve(static_cast<std::size_t>(expected));
  std::vector<int> stack;
  for (int d = 0; d <= degree; ++d) enumerate_degree(dimension, d, stack, indices_);
}

IndexSet build_index_set(int dimension, int degree) { return IndexSet(dimension, degree); }

}  // namespace sgfs
