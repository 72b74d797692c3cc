#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "quivkit/quivkit.hpp"

namespace qt {

using namespace quivkit;

inline const RationalField QQ{};

template <Field F>
Matrix<F> M(const F& K, const std::vector<std::vector<long long>>& rows) {
  return Matrix<F>::from_ints(K, rows);
}

// Determinant by the Leibniz expansion over all permutations.
template <Field F>
typename F::value_type leibniz_det(const Matrix<F>& m) {
  const F& K = m.field();
  std::vector<std::size_t> p(m.rows());
  std::iota(p.begin(), p.end(), 0);
  auto total = K.zero();
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j)
        if (p[i] > p[j]) ++inversions;
    auto term = K.one();
    for (std::size_t i = 0; i < p.size(); ++i) term = K.mul(term, m.at(i, p[i]));
    total = inversions % 2 == 0 ? K.add(total, term) : K.sub(total, term);
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

// All matrices of the given shape over F_p, in lexicographic entry order.
inline std::vector<Matrix<PrimeField>> all_matrices(const PrimeField& K, std::size_t rows, std::size_t cols) {
  const std::size_t n = rows * cols;
  std::size_t total = 1;
  for (std::size_t k = 0; k < n; ++k) total *= K.size();
  std::vector<Matrix<PrimeField>> out;
  out.reserve(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::vector<std::uint64_t> e(n);
    std::size_t x = idx;
    for (std::size_t k = 0; k < n; ++k) {
      e[k] = x % K.size();
      x /= K.size();
    }
    out.emplace_back(K, rows, cols, std::move(e));
  }
  return out;
}

}  // namespace qt
