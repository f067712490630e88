// Reference implementations used only by the tests. They are deliberately
// naive so they share no code path with the library routines they check.
#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "superhom/exactla.hpp"
#include "superhom/superchain.hpp"

namespace oracle {

using superhom::Rational;

// Plain Gaussian elimination over Q on a dense copy.
inline std::size_t gauss_rank(const superhom::SparseRationalMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (const auto& [rc, v] : m.entries()) a[rc.first][rc.second] = v;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

inline superhom::SparseRationalMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols,
                                                    double density, int range = 5) {
  superhom::SparseRationalMatrix m(rows, cols);
  std::uniform_real_distribution<double> u(0, 1);
  std::uniform_int_distribution<int> num(-range, range), den(1, 3);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (u(rng) < density) {
        Rational v(num(rng), den(rng));
        v.canonicalize();
        m.set(r, c, v);
      }
  return m;
}

// Rank-deficient matrix: sum of k random outer products.
inline superhom::SparseRationalMatrix low_rank(std::mt19937& rng, std::size_t rows, std::size_t cols,
                                               std::size_t k) {
  superhom::SparseRationalMatrix m(rows, cols);
  std::uniform_int_distribution<int> num(-3, 3);
  for (std::size_t t = 0; t < k; ++t) {
    std::vector<int> u(rows), v(cols);
    for (auto& x : u) x = num(rng);
    for (auto& x : v) x = num(rng);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        if (u[r] != 0 && v[c] != 0) m.add(r, c, u[r] * v[c]);
  }
  return m;
}

// Counts non-decreasing generator sequences of length m and weight w with no
// repeated even-grade generator, by walking every multiset.
inline std::size_t brute_chain_dim(const superhom::GradedAlgebra& alg, int m, int w,
                                   const std::function<bool(superhom::GenId)>& allow = {},
                                   std::optional<int> secondary = {}) {
  std::vector<superhom::GenId> seq;
  std::size_t count = 0;
  const auto n = static_cast<superhom::GenId>(alg.size());
  std::function<void(superhom::GenId, int)> rec = [&](superhom::GenId from, int left) {
    if (left == 0) {
      int total = 0;
      for (auto g : seq) total += alg.grade(g);
      if (total != w) return;
      if (secondary) {
        int h = 0;
        for (auto g : seq) h += alg.generator(g).secondary;
        if (h != *secondary) return;
      }
      for (std::size_t i = 1; i < seq.size(); ++i)
        if (seq[i] == seq[i - 1] && !alg.is_odd(seq[i])) return;
      ++count;
      return;
    }
    for (superhom::GenId g = from; g < n; ++g) {
      if (allow && !allow(g)) continue;
      seq.push_back(g);
      rec(g, left - 1);
      seq.pop_back();
    }
  };
  rec(0, m);
  return count;
}

}  // namespace oracle
