#pragma once

#include <random>

#include "hlr/linalg.hpp"

namespace testing {

inline hlr::Matrix rows(std::initializer_list<std::initializer_list<int>> r) {
  std::vector<hlr::Vector> out;
  for (const auto& row : r) {
    hlr::Vector v;
    for (int x : row) v.emplace_back(x);
    out.push_back(v);
  }
  return hlr::Matrix::from_rows(out, out.empty() ? 0 : out[0].size());
}

inline hlr::Vector vec(std::initializer_list<int> xs) {
  hlr::Vector v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

inline hlr::Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int bound = 3) {
  std::uniform_int_distribution<int> d(-bound, bound);
  hlr::Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace testing
