#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "persched/fleet.hpp"

namespace persched::testing {

inline RobotSpec robot(std::string id, Slot c, Slot f, Epsilon eps = {}) {
  return RobotSpec{std::move(id), c, f, eps};
}

/// Square 0/1 matrix, row-major.
using Matrix = std::vector<std::vector<int>>;

/// The cyclic down-shift: ones on the sub-diagonal plus the top-right corner.
inline Matrix shift_matrix(Slot size) {
  const auto n = static_cast<std::size_t>(size);
  Matrix a(n, std::vector<int>(n, 0));
  a[0][n - 1] = 1;
  for (std::size_t i = 1; i < n; ++i) a[i][i - 1] = 1;
  return a;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k])
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline Matrix identity(Slot size) {
  const auto n = static_cast<std::size_t>(size);
  Matrix m(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

/// p^T A^t e_s computed literally from the matrices.
inline bool matrix_indicator(const Matrix& a_pow_t, Slot charge, Slot offset) {
  int sum = 0;
  for (Slot row = 0; row < charge; ++row) {
    sum += a_pow_t[static_cast<std::size_t>(row)][static_cast<std::size_t>(offset)];
  }
  return sum == 1;
}

inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// Random fleet with c in [cmin, cmax] and f in [fmin, fmax].
inline std::vector<RobotSpec> random_fleet(std::mt19937_64& rng, int n, Slot cmin, Slot cmax,
                                           Slot fmin, Slot fmax) {
  std::vector<RobotSpec> robots;
  for (int i = 0; i < n; ++i) {
    robots.push_back(robot("r" + std::to_string(i), uniform(rng, cmin, cmax),
                           uniform(rng, fmin, fmax)));
  }
  return robots;
}

}  // namespace persched::testing
