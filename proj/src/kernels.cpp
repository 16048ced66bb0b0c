/* Copyright 2026 The wildgraph Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "wildgraph/kernels.hpp"

#include <exception>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wildgraph::kernels {

namespace {

std::int64_t entry(const std::vector<StokesCircle>& c, std::size_t i, std::size_t j) {
  return i == j ? loop_multiplicity(c[i]) : edge_multiplicity(c[i], c[j]);
}

}  // namespace

IntMatrix multiplicity_matrix_serial(const std::vector<StokesCircle>& circles) {
  const std::size_t n = circles.size();
  IntMatrix B(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      B[i][j] = B[j][i] = entry(circles, i, j);
    }
  }
  return B;
}

IntMatrix multiplicity_matrix_omp(const std::vector<StokesCircle>& circles) {
  const std::size_t n = circles.size();
  IntMatrix B(n, std::vector<std::int64_t>(n, 0));
  const std::int64_t pairs = static_cast<std::int64_t>(n * (n + 1) / 2);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t p = 0; p < pairs; ++p) {
    // Unrank p into (i, j) with i <= j, row by row.
    std::size_t i = 0;
    std::int64_t rest = p;
    while (rest >= static_cast<std::int64_t>(n - i)) {
      rest -= static_cast<std::int64_t>(n - i);
      ++i;
    }
    std::size_t j = i + static_cast<std::size_t>(rest);
    try {
      std::int64_t v = entry(circles, i, j);
      B[i][j] = v;
      B[j][i] = v;
    } catch (...) {
#pragma omp critical(wildgraph_kernel_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return B;
}

namespace {

template <typename M>
bool triple_ok(const M& m, int i, int j, int k) {
  return two_largest_equal(m[i][j], m[i][k], m[j][k]);
}

}  // namespace

std::optional<Triple> first_non_ultrametric_serial(const IntMatrix& m) {
  const int n = static_cast<int>(m.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        if (!triple_ok(m, i, j, k)) return Triple{i, j, k};
      }
    }
  }
  return std::nullopt;
}

std::optional<Triple> first_non_ultrametric_omp(const IntMatrix& m) {
  const int n = static_cast<int>(m.size());
  // Each thread finds its first violation per i; the least i wins, and within
  // one i the scan is serial so the (j, k) order is preserved.
  int best = std::numeric_limits<int>::max();
  Triple found{};
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) {
    int current;
#pragma omp atomic read
    current = best;
    if (i > current) continue;
    for (int j = i + 1; j < n; ++j) {
      bool hit = false;
      for (int k = j + 1; k < n; ++k) {
        if (!triple_ok(m, i, j, k)) {
#pragma omp critical(wildgraph_first_triple)
          if (i < best) {
            best = i;
            found = Triple{i, j, k};
          }
          hit = true;
          break;
        }
      }
      if (hit) break;
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return found;
}

std::optional<Triple> first_non_ultrametric(const RatMatrix& m) {
  const int n = static_cast<int>(m.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        if (!triple_ok(m, i, j, k)) return Triple{i, j, k};
      }
    }
  }
  return std::nullopt;
}

namespace {

using Wide = __int128;

// Conditions involving only vertices 0..upto, with upto the newest one.
bool prefix_ok(const IntMatrix& B, const std::vector<std::int64_t>& r, std::size_t upto) {
  const std::size_t c = upto;
  for (std::size_t a = 0; a < c; ++a) {
    // Loops against the new edge, in both directions.
    if (Wide(B[a][a] - 1) * r[c] > Wide(B[a][c]) * r[a]) return false;
    if (Wide(B[c][c] - 1) * r[a] > Wide(B[c][a]) * r[c]) return false;
    for (std::size_t b = a + 1; b < c; ++b) {
      Wide x = Wide(B[a][b]) * r[c];
      Wide y = Wide(B[a][c]) * r[b];
      Wide z = Wide(B[b][c]) * r[a];
      if (!two_largest_equal(x, y, z)) return false;
    }
  }
  return true;
}

}  // namespace

bool decoration_ok(const IntMatrix& B, const std::vector<std::int64_t>& r) {
  for (std::size_t c = 1; c < B.size(); ++c) {
    if (!prefix_ok(B, r, c)) return false;
  }
  return true;
}

std::optional<std::vector<std::int64_t>> bounded_decoration_search_serial(const IntMatrix& B,
                                                                          std::int64_t r_max) {
  const std::size_t n = B.size();
  if (n == 0 || r_max < 1) return n == 0 ? std::optional(std::vector<std::int64_t>{}) : std::nullopt;
  std::vector<std::int64_t> r(n, 1);
  while (true) {
    if (decoration_ok(B, r)) return r;
    std::size_t pos = n;
    while (pos > 0 && r[pos - 1] == r_max) {
      r[pos - 1] = 1;
      --pos;
    }
    if (pos == 0) return std::nullopt;
    ++r[pos - 1];
  }
}

namespace {

bool backtrack(const IntMatrix& B, std::vector<std::int64_t>& r, std::size_t pos, std::int64_t r_max) {
  if (pos == r.size()) return true;
  for (std::int64_t v = 1; v <= r_max; ++v) {
    r[pos] = v;
    if (prefix_ok(B, r, pos) && backtrack(B, r, pos + 1, r_max)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::int64_t>> bounded_decoration_search_omp(const IntMatrix& B,
                                                                       std::int64_t r_max) {
  const std::size_t n = B.size();
  if (n == 0) return std::vector<std::int64_t>{};
  if (r_max < 1) return std::nullopt;
  std::vector<std::optional<std::vector<std::int64_t>>> per_first(static_cast<std::size_t>(r_max));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t v = 1; v <= r_max; ++v) {
    std::vector<std::int64_t> r(n, 1);
    r[0] = v;
    if (backtrack(B, r, 1, r_max)) per_first[static_cast<std::size_t>(v - 1)] = std::move(r);
  }
  for (auto& candidate : per_first) {
    if (candidate) return candidate;
  }
  return std::nullopt;
}

}  // namespace wildgraph::kernels
