#pragma once

// Dense symmetric eigensolver oracle: classical cyclic Jacobi rotations on
// plain row-major buffers. Independent of the Eigen-based production path;
// O(n^3) per sweep, intended for matrices up to a few hundred rows.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace oracle {

struct EigenSystem {
  std::vector<double> values;               // ascending
  std::vector<std::vector<double>> vectors; // vectors[i] pairs with values[i]
};

// Diagonalizes a symmetric matrix given as row-major a[n*n]. Sweeps rotate
// every off-diagonal pair until the off-diagonal mass is negligible relative
// to the diagonal scale.
inline EigenSystem jacobi_eigen(std::vector<double> a, size_t n) {
  if (a.size() != n * n) throw std::invalid_argument("jacobi_eigen: bad size");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (std::fabs(a[i * n + j] - a[j * n + i]) > 1e-12)
        throw std::invalid_argument("jacobi_eigen: matrix not symmetric");

  std::vector<double> v(n * n, 0.0);
  for (size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  double scale = 0.0;
  for (size_t i = 0; i < n; ++i) scale = std::max(scale, std::fabs(a[i * n + i]));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) scale = std::max(scale, std::fabs(a[i * n + j]));
  if (scale == 0.0) scale = 1.0;

  for (int sweep = 0; sweep < 200; ++sweep) {
    double off = 0.0;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) off += a[i * n + j] * a[i * n + j];
    if (std::sqrt(off) <= 1e-15 * scale * double(n)) break;

    for (size_t p = 0; p + 1 < n; ++p) {
      for (size_t q = p + 1; q < n; ++q) {
        double apq = a[p * n + q];
        if (std::fabs(apq) <= 1e-18 * scale) continue;
        double app = a[p * n + p], aqq = a[q * n + q];
        double theta = (aqq - app) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (size_t k = 0; k < n; ++k) {
          double akp = a[k * n + p], akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (size_t k = 0; k < n; ++k) {
          double apk = a[p * n + k], aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
        for (size_t k = 0; k < n; ++k) {
          double vkp = v[k * n + p], vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * vkq;
          v[k * n + q] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
    return a[x * n + x] < a[y * n + y];
  });

  EigenSystem out;
  out.values.reserve(n);
  out.vectors.reserve(n);
  for (size_t idx : order) {
    out.values.push_back(a[idx * n + idx]);
    std::vector<double> col(n);
    for (size_t k = 0; k < n; ++k) col[k] = v[k * n + idx];
    out.vectors.push_back(std::move(col));
  }
  return out;
}

// Row-major Laplacian L = D - A of an undirected graph; duplicate edges are
// rejected by construction in the callers, self loops contribute nothing.
inline std::vector<double> laplacian_matrix(
    size_t n, const std::vector<std::pair<uint32_t, uint32_t>>& edges) {
  std::vector<double> l(n * n, 0.0);
  for (auto [x, y] : edges) {
    if (x == y) continue;
    l[size_t(x) * n + y] -= 1.0;
    l[size_t(y) * n + x] -= 1.0;
    l[size_t(x) * n + x] += 1.0;
    l[size_t(y) * n + y] += 1.0;
  }
  return l;
}

}  // namespace oracle
