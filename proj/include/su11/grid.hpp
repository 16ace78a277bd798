#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace su11 {

// n >= 2 points from lo to hi inclusive, exact endpoints.
inline std::vector<double> linear_spaced(double lo, double hi, int n) {
  if (n < 2) throw std::invalid_argument("linear_spaced: need at least 2 points");
  if (!(lo < hi)) throw std::invalid_argument("linear_spaced: need lo < hi");
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = lo + (hi - lo) * double(i) / double(n - 1);
  out.front() = lo;
  out.back() = hi;
  return out;
}

// n >= 2 logarithmically spaced points, exact endpoints, lo > 0.
inline std::vector<double> log_spaced(double lo, double hi, int n) {
  if (!(lo > 0.0)) throw std::invalid_argument("log_spaced: need lo > 0");
  const std::vector<double> l = linear_spaced(std::log(lo), std::log(hi), n);
  std::vector<double> out(l.size());
  std::transform(l.begin(), l.end(), out.begin(), [](double x) { return std::exp(x); });
  out.front() = lo;
  out.back() = hi;
  return out;
}

// Sorted insert; no duplicate if x is already present.
inline std::vector<double> with_point(std::vector<double> grid, double x) {
  auto it = std::lower_bound(grid.begin(), grid.end(), x);
  if (it == grid.end() || *it != x) grid.insert(it, x);
  return grid;
}

}  // namespace su11
