#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <future>
#include <span>
#include <thread>
#include <vector>

namespace hglens {

inline constexpr double kMinRelativeTolerance = 1e-14;

/// Adaptive Gauss-Kronrod integral of `f` over [a, b] to `rel_tol` of the
/// integral of |f| (clamped below at kMinRelativeTolerance).
[[nodiscard]] double integrate(const std::function<double(double)>& f, double a, double b,
                               double rel_tol = 1e-12);

struct PowerLawFit {
  double prefactor = 0.0;
  double exponent = 0.0;
};

/// Least-squares fit of log y = log a + p log x.
[[nodiscard]] PowerLawFit fit_power_law(std::span<const double> x, std::span<const double> y);

/// Least-squares prefactor a of y = a x^p in log space with p held fixed.
[[nodiscard]] double fit_prefactor(std::span<const double> x, std::span<const double> y,
                                   double exponent);

/// Applies `fn` to every element on a small worker pool, preserving order.
template <class T, class Fn>
auto parallel_map(const std::vector<T>& items, Fn fn) {
  using R = decltype(fn(items.front()));
  std::vector<R> out;
  out.reserve(items.size());
  const std::size_t workers = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  for (std::size_t start = 0; start < items.size(); start += workers) {
    const std::size_t stop = std::min(items.size(), start + workers);
    std::vector<std::future<R>> batch;
    batch.reserve(stop - start);
    for (std::size_t i = start; i < stop; ++i) {
      batch.push_back(std::async(std::launch::async, fn, std::cref(items[i])));
    }
    for (auto& f : batch) out.push_back(f.get());
  }
  return out;
}

}  // namespace hglens
