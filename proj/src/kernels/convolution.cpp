#include "qmock/kernels/convolution.hpp"

#include <algorithm>
#include <map>

namespace qmock::kernels {

using exactring::WLaurent;

std::vector<SeriesTerm> convolve_serial(std::span<const SeriesTerm> a, std::span<const SeriesTerm> b,
                                        std::int64_t bound) {
  std::map<std::int64_t, WLaurent> acc;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      if (ea + eb >= bound) break;  // b is sorted
      WLaurent::fma(acc[ea + eb], ca, cb);
    }
  }
  std::vector<SeriesTerm> out;
  out.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (!c.is_zero()) out.emplace_back(e, std::move(c));
  }
  return out;
}

std::vector<SeriesTerm> convolve_omp(std::span<const SeriesTerm> a, std::span<const SeriesTerm> b,
                                     std::int64_t bound) {
  std::vector<std::int64_t> targets;
  for (const auto& ta : a) {
    for (const auto& tb : b) {
      if (ta.first + tb.first >= bound) break;
      targets.push_back(ta.first + tb.first);
    }
  }
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());

  const auto n = static_cast<std::int64_t>(targets.size());
  std::vector<WLaurent> coeffs(targets.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t t = 0; t < n; ++t) {
    const std::int64_t e = targets[static_cast<std::size_t>(t)];
    WLaurent acc;
    for (const auto& [ea, ca] : a) {
      if (ea > e - b.front().first) break;
      auto it = std::lower_bound(b.begin(), b.end(), e - ea,
                                 [](const SeriesTerm& x, std::int64_t v) { return x.first < v; });
      if (it != b.end() && it->first == e - ea) WLaurent::fma(acc, ca, it->second);
    }
    coeffs[static_cast<std::size_t>(t)] = std::move(acc);
  }
  std::vector<SeriesTerm> out;
  out.reserve(targets.size());
  for (std::size_t t = 0; t < targets.size(); ++t) {
    if (!coeffs[t].is_zero()) out.emplace_back(targets[t], std::move(coeffs[t]));
  }
  return out;
}

std::vector<SeriesTerm> convolve(std::span<const SeriesTerm> a, std::span<const SeriesTerm> b,
                                 std::int64_t bound) {
  if (a.empty() || b.empty()) return {};
  if (a.size() * b.size() < 256) return convolve_serial(a, b, bound);
  return convolve_omp(a, b, bound);
}

}  // namespace qmock::kernels
