#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qmock/exactring/wlaurent.hpp"

namespace qmock::kernels {

using SeriesTerm = std::pair<std::int64_t, exactring::WLaurent>;

// Truncated Cauchy product of two exponent-sorted sparse series: every output
// exponent e < bound gets sum_{i + j = e} a_i * b_j. Output is sorted with no
// zero coefficients.

// Reference kernel: one pass over the pair grid into an ordered accumulator.
std::vector<SeriesTerm> convolve_serial(std::span<const SeriesTerm> a, std::span<const SeriesTerm> b,
                                        std::int64_t bound);

// Output-parallel kernel: enumerates target exponents, then each OpenMP
// thread owns a disjoint slice of them and gathers its pairs by binary search.
std::vector<SeriesTerm> convolve_omp(std::span<const SeriesTerm> a, std::span<const SeriesTerm> b,
                                     std::int64_t bound);

// Dispatch used by QSeries: small products stay serial.
std::vector<SeriesTerm> convolve(std::span<const SeriesTerm> a, std::span<const SeriesTerm> b,
                                 std::int64_t bound);

}  // namespace qmock::kernels
