#pragma once

// Bulk verification kernels. Each kernel has a serial reference in
// ncpart::kernels::serial and an OpenMP version in ncpart::kernels::omp that
// must return identical results for any thread count.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include <omp.h>

namespace ncpart::kernels {

namespace detail {

template <class Check>
bool passes(Check& ok, std::size_t i) noexcept {
    try {
        return ok(i);
    } catch (...) {
        return false;
    }
}

}  // namespace detail

namespace serial {

/// Smallest i in [0, count) with ok(i) false (a throwing ok counts as false).
template <class Check>
std::optional<std::size_t> first_failure(std::size_t count, Check&& ok) {
    for (std::size_t i = 0; i < count; ++i) {
        if (!detail::passes(ok, i)) return i;
    }
    return std::nullopt;
}

/// histogram[k] = number of semi-special partitions of [m] with k blocks.
std::vector<std::uint64_t> ssp_block_histogram(int m);

}  // namespace serial

namespace omp {

template <class Check>
std::optional<std::size_t> first_failure(std::size_t count, Check&& ok, int threads) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for num_threads(threads) schedule(dynamic, 64) reduction(min : best)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        if (idx < best && !detail::passes(ok, idx)) best = idx;
    }
    if (best == std::numeric_limits<std::size_t>::max()) return std::nullopt;
    return best;
}

/// Splits the search tree at a fixed prefix depth and merges per-thread
/// histograms.
std::vector<std::uint64_t> ssp_block_histogram(int m, int threads);

}  // namespace omp

}  // namespace ncpart::kernels
