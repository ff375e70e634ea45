#include "ncpart/kernels.hpp"

#include <algorithm>

#include "ncpart/oracles.hpp"

namespace ncpart::kernels {

namespace serial {

std::vector<std::uint64_t> ssp_block_histogram(int m) {
    std::vector<std::uint64_t> hist(static_cast<std::size_t>(m) + 1, 0);
    for_each_ssp(m, 0, [&](const NoncrossingBuilder& b) { ++hist[b.block_count()]; });
    return hist;
}

}  // namespace serial

namespace omp {

std::vector<std::uint64_t> ssp_block_histogram(int m, int threads) {
    // Prefixes of length 10 give C_9 = 4862 independent subtrees.
    const int depth = std::min(m, 10);
    std::vector<NoncrossingBuilder> prefixes;
    for_each_ssp(depth, 0, [&](const NoncrossingBuilder& b) { prefixes.push_back(b); });

    const std::size_t bins = static_cast<std::size_t>(m) + 1;
    std::vector<std::uint64_t> hist(bins, 0);
    const auto count = static_cast<std::int64_t>(prefixes.size());
#pragma omp parallel num_threads(threads)
    {
        std::vector<std::uint64_t> local(bins, 0);
#pragma omp for schedule(dynamic, 1) nowait
        for (std::int64_t i = 0; i < count; ++i) {
            extend_ssp(prefixes[static_cast<std::size_t>(i)], m, 0,
                       [&](const NoncrossingBuilder& b) { ++local[b.block_count()]; });
        }
#pragma omp critical(ncpart_ssp_histogram)
        for (std::size_t k = 0; k < bins; ++k) hist[k] += local[k];
    }
    return hist;
}

}  // namespace omp

}  // namespace ncpart::kernels
