#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "ncpart/partition.hpp"

namespace ncpart {

using BigInt = boost::multiprecision::cpp_int;

/// C_n = binom(2n, n) / (n+1), exact.
BigInt catalan(int n);

/// Outcome of checking one claim over a range of instances.
struct CheckReport {
    CheckReport() = default;
    CheckReport(std::string claim_name, std::string checked_range)
        : claim(std::move(claim_name)), range(std::move(checked_range)) {}

    std::string claim;
    std::string range;
    bool passed = true;
    std::optional<std::string> counterexample;
    std::uint64_t count_checked = 0;
    double elapsed_ms = 0.0;
    /// Optional per-size object counts (cardinality suite).
    std::vector<std::uint64_t> counts;

    /// Records the first failure only; later calls keep the earlier witness.
    void fail(std::string witness);
};

nlohmann::json to_json(const CheckReport& r);

/// Incremental builder for non-crossing partitions of [1..k], elements placed
/// in increasing order. Blocks that can still receive elements form a stack
/// ordered by their last element; joining a block closes every block above it.
class NoncrossingBuilder {
public:
    explicit NoncrossingBuilder(int capacity);

    int placed() const { return static_cast<int>(owner_.size()); }
    int block_count() const { return static_cast<int>(last_.size()); }

    /// Open blocks, innermost last.
    const std::vector<int>& open_blocks() const { return open_; }
    int last_element(int block) const { return last_[block]; }

    /// Element k+1 starts a new block.
    void push_new();
    /// Element k+1 joins `open_position`-th entry of open_blocks().
    void push_join(std::size_t open_position);

    Partition to_partition() const;

private:
    std::vector<int> owner_;  // owner_[x-1] = block of x
    std::vector<int> last_;
    std::vector<int> open_;
};

/// Visits every semi-special partition of [m] with at most max_blocks blocks
/// (no limit when max_blocks <= 0), in builder order.
void for_each_ssp(int m, int max_blocks, const std::function<void(const NoncrossingBuilder&)>& visit);

/// Continues `prefix` (itself semi-special on [prefix.placed()]) to every
/// semi-special completion on [m].
void extend_ssp(const NoncrossingBuilder& prefix, int m, int max_blocks,
                const std::function<void(const NoncrossingBuilder&)>& visit);

/// Semi-special partitions of [m], sorted by canonical text.
std::vector<Partition> enumerate_ssp(int m);

/// Special partitions of [2n+1], sorted by canonical text. Built directly by
/// placing elements, never through the bijection.
std::vector<Partition> enumerate_special(int n);

/// Parts x_1..x_k >= 1 summing to n.
struct Composition {
    std::vector<int> parts;

    int total() const;
};

/// sum floor(x_j/2) + k >= floor(n/2) + 1. Throws ValidationError on a part < 1.
bool check_floor_lemma(const Composition& c);

/// Every composition of every total 1..n_max.
CheckReport check_floor_lemma_all(int n_max);

/// Fewest blocks over semi-special partitions of [m].
int min_ssp_blocks(int m);

/// Some semi-special partition of [2b+1] has b+1 blocks, and none of [2b+2]
/// or [2b+3] has b+1 blocks or fewer.
bool check_max_ground(int b);

/// First failed corollary property of a special partition, as a witness
/// string, or nullopt.
std::optional<std::string> corollary_violation(const Partition& p);

/// Over every special partition of [2n+1]: 1 and 2n+1 share a block, gaps
/// inside blocks are even, every subpartition is special, and the partition
/// is a single piece.
CheckReport check_corollaries(int n);

}  // namespace ncpart
