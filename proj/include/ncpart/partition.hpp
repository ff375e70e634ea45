#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ncpart {

/// An ascending list of distinct 1-based elements.
using Block = std::vector<int>;

/// A set partition of [m] = {1..m} in canonical form: every block ascending,
/// blocks ordered by their minimum element. Equality is structural on that
/// form, so two Partition values compare equal iff they describe the same
/// set partition.
class Partition {
public:
    /// Validates and normalizes. Throws ValidationError unless the blocks are
    /// non-empty, pairwise disjoint and cover exactly [1..max element].
    static Partition from_blocks(std::vector<Block> blocks);

    /// All-singletons partition of [m].
    static Partition singletons(int m);

    int ground_size() const { return ground_size_; }
    std::size_t block_count() const { return blocks_.size(); }
    const std::vector<Block>& blocks() const { return blocks_; }
    const Block& block(std::size_t index) const { return blocks_.at(index); }

    /// block_of()[x] is the 0-based index of the block holding x; entry 0 is
    /// unused so the vector can be indexed by element.
    std::vector<std::size_t> block_of() const;

    /// Canonical text: blocks joined by '|', elements by ',', no spaces.
    std::string to_string() const;

    bool operator==(const Partition&) const = default;

private:
    Partition(int ground_size, std::vector<Block> blocks)
        : ground_size_(ground_size), blocks_(std::move(blocks)) {}

    int ground_size_ = 0;
    std::vector<Block> blocks_;
};

/// Parses "1,5|2,4|3". Spaces around numbers and separators are accepted.
/// Throws ParseError on malformed text and ValidationError when the numbers
/// do not form a partition of [max].
Partition parse_partition(std::string_view text);

bool is_noncrossing(const Partition& p);

/// Non-crossing with no block holding two consecutive integers.
bool is_semi_special(const Partition& p);

/// Semi-special, ground size 2n+1 and exactly n+1 blocks.
bool is_special(const Partition& p);

/// Name of the first special-partition condition that fails ("even ground
/// size", "crossing", "consecutive", "block count"), or nullopt if special.
std::optional<std::string> special_violation(const Partition& p);

/// A maximal run of blocks whose union is the contiguous interval
/// [first, last] of the ground set.
struct Piece {
    int first = 0;
    int last = 0;
    std::vector<Block> blocks;

    bool operator==(const Piece&) const = default;
};

using PieceList = std::vector<Piece>;

/// Splits a non-crossing partition into pieces: a piece starts at the block
/// holding the smallest unconsidered element and takes every block whose
/// elements lie inside that block's span. Throws ValidationError if p crosses.
PieceList decompose_pieces(const Partition& p);

/// Partition induced on the integers strictly between the gap_index-th and
/// (gap_index+1)-th elements of block block_index, relabeled to start at 1.
/// Both indices are 1-based. Requires p special; throws ValidationError
/// otherwise and std::out_of_range on bad indices.
Partition subpartition(const Partition& p, std::size_t block_index, std::size_t gap_index);

struct Arc {
    int left = 0;
    int right = 0;

    int span() const { return right - left; }
    auto operator<=>(const Arc&) const = default;
};

/// Puttenham form of a partition: points 1..m and one arc joining each pair
/// of consecutive elements of a block. Arcs are kept sorted by left endpoint.
class ArcDiagram {
public:
    /// Throws ValidationError unless 1 <= left < right <= m for every arc,
    /// left endpoints are distinct, right endpoints are distinct and no two
    /// arcs cross.
    ArcDiagram(int point_count, std::vector<Arc> arcs);

    int point_count() const { return point_count_; }
    const std::vector<Arc>& arcs() const { return arcs_; }

    bool operator==(const ArcDiagram&) const = default;

private:
    int point_count_ = 0;
    std::vector<Arc> arcs_;
};

/// Throws ValidationError if p crosses.
ArcDiagram to_arcs(const Partition& p);

/// Blocks are the chains of arcs linked through shared endpoints.
Partition from_arcs(const ArcDiagram& d);

}  // namespace ncpart
