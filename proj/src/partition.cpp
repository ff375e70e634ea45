#include "ncpart/partition.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "ncpart/error.hpp"

namespace ncpart {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

int parse_element(std::string_view token, std::string_view whole) {
    token = trim(token);
    int value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || end != token.data() + token.size()) {
        throw ParseError("malformed partition text '" + std::string(whole) + "': bad element '" +
                         std::string(token) + "'");
    }
    if (value < 1) {
        throw ParseError("malformed partition text '" + std::string(whole) +
                         "': elements are positive");
    }
    return value;
}

std::vector<Arc> consecutive_arcs(const Partition& p) {
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(p.ground_size()) - p.block_count());
    for (const Block& b : p.blocks()) {
        for (std::size_t j = 1; j < b.size(); ++j) arcs.push_back({b[j - 1], b[j]});
    }
    std::sort(arcs.begin(), arcs.end());
    return arcs;
}

// Arcs with distinct left and distinct right endpoints are non-crossing iff
// every arc closes while its left endpoint is the innermost open one.
bool arcs_noncrossing(int m, const std::vector<Arc>& arcs) {
    std::vector<int> left_of_right(static_cast<std::size_t>(m) + 1, 0);
    std::vector<char> opens(static_cast<std::size_t>(m) + 1, 0);
    for (const Arc& a : arcs) {
        left_of_right[a.right] = a.left;
        opens[a.left] = 1;
    }
    std::vector<int> open;
    for (int x = 1; x <= m; ++x) {
        if (int l = left_of_right[x]; l != 0) {
            if (open.empty() || open.back() != l) return false;
            open.pop_back();
        }
        if (opens[x]) open.push_back(x);
    }
    return true;
}

bool has_consecutive(const Partition& p) {
    for (const Block& b : p.blocks()) {
        for (std::size_t j = 1; j < b.size(); ++j) {
            if (b[j] == b[j - 1] + 1) return true;
        }
    }
    return false;
}

}  // namespace

Partition Partition::from_blocks(std::vector<Block> blocks) {
    int max_element = 0;
    std::size_t total = 0;
    for (Block& b : blocks) {
        if (b.empty()) throw ValidationError("partition has an empty block");
        std::sort(b.begin(), b.end());
        if (b.front() < 1) throw ValidationError("partition elements must be positive");
        max_element = std::max(max_element, b.back());
        total += b.size();
    }
    if (blocks.empty()) throw ValidationError("partition has no blocks");
    std::vector<char> seen(static_cast<std::size_t>(max_element) + 1, 0);
    for (const Block& b : blocks) {
        for (int x : b) {
            if (seen[x]) throw ValidationError("element " + std::to_string(x) + " appears twice");
            seen[x] = 1;
        }
    }
    if (total != static_cast<std::size_t>(max_element)) {
        for (int x = 1; x <= max_element; ++x) {
            if (!seen[x]) {
                throw ValidationError("element " + std::to_string(x) + " is missing from [1.." +
                                      std::to_string(max_element) + "]");
            }
        }
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const Block& a, const Block& b) { return a.front() < b.front(); });
    return Partition(max_element, std::move(blocks));
}

Partition Partition::singletons(int m) {
    if (m < 1) throw ValidationError("ground size must be positive");
    std::vector<Block> blocks;
    blocks.reserve(static_cast<std::size_t>(m));
    for (int x = 1; x <= m; ++x) blocks.push_back({x});
    return Partition(m, std::move(blocks));
}

std::vector<std::size_t> Partition::block_of() const {
    std::vector<std::size_t> owner(static_cast<std::size_t>(ground_size_) + 1, 0);
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        for (int x : blocks_[i]) owner[x] = i;
    }
    return owner;
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i) out += '|';
        for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
            if (j) out += ',';
            out += std::to_string(blocks_[i][j]);
        }
    }
    return out;
}

Partition parse_partition(std::string_view text) {
    const std::string_view whole = text;
    if (trim(text).empty()) throw ParseError("empty partition text");
    std::vector<Block> blocks;
    while (true) {
        const auto bar = text.find('|');
        std::string_view block_text = text.substr(0, bar);
        Block block;
        while (true) {
            const auto comma = block_text.find(',');
            block.push_back(parse_element(block_text.substr(0, comma), whole));
            if (comma == std::string_view::npos) break;
            block_text.remove_prefix(comma + 1);
        }
        blocks.push_back(std::move(block));
        if (bar == std::string_view::npos) break;
        text.remove_prefix(bar + 1);
    }
    return Partition::from_blocks(std::move(blocks));
}

bool is_noncrossing(const Partition& p) {
    return arcs_noncrossing(p.ground_size(), consecutive_arcs(p));
}

bool is_semi_special(const Partition& p) { return !has_consecutive(p) && is_noncrossing(p); }

std::optional<std::string> special_violation(const Partition& p) {
    if (p.ground_size() % 2 == 0) return "even ground size";
    if (!is_noncrossing(p)) return "crossing";
    if (has_consecutive(p)) return "consecutive";
    if (p.block_count() != static_cast<std::size_t>(p.ground_size() / 2 + 1)) return "block count";
    return std::nullopt;
}

bool is_special(const Partition& p) { return !special_violation(p).has_value(); }

PieceList decompose_pieces(const Partition& p) {
    if (!is_noncrossing(p)) throw ValidationError("pieces need a non-crossing partition");
    const auto owner = p.block_of();
    PieceList pieces;
    // Blocks are ordered by minimum, so each piece is a contiguous run of them.
    std::size_t next_block = 0;
    int start = 1;
    while (start <= p.ground_size()) {
        Piece piece;
        piece.first = start;
        piece.last = p.block(owner[start]).back();
        while (next_block < p.block_count() && p.block(next_block).front() <= piece.last) {
            piece.blocks.push_back(p.block(next_block));
            ++next_block;
        }
        start = piece.last + 1;
        pieces.push_back(std::move(piece));
    }
    return pieces;
}

Partition subpartition(const Partition& p, std::size_t block_index, std::size_t gap_index) {
    if (auto why = special_violation(p)) {
        throw ValidationError("subpartition needs a special partition (" + *why + ")");
    }
    if (block_index < 1 || block_index > p.block_count()) {
        throw std::out_of_range("block index " + std::to_string(block_index) + " out of range");
    }
    const Block& b = p.block(block_index - 1);
    if (gap_index < 1 || gap_index >= b.size()) {
        throw std::out_of_range("gap index " + std::to_string(gap_index) + " out of range");
    }
    const int lo = b[gap_index - 1];
    const int hi = b[gap_index];
    std::vector<Block> inner;
    for (const Block& other : p.blocks()) {
        Block moved;
        for (int x : other) {
            if (x > lo && x < hi) moved.push_back(x - lo);
        }
        if (!moved.empty()) inner.push_back(std::move(moved));
    }
    return Partition::from_blocks(std::move(inner));
}

ArcDiagram::ArcDiagram(int point_count, std::vector<Arc> arcs)
    : point_count_(point_count), arcs_(std::move(arcs)) {
    if (point_count_ < 1) throw ValidationError("arc diagram needs at least one point");
    std::sort(arcs_.begin(), arcs_.end());
    std::vector<char> left_used(static_cast<std::size_t>(point_count_) + 1, 0);
    std::vector<char> right_used(static_cast<std::size_t>(point_count_) + 1, 0);
    for (const Arc& a : arcs_) {
        if (a.left < 1 || a.right > point_count_ || a.left >= a.right) {
            throw ValidationError("arc (" + std::to_string(a.left) + "," + std::to_string(a.right) +
                                  ") is not inside 1.." + std::to_string(point_count_));
        }
        if (left_used[a.left]) {
            throw ValidationError("two arcs start at " + std::to_string(a.left));
        }
        if (right_used[a.right]) {
            throw ValidationError("two arcs end at " + std::to_string(a.right));
        }
        left_used[a.left] = right_used[a.right] = 1;
    }
    if (!arcs_noncrossing(point_count_, arcs_)) throw ValidationError("arcs cross");
}

ArcDiagram to_arcs(const Partition& p) {
    if (!is_noncrossing(p)) throw ValidationError("crossing partition has no arc diagram");
    return ArcDiagram(p.ground_size(), consecutive_arcs(p));
}

Partition from_arcs(const ArcDiagram& d) {
    const auto m = static_cast<std::size_t>(d.point_count());
    std::vector<int> next(m + 1, 0);
    std::vector<char> has_prev(m + 1, 0);
    for (const Arc& a : d.arcs()) {
        next[a.left] = a.right;
        has_prev[a.right] = 1;
    }
    std::vector<Block> blocks;
    for (int x = 1; x <= d.point_count(); ++x) {
        if (has_prev[x]) continue;
        Block b;
        for (int y = x; y != 0; y = next[y]) b.push_back(y);
        blocks.push_back(std::move(b));
    }
    return Partition::from_blocks(std::move(blocks));
}

}  // namespace ncpart
