#include "ncpart/oracles.hpp"

#include <algorithm>
#include <chrono>

#include "ncpart/error.hpp"

namespace ncpart {

BigInt catalan(int n) {
    if (n < 0) throw ValidationError("catalan index must be non-negative");
    BigInt binom = 1;
    // binom(2n, n) built as prod_{k=1..n} (n+k)/k; each prefix is an integer.
    for (int k = 1; k <= n; ++k) {
        binom *= n + k;
        binom /= k;
    }
    return binom / (n + 1);
}

void CheckReport::fail(std::string witness) {
    if (passed) counterexample = std::move(witness);
    passed = false;
}

nlohmann::json to_json(const CheckReport& r) {
    nlohmann::json j{{"claim", r.claim},
                     {"range", r.range},
                     {"status", r.passed ? "pass" : "fail"},
                     {"count_checked", r.count_checked},
                     {"elapsed_ms", r.elapsed_ms}};
    if (r.counterexample) j["counterexample"] = *r.counterexample;
    if (!r.counts.empty()) j["counts"] = r.counts;
    return j;
}

NoncrossingBuilder::NoncrossingBuilder(int capacity) {
    owner_.reserve(static_cast<std::size_t>(capacity));
    last_.reserve(static_cast<std::size_t>(capacity));
    open_.reserve(static_cast<std::size_t>(capacity));
}

void NoncrossingBuilder::push_new() {
    const int x = placed() + 1;
    owner_.push_back(block_count());
    open_.push_back(block_count());
    last_.push_back(x);
}

void NoncrossingBuilder::push_join(std::size_t open_position) {
    const int x = placed() + 1;
    const int block = open_.at(open_position);
    open_.resize(open_position + 1);
    owner_.push_back(block);
    last_[block] = x;
}

Partition NoncrossingBuilder::to_partition() const {
    std::vector<Block> blocks(last_.size());
    for (std::size_t i = 0; i < owner_.size(); ++i) {
        blocks[owner_[i]].push_back(static_cast<int>(i) + 1);
    }
    return Partition::from_blocks(std::move(blocks));
}

namespace {

// The innermost open block always holds the previous element, so joining it
// would put consecutive integers together; only deeper open blocks qualify.
void ssp_descend(NoncrossingBuilder& b, int m, int max_blocks,
                 const std::function<void(const NoncrossingBuilder&)>& visit) {
    if (b.placed() == m) {
        visit(b);
        return;
    }
    const std::size_t open = b.open_blocks().size();
    for (std::size_t pos = 0; pos + 1 < open; ++pos) {
        NoncrossingBuilder next = b;
        next.push_join(pos);
        ssp_descend(next, m, max_blocks, visit);
    }
    if (max_blocks <= 0 || b.block_count() < max_blocks) {
        NoncrossingBuilder next = b;
        next.push_new();
        ssp_descend(next, m, max_blocks, visit);
    }
}

std::vector<Partition> sorted_by_text(std::vector<Partition> parts) {
    std::vector<std::pair<std::string, std::size_t>> keys;
    keys.reserve(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) keys.emplace_back(parts[i].to_string(), i);
    std::sort(keys.begin(), keys.end());
    std::vector<Partition> out;
    out.reserve(parts.size());
    for (const auto& [text, i] : keys) out.push_back(std::move(parts[i]));
    return out;
}

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

}  // namespace

void for_each_ssp(int m, int max_blocks,
                  const std::function<void(const NoncrossingBuilder&)>& visit) {
    if (m < 1) throw ValidationError("ground size must be positive");
    NoncrossingBuilder b(m);
    b.push_new();
    ssp_descend(b, m, max_blocks, visit);
}

void extend_ssp(const NoncrossingBuilder& prefix, int m, int max_blocks,
                const std::function<void(const NoncrossingBuilder&)>& visit) {
    NoncrossingBuilder b = prefix;
    ssp_descend(b, m, max_blocks, visit);
}

std::vector<Partition> enumerate_ssp(int m) {
    std::vector<Partition> out;
    for_each_ssp(m, 0, [&](const NoncrossingBuilder& b) { out.push_back(b.to_partition()); });
    return sorted_by_text(std::move(out));
}

std::vector<Partition> enumerate_special(int n) {
    if (n < 0) throw ValidationError("n must be non-negative");
    std::vector<Partition> out;
    // Semi-special partitions of [2n+1] never have fewer than n+1 blocks, but
    // that is one of the claims under test, so filter rather than assume.
    for_each_ssp(2 * n + 1, n + 1, [&](const NoncrossingBuilder& b) {
        if (b.block_count() == n + 1) out.push_back(b.to_partition());
    });
    return sorted_by_text(std::move(out));
}

int Composition::total() const {
    int sum = 0;
    for (int x : parts) sum += x;
    return sum;
}

bool check_floor_lemma(const Composition& c) {
    if (c.parts.empty()) throw ValidationError("composition needs at least one part");
    int lhs = 0;
    for (int x : c.parts) {
        if (x < 1) throw ValidationError("composition parts must be positive");
        lhs += x / 2;
    }
    lhs += static_cast<int>(c.parts.size());
    return lhs >= c.total() / 2 + 1;
}

CheckReport check_floor_lemma_all(int n_max) {
    const auto start = std::chrono::steady_clock::now();
    CheckReport r{"floor_sum_lemma", "n=1.." + std::to_string(n_max)};
    for (int n = 1; n <= n_max; ++n) {
        // Bit k of mask set means a cut after position k+1.
        const std::uint64_t masks = std::uint64_t{1} << (n - 1);
        r.counts.push_back(masks);
        for (std::uint64_t mask = 0; mask < masks; ++mask) {
            Composition c;
            int run = 1;
            for (int k = 0; k < n - 1; ++k) {
                if (mask >> k & 1U) {
                    c.parts.push_back(run);
                    run = 1;
                } else {
                    ++run;
                }
            }
            c.parts.push_back(run);
            ++r.count_checked;
            if (!check_floor_lemma(c)) {
                std::string text;
                for (std::size_t i = 0; i < c.parts.size(); ++i) {
                    text += (i ? "+" : "") + std::to_string(c.parts[i]);
                }
                r.fail(text);
            }
        }
    }
    r.elapsed_ms = ms_since(start);
    return r;
}

int min_ssp_blocks(int m) {
    int best = m;
    for_each_ssp(m, 0, [&](const NoncrossingBuilder& b) { best = std::min(best, b.block_count()); });
    return best;
}

bool check_max_ground(int b) {
    if (b < 0) throw ValidationError("block parameter must be non-negative");
    bool reached = false;
    for_each_ssp(2 * b + 1, b + 1, [&](const NoncrossingBuilder& x) {
        if (x.block_count() == b + 1) reached = true;
    });
    if (!reached) return false;
    for (int m = 2 * b + 2; m <= 2 * b + 3; ++m) {
        bool too_few = false;
        for_each_ssp(m, b + 1, [&](const NoncrossingBuilder&) { too_few = true; });
        if (too_few) return false;
    }
    return true;
}

std::optional<std::string> corollary_violation(const Partition& p) {
    const auto owner = p.block_of();
    if (owner[1] != owner[static_cast<std::size_t>(p.ground_size())]) {
        return p.to_string() + " (1 and 2n+1 in different blocks)";
    }
    if (decompose_pieces(p).size() != 1) return p.to_string() + " (more than one piece)";
    for (std::size_t i = 0; i < p.block_count(); ++i) {
        const Block& b = p.block(i);
        for (std::size_t j = 1; j < b.size(); ++j) {
            if ((b[j] - b[j - 1]) % 2 != 0) {
                return p.to_string() + " (odd gap " + std::to_string(b[j - 1]) + "->" +
                       std::to_string(b[j]) + ")";
            }
            if (!is_special(subpartition(p, i + 1, j))) {
                return p.to_string() + " (subpartition between " + std::to_string(b[j - 1]) +
                       " and " + std::to_string(b[j]) + " is not special)";
            }
        }
    }
    return std::nullopt;
}

CheckReport check_corollaries(int n) {
    const auto start = std::chrono::steady_clock::now();
    CheckReport r{"corollaries", "n=" + std::to_string(n)};
    for (const Partition& p : enumerate_special(n)) {
        ++r.count_checked;
        if (auto why = corollary_violation(p)) r.fail(*why);
    }
    r.elapsed_ms = ms_since(start);
    return r;
}

}  // namespace ncpart
