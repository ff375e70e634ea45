#include "ncpart/verify.hpp"

#include <algorithm>
#include <chrono>

#include "ncpart/bijection.hpp"
#include "ncpart/kernels.hpp"

namespace ncpart {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string range_text(const char* var, int lo, int hi) {
    return std::string(var) + "=" + std::to_string(lo) + ".." + std::to_string(hi);
}

template <class Check>
std::optional<std::size_t> first_failure(const VerifyOptions& o, std::size_t count, Check&& ok) {
    if (o.threads <= 1) return kernels::serial::first_failure(count, ok);
    return kernels::omp::first_failure(count, ok, o.threads);
}

std::vector<std::uint64_t> histogram(const VerifyOptions& o, int m) {
    if (o.threads <= 1) return kernels::serial::ssp_block_histogram(m);
    return kernels::omp::ssp_block_histogram(m, o.threads);
}

CatSeq apply_forward(const VerifyOptions& o, const Partition& p) {
    return o.forward_map ? o.forward_map(p) : forward(p);
}

std::vector<CatSeq> sequences_by_text(int n) {
    auto seqs = generate_all(n);
    std::sort(seqs.begin(), seqs.end(),
              [](const CatSeq& a, const CatSeq& b) { return a.to_string() < b.to_string(); });
    return seqs;
}

CheckReport cardinality(const VerifyOptions& o) {
    const auto start = Clock::now();
    CheckReport r{"cardinality", range_text("n", 0, o.n_max)};
    for (int n = 0; n <= o.n_max; ++n) {
        const auto specials = enumerate_special(n).size();
        std::uint64_t sequences = 0;
        for_each_sequence(n, [&](std::span<const int>) { ++sequences; });
        const BigInt c = catalan(n);
        r.counts.push_back(specials);
        r.count_checked += specials + sequences;
        if (BigInt(specials) != c || BigInt(sequences) != c) {
            r.fail("n=" + std::to_string(n) + ": special=" + std::to_string(specials) +
                   " sequences=" + std::to_string(sequences) + " catalan=" + c.str());
        }
    }
    r.elapsed_ms = ms_since(start);
    return r;
}

CheckReport roundtrip_partitions(const VerifyOptions& o) {
    const auto start = Clock::now();
    CheckReport r{"roundtrip_partitions", range_text("n", 0, o.n_max)};
    for (int n = 0; n <= o.n_max && r.passed; ++n) {
        const auto parts = enumerate_special(n);
        r.count_checked += parts.size();
        auto bad = first_failure(o, parts.size(), [&](std::size_t i) {
            return inverse(apply_forward(o, parts[i])) == parts[i];
        });
        if (bad) r.fail(parts[*bad].to_string());
    }
    r.elapsed_ms = ms_since(start);
    return r;
}

CheckReport roundtrip_sequences(const VerifyOptions& o) {
    const auto start = Clock::now();
    CheckReport r{"roundtrip_sequences", range_text("n", 0, o.n_max)};
    for (int n = 0; n <= o.n_max && r.passed; ++n) {
        const auto seqs = sequences_by_text(n);
        r.count_checked += seqs.size();
        auto bad = first_failure(o, seqs.size(), [&](std::size_t i) {
            return apply_forward(o, inverse(seqs[i])) == seqs[i];
        });
        if (bad) r.fail("[" + seqs[*bad].to_string() + "]");
    }
    r.elapsed_ms = ms_since(start);
    return r;
}

bool well_defined_at(const VerifyOptions& o, const Partition& p) {
    const int n = p.ground_size() / 2;
    const DiffSeq d = difference_sequence(p);
    int zeros = 0;
    for (int i = 1; i <= p.ground_size(); ++i) {
        const int di = d.diffs[i - 1];
        if (di == 0) {
            ++zeros;
        } else if (di % 2 != 0 || i + di > p.ground_size()) {
            return false;
        }
    }
    if (zeros != n + 1) return false;
    const CatSeq a = apply_forward(o, p);
    if (static_cast<int>(a.size()) != n) return false;
    for (int j = 1; j <= n; ++j) {
        if (a.at(j) > j) return false;
    }
    return validate_sequence(a.entries());
}

CheckReport forward_well_defined(const VerifyOptions& o) {
    const auto start = Clock::now();
    CheckReport r{"forward_well_defined", range_text("n", 0, o.n_max)};
    for (int n = 0; n <= o.n_max && r.passed; ++n) {
        const auto parts = enumerate_special(n);
        r.count_checked += parts.size();
        auto bad = first_failure(o, parts.size(),
                                 [&](std::size_t i) { return well_defined_at(o, parts[i]); });
        if (bad) r.fail(parts[*bad].to_string());
    }
    r.elapsed_ms = ms_since(start);
    return r;
}

bool trace_ok(const CatSeq& s) {
    const auto n = s.size();
    const auto diagrams = inverse_trace(s).diagrams();
    for (std::size_t k = 0; k < diagrams.size(); ++k) {
        const Partition p = from_arcs(diagrams[k]);
        if (!is_special(p) || p.block_count() != n + 1 || decompose_pieces(p).size() != 1) {
            return false;
        }
        // Step k consumes s_{n-k+1}; the diagram changes iff that entry exceeds 1.
        if (k > 0 && (diagrams[k] == diagrams[k - 1]) != (s.at(n - k + 1) == 1)) return false;
    }
    return true;
}

CheckReport trace_invariants(const VerifyOptions& o) {
    const auto start = Clock::now();
    CheckReport r{"trace_invariants", range_text("n", 0, o.n_max)};
    for (int n = 0; n <= o.n_max && r.passed; ++n) {
        const auto seqs = sequences_by_text(n);
        r.count_checked += seqs.size();
        auto bad = first_failure(o, seqs.size(), [&](std::size_t i) { return trace_ok(seqs[i]); });
        if (bad) r.fail("[" + seqs[*bad].to_string() + "]");
    }
    r.elapsed_ms = ms_since(start);
    return r;
}

CheckReport corollaries(const VerifyOptions& o) {
    const auto start = Clock::now();
    CheckReport r{"corollaries", range_text("n", 0, o.n_max)};
    for (int n = 0; n <= o.n_max && r.passed; ++n) {
        const auto parts = enumerate_special(n);
        r.count_checked += parts.size();
        auto bad = first_failure(o, parts.size(), [&](std::size_t i) {
            return !corollary_violation(parts[i]).has_value();
        });
        if (bad) r.fail(corollary_violation(parts[*bad]).value_or(parts[*bad].to_string()));
    }
    r.elapsed_ms = ms_since(start);
    return r;
}

CheckReport floor_lemma(const VerifyOptions& o) {
    return check_floor_lemma_all(std::min(2 * o.n_max + 1, 20));
}

CheckReport min_blocks(const VerifyOptions& o) {
    const auto start = Clock::now();
    const int m_max = std::min(2 * o.n_max + 1, 13);
    CheckReport r{"min_ssp_blocks", range_text("m", 1, m_max)};
    for (int m = 1; m <= m_max; ++m) {
        const auto hist = histogram(o, m);
        const auto first = std::find_if(hist.begin(), hist.end(), [](auto c) { return c != 0; });
        for (auto c : hist) r.count_checked += c;
        const auto least = static_cast<int>(first - hist.begin());
        if (least != m / 2 + 1) {
            r.fail("m=" + std::to_string(m) + ": fewest blocks " + std::to_string(least) +
                   ", expected " + std::to_string(m / 2 + 1));
        }
    }
    r.elapsed_ms = ms_since(start);
    return r;
}

CheckReport max_ground(const VerifyOptions& o) {
    const auto start = Clock::now();
    const int b_max = std::min(o.n_max, 6);
    CheckReport r{"max_ground", range_text("b", 0, b_max)};
    for (int b = 0; b <= b_max; ++b) {
        ++r.count_checked;
        if (!check_max_ground(b)) r.fail("b=" + std::to_string(b));
    }
    r.elapsed_ms = ms_since(start);
    return r;
}

using Suite = CheckReport (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, Suite>>& suites() {
    static const std::vector<std::pair<std::string, Suite>> all{
        {"cardinality", cardinality},
        {"roundtrip_partitions", roundtrip_partitions},
        {"roundtrip_sequences", roundtrip_sequences},
        {"forward_well_defined", forward_well_defined},
        {"trace_invariants", trace_invariants},
        {"corollaries", corollaries},
        {"floor_sum_lemma", floor_lemma},
        {"min_ssp_blocks", min_blocks},
        {"max_ground", max_ground},
    };
    return all;
}

}  // namespace

const std::vector<std::string>& claim_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, suite] : suites()) out.push_back(name);
        return out;
    }();
    return names;
}

std::optional<CheckReport> run_claim(std::string_view name, const VerifyOptions& options) {
    for (const auto& [suite_name, suite] : suites()) {
        if (suite_name == name) return suite(options);
    }
    return std::nullopt;
}

std::vector<CheckReport> run_verify(const VerifyOptions& options) {
    std::vector<CheckReport> out;
    for (const auto& [name, suite] : suites()) out.push_back(suite(options));
    return out;
}

nlohmann::json verify_report_json(const VerifyOptions& options,
                                  const std::vector<CheckReport>& reports) {
    nlohmann::json claims = nlohmann::json::array();
    bool passed = true;
    for (const CheckReport& r : reports) {
        claims.push_back(to_json(r));
        passed = passed && r.passed;
    }
    return {{"schema", 1},
            {"n_max", options.n_max},
            {"threads", options.threads},
            {"status", passed ? "pass" : "fail"},
            {"claims", claims}};
}

}  // namespace ncpart
