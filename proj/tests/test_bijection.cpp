#include <doctest.h>

#include <algorithm>
#include <set>

#include "ncpart/bijection.hpp"
#include "ncpart/error.hpp"
#include "ncpart/oracles.hpp"
#include "support/brute.hpp"

using namespace ncpart;

namespace {

const char* const kPaperPi = "1,13|2,4,6,12|3|5|7,11|8,10|9";
const char* const kFig6Partition = "1,9,17|2,4,8|3|5,7|6|10,12,14,16|11|13|15";

std::vector<Arc> arcs_of(std::initializer_list<std::pair<int, int>> list) {
    std::vector<Arc> out;
    for (auto [l, r] : list) out.push_back({l, r});
    return out;
}

// Runs the stretching steps without validating the sequence first.
std::optional<Partition> stretch_unchecked(const std::vector<int>& s) {
    const int n = static_cast<int>(s.size());
    ArcDiagram d = initial_diagram(n);
    try {
        for (int i = 1; i <= n; ++i) d = stretch_step(d, i, s[n - i]);
    } catch (const StructureError&) {
        return std::nullopt;
    }
    return from_arcs(d);
}

}  // namespace

TEST_CASE("difference_sequence") {
    CHECK(difference_sequence(parse_partition(kPaperPi)).diffs ==
          std::vector<int>{12, 2, 0, 2, 0, 6, 4, 2, 0, 0, 0, 0, 0});
    CHECK(difference_sequence(parse_partition("1")).diffs == std::vector<int>{0});
    CHECK(difference_sequence(parse_partition("1,3,5|2|4")).diffs ==
          std::vector<int>{2, 0, 2, 0, 0});
    CHECK_THROWS_AS(difference_sequence(parse_partition("1,3|2,4|5")), ValidationError);
}

TEST_CASE("forward") {
    CHECK(forward(parse_partition(kPaperPi)) == CatSeq({1, 2, 3, 1, 1, 6}));
    CHECK(forward(parse_partition("1,5|2,4|3")) == CatSeq({1, 2}));
    for (int n = 0; n <= 8; ++n) {
        CHECK(forward(from_arcs(initial_diagram(n))) ==
              CatSeq(std::vector<int>(static_cast<std::size_t>(n), 1)));
    }
    CHECK_THROWS_AS(forward(parse_partition("1,3|2,4|5")), ValidationError);
    CHECK_THROWS_AS(forward(parse_partition("1|2|3")), ValidationError);
}

TEST_CASE("initial_diagram") {
    CHECK(initial_diagram(0).point_count() == 1);
    CHECK(initial_diagram(0).arcs().empty());
    CHECK(initial_diagram(2).arcs() == arcs_of({{1, 3}, {3, 5}}));
    const ArcDiagram six = initial_diagram(6);
    CHECK(six.point_count() == 13);
    CHECK(six.arcs().size() == 6);
    for (int n = 0; n <= 9; ++n) CHECK(is_special(from_arcs(initial_diagram(n))));
    CHECK(from_arcs(initial_diagram(2)).to_string() == "1,3,5|2|4");
}

TEST_CASE("stretch_step") {
    const ArcDiagram d1 = initial_diagram(8);
    const ArcDiagram d2 = stretch_step(d1, 1, 4);
    CHECK(d2.arcs() == arcs_of({{1, 9}, {2, 4}, {4, 6}, {6, 8}, {9, 11}, {11, 13}, {13, 15},
                                {15, 17}}));
    CHECK(stretch_step(d2, 2, 1) == d2);
    CHECK(stretch_step(d1, 5, 1) == d1);
    CHECK(stretch_step(initial_diagram(2), 1, 2).arcs() == arcs_of({{1, 5}, {2, 4}}));
    CHECK(from_arcs(stretch_step(initial_diagram(2), 1, 2)).to_string() == "1,5|2,4|3");
}

TEST_CASE("stretch_step rejects layouts that do not match") {
    const ArcDiagram d1 = initial_diagram(3);
    CHECK_THROWS_AS(stretch_step(d1, 1, 4), StructureError);  // runs past the last arc
    CHECK_THROWS_AS(stretch_step(d1, 0, 1), StructureError);
    CHECK_THROWS_AS(stretch_step(d1, 4, 1), StructureError);
    CHECK_THROWS_AS(stretch_step(d1, 1, 0), StructureError);
    const ArcDiagram d2 = stretch_step(d1, 1, 2);  // (1,5),(2,4),(5,7)
    CHECK_THROWS_AS(stretch_step(d2, 1, 1), StructureError);  // already stretched
    CHECK_THROWS_AS(stretch_step(d2, 2, 2), StructureError);  // (5,7) is not (4,6)
}

TEST_CASE("inverse") {
    CHECK(inverse(CatSeq({1, 2, 3, 1, 1, 6})).to_string() == kPaperPi);
    CHECK(inverse(CatSeq{}).to_string() == "1");
    CHECK(inverse(CatSeq({1, 1, 1, 4, 1, 2, 1, 4})).to_string() == kFig6Partition);
    CHECK(forward(parse_partition(kFig6Partition)) == CatSeq({1, 1, 1, 4, 1, 2, 1, 4}));
}

TEST_CASE("inverse_trace") {
    const ConstructionTrace t = inverse_trace(CatSeq({1, 1, 1, 4, 1, 2, 1, 4}));
    const auto d = t.diagrams();
    REQUIRE(d.size() == 9);
    CHECK(d[5] == d[6]);
    CHECK(d[6] == d[7]);
    CHECK(d[7] == d[8]);
    std::set<std::vector<Arc>> distinct;
    for (const ArcDiagram& x : d) distinct.insert(x.arcs());
    CHECK(distinct.size() == 4);
    CHECK(from_arcs(d.back()).to_string() == kFig6Partition);
    CHECK(t.steps[0].shifted.size() == 3);
    CHECK(t.steps[0].shifted[0].second == Arc{2, 4});

    const ConstructionTrace ones = inverse_trace(CatSeq({1, 1, 1, 1}));
    for (const ArcDiagram& x : ones.diagrams()) CHECK(x == ones.initial);

    const ConstructionTrace small = inverse_trace(CatSeq({1, 2}));
    REQUIRE(small.steps.size() == 2);
    CHECK(small.steps[0].result != small.initial);
    CHECK(small.steps[1].result == small.steps[0].result);
}

TEST_CASE("trace serialization") {
    const ConstructionTrace t = inverse_trace(CatSeq({1, 2}));
    CHECK(trace_to_text(t) ==
          "0 - - shifted=[] 1,3,5|2|4\n"
          "1 2 (1,3)->(1,5) shifted=[(3,5)->(2,4)] 1,5|2,4|3\n"
          "2 1 (2,4)->(2,4) shifted=[] 1,5|2,4|3\n");
    const auto j = trace_to_json(t);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 3);
    CHECK(j[1]["step"] == 1);
    CHECK(j[1]["value"] == 2);
    CHECK(j[1]["arc_after"] == nlohmann::json::array({1, 5}));
    CHECK(j[1]["shifted"][0]["to"] == nlohmann::json::array({2, 4}));
    CHECK(j[2]["partition"] == "1,5|2,4|3");
}

TEST_CASE("round trips over every object, n <= 9") {
    for (int n = 0; n <= 9; ++n) {
        CAPTURE(n);
        for (const Partition& p : enumerate_special(n)) REQUIRE(inverse(forward(p)) == p);
        for (const CatSeq& s : generate_all(n)) REQUIRE(forward(inverse(s)) == s);
    }
}

TEST_CASE("difference sequences and forward images are well formed, n <= 9") {
    for (int n = 0; n <= 9; ++n) {
        for (const Partition& p : enumerate_special(n)) {
            const DiffSeq d = difference_sequence(p);
            REQUIRE(d.diffs.size() == static_cast<std::size_t>(2 * n + 1));
            CHECK(std::count(d.diffs.begin(), d.diffs.end(), 0) == n + 1);
            for (int i = 1; i <= 2 * n + 1; ++i) {
                const int di = d.diffs[i - 1];
                if (di != 0) {
                    CHECK(di % 2 == 0);
                    CHECK(i + di <= 2 * n + 1);
                }
            }
            const CatSeq a = forward(p);
            for (int j = 1; j <= n; ++j) CHECK(a.at(j) <= j);
        }
    }
}

TEST_CASE("every intermediate diagram is special with one piece and n+1 blocks, n <= 8") {
    for (int n = 0; n <= 8; ++n) {
        for (const CatSeq& s : generate_all(n)) {
            const auto diagrams = inverse_trace(s).diagrams();
            for (std::size_t k = 0; k < diagrams.size(); ++k) {
                const Partition p = from_arcs(diagrams[k]);
                REQUIRE(is_special(p));
                REQUIRE(p.block_count() == static_cast<std::size_t>(n + 1));
                REQUIRE(decompose_pieces(p).size() == 1);
                if (k > 0) {
                    REQUIRE((diagrams[k] == diagrams[k - 1]) ==
                            (s.at(static_cast<std::size_t>(n) - k + 1) == 1));
                }
            }
        }
    }
}

TEST_CASE("the image of S_n under inverse is exactly the enumerated special set, n <= 9") {
    for (int n = 0; n <= 9; ++n) {
        std::set<std::string> from_sequences;
        for (const CatSeq& s : generate_all(n)) from_sequences.insert(inverse(s).to_string());
        std::set<std::string> enumerated;
        for (const Partition& p : enumerate_special(n)) enumerated.insert(p.to_string());
        CHECK(from_sequences == enumerated);
    }
}

TEST_CASE("stretching succeeds on exactly the sequences in S_n, n <= 7") {
    // Every s with 1 <= s_i <= i: the local arc checks alone reject exactly
    // the sequences that break condition (ii).
    for (int n = 0; n <= 7; ++n) {
        std::vector<int> s(static_cast<std::size_t>(n), 1);
        auto rec = [&](auto&& self, int pos) -> void {
            if (pos == n) {
                CAPTURE(format_sequence(s));
                const auto p = stretch_unchecked(s);
                REQUIRE(p.has_value() == validate_sequence(s));
                if (p) REQUIRE(forward(*p).entries() == s);
                return;
            }
            for (int v = 1; v <= pos + 1; ++v) {
                s[pos] = v;
                self(self, pos + 1);
            }
        };
        rec(rec, 0);
    }
}
