// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "ncpart/bijection.hpp"
#include "ncpart/catalan_sequences.hpp"
#include "ncpart/oracles.hpp"
#include "ncpart/render.hpp"

using namespace ncpart;

namespace {

const std::string kPaperPi = "1,13|2,4,6,12|3|5|7,11|8,10|9";
const std::string kFig6Partition = "1,9,17|2,4,8|3|5,7|6|10,12,14,16|11|13|15";

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
    return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Outcome {
    bool pass;
    std::string detail;
};

Outcome paper_example() {
    const Partition pi = parse_partition(kPaperPi);
    const CatSeq image = forward(pi);
    const Partition back = inverse(image);
    const bool ok = image == CatSeq({1, 2, 3, 1, 1, 6}) && back.to_string() == kPaperPi;
    return {ok, "forward=[" + image.to_string() + "] inverse=" + back.to_string()};
}

Outcome lemma_example() {
    const std::vector<std::vector<int>> t_rows{
        {1, 1, 1, 1, 1, 1, 1, 4}, {1, 1, 1, 1, 1, 1, 1, 4}, {1, 1, 1, 1, 1, 2, 1, 4},
        {1, 1, 1, 1, 1, 2, 1, 4}, {1, 1, 1, 4, 1, 2, 1, 4}};
    const std::vector<std::vector<int>> g_rows{
        {1, 2, 3, 4, 1, 2, 3, 4}, {1, 2, 3, 4, 1, 2, 1, 4}, {1, 2, 3, 4, 1, 2, 1, 4},
        {1, 2, 3, 4, 1, 2, 1, 4}, {1, 2, 3, 4, 1, 2, 1, 4}};
    const auto states = replay_choices(8, std::vector<int>{4, 1, 2, 1, 4});
    bool ok = states.size() == 6 && states[0].bounds() == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8};
    for (std::size_t i = 0; ok && i < 5; ++i) {
        ok = states[i + 1].values() == t_rows[i] && governing_bounds(states[i + 1]) == g_rows[i];
    }
    return {ok, "g^2=[" + format_sequence(governing_bounds(states[2])) + "]"};
}

Outcome cardinality() {
    const auto start = Clock::now();
    std::string detail;
    bool ok = true;
    for (int n = 0; n <= 9; ++n) {
        const auto special = enumerate_special(n).size();
        std::size_t sequences = 0;
        for_each_sequence(n, [&](std::span<const int>) { ++sequences; });
        ok = ok && BigInt(special) == catalan(n) && BigInt(sequences) == catalan(n);
        detail += (n ? "," : "") + std::to_string(special);
    }
    const double secs = seconds_since(start);
    return {ok && secs < 60.0, "counts=" + detail + " time=" + std::to_string(secs) + "s (<60s)"};
}

Outcome round_trips() {
    std::size_t failures = 0, checked = 0;
    for (int n = 0; n <= 9; ++n) {
        for (const Partition& p : enumerate_special(n)) {
            ++checked;
            if (!(inverse(forward(p)) == p)) ++failures;
        }
        for (const CatSeq& s : generate_all(n)) {
            ++checked;
            if (!(forward(inverse(s)) == s)) ++failures;
        }
    }
    return {failures == 0,
            "checked=" + std::to_string(checked) + " failures=" + std::to_string(failures)};
}

Outcome block_bound() {
    const auto start = Clock::now();
    bool ok = true;
    for (int m = 1; m <= 13; ++m) ok = ok && min_ssp_blocks(m) == m / 2 + 1;
    for (int b = 0; b <= 6; ++b) ok = ok && check_max_ground(b);
    const double secs = seconds_since(start);
    return {ok && secs < 120.0, "m=1..13, b=0..6 time=" + std::to_string(secs) + "s (<120s)"};
}

Outcome corollaries() {
    std::uint64_t checked = 0;
    for (int n = 0; n <= 9; ++n) {
        const CheckReport r = check_corollaries(n);
        checked += r.count_checked;
        if (!r.passed) return {false, "n=" + std::to_string(n) + " " + *r.counterexample};
    }
    return {true, "partitions=" + std::to_string(checked) + " counterexamples=0"};
}

Outcome floor_lemma() {
    const auto start = Clock::now();
    const CheckReport r = check_floor_lemma_all(12);
    bool counts_ok = r.counts.size() == 12;
    for (std::size_t i = 0; counts_ok && i < r.counts.size(); ++i) {
        counts_ok = r.counts[i] == (std::uint64_t{1} << i);
    }
    const double secs = seconds_since(start);
    return {r.passed && counts_ok && secs < 5.0,
            "compositions=" + std::to_string(r.count_checked) + " (n=12: " +
                std::to_string(r.counts.empty() ? 0 : r.counts.back()) +
                ") time=" + std::to_string(secs) + "s (<5s)"};
}

Outcome figure_trace() {
    const CatSeq s({1, 1, 1, 4, 1, 2, 1, 4});
    const auto d = inverse_trace(s).diagrams();
    std::set<std::vector<Arc>> distinct;
    for (const ArcDiagram& x : d) distinct.insert(x.arcs());
    const Partition final_partition = from_arcs(d.back());
    const bool ok = d.size() == 9 && distinct.size() == 4 && d[5] == d[6] && d[6] == d[7] &&
                    d[7] == d[8] && forward(final_partition) == s &&
                    final_partition.to_string() == kFig6Partition;
    return {ok, "distinct=" + std::to_string(distinct.size()) + " final=" +
                    final_partition.to_string()};
}

Outcome render_determinism() {
    const ArcDiagram d = to_arcs(parse_partition(kPaperPi));
    const std::string a = render_svg(d);
    const std::string b = render_svg(d);
    std::size_t paths = 0;
    for (auto pos = a.find("<path"); pos != std::string::npos; pos = a.find("<path", pos + 1)) {
        ++paths;
    }
    bool well_formed = true;
    try {
        std::istringstream in(a);
        boost::property_tree::ptree tree;
        boost::property_tree::read_xml(in, tree);
        well_formed = tree.count("svg") == 1;
    } catch (const std::exception&) {
        well_formed = false;
    }
    return {a == b && paths == 6 && well_formed,
            "identical=" + std::string(a == b ? "yes" : "no") + " paths=" +
                std::to_string(paths) + " xml=" + (well_formed ? "ok" : "bad")};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 worked example forward/inverse", paper_example},
        {"2 governing-sequence example n=8", lemma_example},
        {"3 cardinality n=0..9", cardinality},
        {"4 bijection round trips n<=9", round_trips},
        {"5 SSP block lower bound and max ground", block_bound},
        {"6 corollaries n<=9", corollaries},
        {"7 floor-sum lemma n<=12", floor_lemma},
        {"8 construction trace 1 1 1 4 1 2 1 4", figure_trace},
        {"9 SVG determinism", render_determinism},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o{false, ""};
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s  %s  [%s]\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
        if (!o.pass) ++failed;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
                criteria.size());
    return failed == 0 ? 0 : 1;
}
