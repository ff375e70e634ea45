#include <doctest.h>

#include <stdexcept>

#include "ncpart/bijection.hpp"
#include "ncpart/kernels.hpp"
#include "ncpart/oracles.hpp"
#include "ncpart/verify.hpp"

using namespace ncpart;

namespace {

nlohmann::json without_timings(nlohmann::json report) {
    report.erase("threads");
    for (auto& claim : report["claims"]) claim.erase("elapsed_ms");
    return report;
}

CatSeq all_ones_map(const Partition& p) {
    return CatSeq(std::vector<int>(static_cast<std::size_t>(p.ground_size() / 2), 1));
}

}  // namespace

TEST_CASE("OpenMP ssp histogram matches the serial reference") {
    for (int m = 1; m <= 14; ++m) {
        CAPTURE(m);
        const auto reference = kernels::serial::ssp_block_histogram(m);
        for (int threads : {1, 2, 4, 8}) {
            CHECK(kernels::omp::ssp_block_histogram(m, threads) == reference);
        }
        std::uint64_t total = 0;
        for (auto c : reference) total += c;
        if (m <= 9) CHECK(total == enumerate_ssp(m).size());
        for (int k = 0; k < m / 2 + 1; ++k) CHECK(reference[k] == 0);
        CHECK(reference[m / 2 + 1] > 0);
    }
}

TEST_CASE("first_failure returns the smallest failing index for any thread count") {
    auto ok = [](std::size_t i) { return i != 5000 && i != 7777 && i != 9001; };
    CHECK(kernels::serial::first_failure(10000, ok) == 5000);
    for (int threads : {1, 2, 3, 8}) {
        CHECK(kernels::omp::first_failure(10000, ok, threads) == 5000);
        CHECK_FALSE(kernels::omp::first_failure(4000, ok, threads));
    }
    auto throws_at = [](std::size_t i) {
        if (i == 123) throw std::runtime_error("boom");
        return true;
    };
    CHECK(kernels::serial::first_failure(1000, throws_at) == 123);
    CHECK(kernels::omp::first_failure(1000, throws_at, 4) == 123);
    CHECK_FALSE(kernels::serial::first_failure(0, ok));
}

TEST_CASE("verify passes and its report does not depend on the thread count") {
    VerifyOptions serial;
    serial.n_max = 6;
    VerifyOptions parallel = serial;
    parallel.threads = 4;
    const auto a = verify_report_json(serial, run_verify(serial));
    const auto b = verify_report_json(parallel, run_verify(parallel));
    CHECK(a["status"] == "pass");
    CHECK(a["schema"] == 1);
    CHECK(without_timings(a) == without_timings(b));
    CHECK(a["claims"].size() == claim_names().size());
}

TEST_CASE("verify counts per n for small n_max") {
    VerifyOptions o;
    o.n_max = 3;
    const auto report = run_claim("cardinality", o);
    REQUIRE(report);
    CHECK(report->passed);
    CHECK(report->counts == std::vector<std::uint64_t>{1, 1, 2, 5});

    o.n_max = 0;
    for (const CheckReport& r : run_verify(o)) {
        CAPTURE(r.claim);
        CHECK(r.passed);
    }
    CHECK_FALSE(run_claim("no_such_claim", o));
}

TEST_CASE("a corrupted forward map is caught with the smallest counterexample") {
    for (int threads : {1, 4}) {
        VerifyOptions o;
        o.n_max = 5;
        o.threads = threads;
        o.forward_map = all_ones_map;
        const auto reports = run_verify(o);
        const auto report = verify_report_json(o, reports);
        CHECK(report["status"] == "fail");
        for (const CheckReport& r : reports) {
            if (r.claim == "roundtrip_partitions") {
                CHECK_FALSE(r.passed);
                CHECK(r.counterexample == "1,5|2,4|3");
            }
            if (r.claim == "roundtrip_sequences") {
                CHECK_FALSE(r.passed);
                CHECK(r.counterexample == "[1 2]");
            }
            if (r.claim == "corollaries") CHECK(r.passed);
        }
    }
}
