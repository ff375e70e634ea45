#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ncpart/catalan_sequences.hpp"
#include "ncpart/oracles.hpp"
#include "ncpart/partition.hpp"

namespace ncpart {

inline constexpr int kDefaultNCeiling = 9;

struct VerifyOptions {
    int n_max = kDefaultNCeiling;
    /// 1 runs the serial reference kernels; more runs the OpenMP kernels.
    int threads = 1;
    /// Map under test; defaults to ncpart::forward. Tests swap in a broken map
    /// to confirm the suites catch it.
    std::function<CatSeq(const Partition&)> forward_map;
};

/// Names accepted by run_claim, in the order run_verify runs them.
const std::vector<std::string>& claim_names();

/// Runs one named suite; nullopt for an unknown name.
std::optional<CheckReport> run_claim(std::string_view name, const VerifyOptions& options);

/// Runs every suite. Counterexamples are the smallest failing instance by
/// size, then canonical text.
std::vector<CheckReport> run_verify(const VerifyOptions& options);

/// {"schema": 1, "n_max", "threads", "status", "claims": [...]}.
nlohmann::json verify_report_json(const VerifyOptions& options,
                                  const std::vector<CheckReport>& reports);

}  // namespace ncpart
