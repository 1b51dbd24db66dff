#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "carlitz/scan.hpp"
#include "cli/records.hpp"

namespace carlitz::cli {

struct ScanSettings {
    std::string task;
    FieldPtr field;
    std::size_t dmin = 1;
    std::size_t dmax = 1;
    Shard shard;
    unsigned jobs = 1;
    std::uint64_t seed = 0;
    std::optional<std::filesystem::path> checkpoint;
    std::uint64_t block = 1024;
    /// Stop after this many candidates in this invocation, as if interrupted.
    std::optional<std::uint64_t> stop_after;
};

struct ScanResult {
    std::vector<Row> rows;
    bool complete = false;
    std::uint64_t processed = 0;
};

/// Row for enumeration index i of degree d, or nullopt when the candidate
/// produces no record. Must be pure.
using CandidateFn = std::function<std::optional<Row>(std::size_t d, std::uint64_t i)>;

/// Walks degrees dmin..dmax and the shard's indices in blocks, evaluating
/// each block in parallel and appending its rows in index order. After each
/// block the checkpoint (if any) is rewritten. Resuming from a checkpoint
/// continues at completed_through + 1 and yields the same rows as an
/// uninterrupted run.
ScanResult run_scan(const ScanSettings& settings, const CandidateFn& candidate);

}  // namespace carlitz::cli
