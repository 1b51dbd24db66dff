#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cli/records.hpp"

namespace carlitz::cli {

/// Resumable state of a scan. `degree` is the degree in progress and
/// `completed_through` the last enumeration index finished within it
/// (shard start - 1 when none).
struct ScanCheckpoint {
    std::uint64_t q = 0;
    std::uint32_t p = 0;
    std::uint32_t s = 0;
    std::vector<std::uint32_t> modulus;
    std::string task;
    std::size_t dmin = 0;
    std::size_t dmax = 0;
    std::size_t degree = 0;
    std::uint64_t shard_start = 0;
    std::optional<std::uint64_t> shard_end;  // nullopt: unbounded
    std::int64_t completed_through = -1;
    std::vector<Row> found;
    std::uint64_t global_seed = 0;

    /// Every descriptor except the progress fields.
    bool same_descriptor(const ScanCheckpoint& o) const;
};

/// Writes to a sibling temporary file and renames it over `path`.
void save_checkpoint(const std::filesystem::path& path, const ScanCheckpoint& cp);

/// nullopt when the file does not exist. Throws CorruptCheckpoint on
/// unreadable or malformed content.
std::optional<ScanCheckpoint> load_checkpoint(const std::filesystem::path& path);

}  // namespace carlitz::cli
