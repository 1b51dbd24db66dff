#include "cli/scan_driver.hpp"

#include <algorithm>
#include <limits>

#include "carlitz/parallel.hpp"
#include "cli/checkpoint.hpp"
#include "cli/cli.hpp"
#include "cli/errors.hpp"

namespace carlitz::cli {

namespace {

ScanCheckpoint fresh_state(const ScanSettings& s) {
    ScanCheckpoint cp;
    cp.q = s.field->q();
    cp.p = s.field->p();
    cp.s = s.field->s();
    cp.modulus = s.field->modulus();
    cp.task = s.task;
    cp.dmin = s.dmin;
    cp.dmax = s.dmax;
    cp.degree = s.dmin;
    cp.shard_start = s.shard.begin;
    if (s.shard.end != std::numeric_limits<std::uint64_t>::max()) cp.shard_end = s.shard.end;
    cp.global_seed = s.seed;
    cp.completed_through = static_cast<std::int64_t>(shard_range(*s.field, s.dmin, s.shard).first) - 1;
    return cp;
}

}  // namespace

ScanResult run_scan(const ScanSettings& s, const CandidateFn& candidate) {
    if (s.dmin < 1 || s.dmin > s.dmax) throw usage_error("need 1 <= --dmin <= --dmax");
    if (s.block == 0) throw usage_error("--checkpoint-every must be positive");

    ScanCheckpoint state = fresh_state(s);
    if (s.checkpoint) {
        if (auto loaded = load_checkpoint(*s.checkpoint)) {
            if (!loaded->same_descriptor(state))
                throw CliError("CheckpointMismatch",
                               s.checkpoint->string() + " was written for a different field, task, range or seed");
            state = std::move(*loaded);
        }
    }

    ScanResult result;
    std::uint64_t budget = s.stop_after.value_or(std::numeric_limits<std::uint64_t>::max());
    auto save = [&] {
        if (s.checkpoint) save_checkpoint(*s.checkpoint, state);
    };

    for (std::size_t d = state.degree; d <= s.dmax; ++d) {
        const auto [lo, hi] = shard_range(*s.field, d, s.shard);
        if (d != state.degree) {
            state.degree = d;
            state.completed_through = static_cast<std::int64_t>(lo) - 1;
        }
        std::uint64_t i = std::max<std::uint64_t>(lo, static_cast<std::uint64_t>(state.completed_through + 1));
        while (i < hi) {
            if (budget == 0 || stop_requested()) {
                save();
                result.rows = state.found;
                return result;
            }
            const std::uint64_t end = i + std::min({hi - i, s.block, budget});
            auto rows = parallel_map_ordered(i, end, s.jobs, [&](std::uint64_t k) { return candidate(d, k); });
            for (auto& r : rows)
                if (r) state.found.push_back(std::move(*r));
            budget -= end - i;
            result.processed += end - i;
            i = end;
            state.completed_through = static_cast<std::int64_t>(end) - 1;
            save();
        }
    }
    save();
    result.rows = std::move(state.found);
    result.complete = true;
    return result;
}

}  // namespace carlitz::cli
