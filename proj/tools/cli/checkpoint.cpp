#include "cli/checkpoint.hpp"

#include <fstream>
#include <sstream>

#include "cli/errors.hpp"

namespace carlitz::cli {

bool ScanCheckpoint::same_descriptor(const ScanCheckpoint& o) const {
    return q == o.q && p == o.p && s == o.s && modulus == o.modulus && task == o.task && dmin == o.dmin &&
           dmax == o.dmax && shard_start == o.shard_start && shard_end == o.shard_end && global_seed == o.global_seed;
}

void save_checkpoint(const std::filesystem::path& path, const ScanCheckpoint& cp) {
    Row doc;
    doc["q"] = cp.q;
    doc["p"] = cp.p;
    doc["s"] = cp.s;
    doc["modulus"] = cp.modulus;
    doc["task"] = cp.task;
    doc["dmin"] = cp.dmin;
    doc["dmax"] = cp.dmax;
    doc["degree"] = cp.degree;
    doc["shard"] = {{"start", cp.shard_start}, {"end", cp.shard_end ? Row(*cp.shard_end) : Row(nullptr)}};
    doc["completed_through"] = cp.completed_through;
    doc["found"] = cp.found;
    doc["global_seed"] = cp.global_seed;

    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw CliError("CheckpointWriteError", "cannot write " + tmp.string());
        f << doc.dump() << '\n';
        f.flush();
        if (!f) throw CliError("CheckpointWriteError", "cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::optional<ScanCheckpoint> load_checkpoint(const std::filesystem::path& path) {
    if (!std::filesystem::exists(path)) return std::nullopt;
    std::ifstream f(path, std::ios::binary);
    std::stringstream buf;
    buf << f.rdbuf();
    try {
        const Row doc = Row::parse(buf.str());
        ScanCheckpoint cp;
        cp.q = doc.at("q").get<std::uint64_t>();
        cp.p = doc.at("p").get<std::uint32_t>();
        cp.s = doc.at("s").get<std::uint32_t>();
        cp.modulus = doc.at("modulus").get<std::vector<std::uint32_t>>();
        cp.task = doc.at("task").get<std::string>();
        cp.dmin = doc.at("dmin").get<std::size_t>();
        cp.dmax = doc.at("dmax").get<std::size_t>();
        cp.degree = doc.at("degree").get<std::size_t>();
        const auto& shard = doc.at("shard");
        cp.shard_start = shard.at("start").get<std::uint64_t>();
        if (!shard.at("end").is_null()) cp.shard_end = shard.at("end").get<std::uint64_t>();
        cp.completed_through = doc.at("completed_through").get<std::int64_t>();
        for (const auto& r : doc.at("found")) cp.found.push_back(r);
        cp.global_seed = doc.at("global_seed").get<std::uint64_t>();
        if (cp.degree < cp.dmin || cp.degree > cp.dmax ||
            cp.completed_through < static_cast<std::int64_t>(cp.shard_start) - 1)
            throw CliError("CorruptCheckpoint", path.string() + ": progress fields out of range");
        return cp;
    } catch (const nlohmann::json::exception& e) {
        throw CliError("CorruptCheckpoint", path.string() + ": " + e.what());
    }
}

}  // namespace carlitz::cli
