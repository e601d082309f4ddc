#include "cvdw/cache.hpp"

#include <fmt/chrono.h>
#include <fmt/format.h>

#include <chrono>
#include <fstream>
#include <stdexcept>

namespace cvdw::cli {

nlohmann::json to_json_record(const CacheRecord& r) {
    return {{"key", r.key},
            {"value", r.value},
            {"status", r.status},
            {"tool_version", r.tool_version},
            {"timestamp", r.timestamp}};
}

CacheRecord record_from_json(const nlohmann::json& j) {
    return {j.at("key"), j.at("value"), j.at("status").get<std::string>(),
            j.at("tool_version").get<std::string>(), j.at("timestamp").get<std::string>()};
}

ResultCache::ResultCache(std::filesystem::path path) : path_(std::move(path)) {
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            accept(record_from_json(nlohmann::json::parse(line)));
        } catch (const std::exception&) {
            // A torn final line from an interrupted run; the record is lost.
        }
    }
}

std::optional<CacheRecord> ResultCache::lookup(const nlohmann::json& key) const {
    const auto it = records_.find(key.dump());
    if (it == records_.end()) return std::nullopt;
    return it->second;
}

bool ResultCache::accept(const CacheRecord& record) {
    const auto id = record.key.dump();
    const auto it = records_.find(id);
    if (it != records_.end() && it->second.is_exact() && !record.is_exact()) return false;
    records_.insert_or_assign(id, record);
    return true;
}

bool ResultCache::store(CacheRecord record) {
    if (!accept(record)) return false;
    std::ofstream out(path_, std::ios::app);
    out << to_json_record(record).dump() << '\n';
    out.flush();
    if (!out) throw std::runtime_error("cannot write cache file " + path_.string());
    return true;
}

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    return fmt::format("{:%Y-%m-%dT%H:%M:%SZ}", fmt::gmtime(now));
}

}  // namespace cvdw::cli
