#pragma once

// Results cache: one JSON object per line, appended as results arrive.
// When a key appears more than once the last acceptable record wins, where
// an exact record is never displaced by a bound-only one.

#include "json.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>

namespace cvdw::cli {

struct CacheRecord {
    nlohmann::json key;
    nlohmann::json value;
    /// "exact" or a bound-only status.
    std::string status;
    std::string tool_version;
    std::string timestamp;

    bool is_exact() const { return status == "exact"; }
};

nlohmann::json to_json_record(const CacheRecord& r);
CacheRecord record_from_json(const nlohmann::json& j);

class ResultCache {
public:
    /// Loads any existing records. Malformed lines are skipped.
    explicit ResultCache(std::filesystem::path path);

    const std::filesystem::path& path() const { return path_; }

    std::optional<CacheRecord> lookup(const nlohmann::json& key) const;

    /// Appends the record unless it would replace an exact result with a
    /// bound-only one. Returns whether it was stored. Throws
    /// std::runtime_error if the file cannot be written.
    bool store(CacheRecord record);

    std::size_t size() const { return records_.size(); }

private:
    bool accept(const CacheRecord& record);

    std::filesystem::path path_;
    std::map<std::string, CacheRecord> records_;
};

/// Current UTC time as 2026-01-31T12:00:00Z.
std::string utc_timestamp();

}  // namespace cvdw::cli
