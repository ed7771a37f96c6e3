// Append-only invariant cache: one JSON record per line, guarded by an
// advisory file lock. Re-computation must reproduce any existing record.

#pragma once

#include <map>
#include <optional>
#include <string>

namespace concordia {

inline constexpr const char* kToolVersion = "concordia 0.1.0";

class InvariantCache {
public:
    explicit InvariantCache(std::string path);

    // Value for (canonical key, invariant name), if recorded.
    std::optional<std::string> lookup(const std::string& key, const std::string& invariant) const;

    // Append a record; throws std::runtime_error if a conflicting value for
    // the same (key, invariant) already exists.
    void record(const std::string& key, const std::string& invariant, const std::string& value);

    // All records, keyed by (key, invariant).
    const std::map<std::pair<std::string, std::string>, std::string>& records() const {
        return records_;
    }
    const std::string& path() const { return path_; }

private:
    std::string path_;
    std::map<std::pair<std::string, std::string>, std::string> records_;
    void load();
};

// Cache path resolution: explicit flag, else CONCORDIA_CACHE, else default.
std::string resolve_cache_path(const std::string& flag_value);

}  // namespace concordia
