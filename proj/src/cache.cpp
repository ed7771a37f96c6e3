#include "concordia/cache.hpp"

#include <sys/file.h>
#include <unistd.h>

#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace concordia {

InvariantCache::InvariantCache(std::string path) : path_(std::move(path)) { load(); }

void InvariantCache::load() {
    std::ifstream in(path_);
    if (!in) return;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded()) throw std::runtime_error("cache: malformed record in " + path_);
        records_[{j.at("key").get<std::string>(), j.at("invariant").get<std::string>()}] =
            j.at("value").get<std::string>();
    }
}

std::optional<std::string> InvariantCache::lookup(const std::string& key,
                                                  const std::string& invariant) const {
    auto it = records_.find({key, invariant});
    if (it == records_.end()) return std::nullopt;
    return it->second;
}

void InvariantCache::record(const std::string& key, const std::string& invariant,
                            const std::string& value) {
    auto it = records_.find({key, invariant});
    if (it != records_.end()) {
        if (it->second != value)
            throw std::runtime_error("cache: recomputation mismatch for '" + invariant +
                                     "' of " + key + ": cached " + it->second + ", computed " + value);
        return;
    }
    nlohmann::ordered_json j;
    j["key"] = key;
    j["invariant"] = invariant;
    j["value"] = value;
    j["version"] = kToolVersion;
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    j["timestamp"] = buf;

    FILE* f = std::fopen(path_.c_str(), "a");
    if (!f) throw std::runtime_error("cache: cannot open " + path_);
    int fd = fileno(f);
    if (flock(fd, LOCK_EX) != 0) {
        std::fclose(f);
        throw std::runtime_error("cache: cannot lock " + path_);
    }
    std::string line = j.dump();
    line.push_back('\n');
    std::fwrite(line.data(), 1, line.size(), f);
    std::fflush(f);
    flock(fd, LOCK_UN);
    std::fclose(f);
    records_[{key, invariant}] = value;
}

std::string resolve_cache_path(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("CONCORDIA_CACHE")) return env;
    return "concordia-cache.jsonl";
}

}  // namespace concordia
