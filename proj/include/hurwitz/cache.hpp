#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hurwitz/factorization.hpp"

namespace hurwitz {

struct CacheRecord {
    std::string kind;
    int g = 0;
    std::vector<int> mu;
    std::vector<int> nu;
    std::string value;  // "p/q" or "p"
    std::string engine_version;
    std::string timestamp;
};

// Append-only JSON-lines file, one record per line, last write wins.
// Records written by another engine version are kept on disk but never served.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path path);

    // $HURWITZ_CACHE, else ./hurwitz_cache.jsonl
    static std::filesystem::path default_path();

    std::optional<Rational> lookup(Kind kind, const FactorizationType& type) const;
    void store(Kind kind, const FactorizationType& type, const Rational& value);
    void reload();
    std::size_t size() const;
    const std::filesystem::path& path() const { return path_; }
    // lines that failed to parse on the last load
    std::size_t skipped_lines() const { return skipped_; }

private:
    using Key = std::tuple<std::string, int, std::vector<int>, std::vector<int>>;
    std::filesystem::path path_;
    std::map<Key, CacheRecord> records_;
    std::size_t skipped_ = 0;
    mutable std::mutex mutex_;
};

}  // namespace hurwitz
