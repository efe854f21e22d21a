#include "hurwitz/cache.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>

#include <json.hpp>

namespace hurwitz {

namespace {

std::string utc_now() {
    const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

ResultCache::ResultCache(std::filesystem::path path) : path_(std::move(path)) { reload(); }

std::filesystem::path ResultCache::default_path() {
    if (const char* env = std::getenv("HURWITZ_CACHE"); env && *env)
        return env;
    return "hurwitz_cache.jsonl";
}

void ResultCache::reload() {
    std::lock_guard lock(mutex_);
    records_.clear();
    skipped_ = 0;
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        try {
            const auto j = nlohmann::json::parse(line);
            CacheRecord r;
            r.kind = j.at("kind").get<std::string>();
            r.g = j.at("g").get<int>();
            r.mu = j.at("mu").get<std::vector<int>>();
            r.nu = j.at("nu").get<std::vector<int>>();
            r.value = j.at("value").get<std::string>();
            r.engine_version = j.at("engine_version").get<std::string>();
            r.timestamp = j.value("timestamp", "");
            parse_rational(r.value);
            records_[Key{r.kind, r.g, r.mu, r.nu}] = std::move(r);
        } catch (const std::exception&) {
            ++skipped_;  // torn or foreign line
        }
    }
}

std::optional<Rational> ResultCache::lookup(Kind kind, const FactorizationType& type) const {
    std::lock_guard lock(mutex_);
    auto it = records_.find(Key{to_string(kind), type.genus, type.mu.parts(), type.nu.parts()});
    if (it == records_.end() || it->second.engine_version != kEngineVersion)
        return std::nullopt;
    return parse_rational(it->second.value);
}

void ResultCache::store(Kind kind, const FactorizationType& type, const Rational& value) {
    std::lock_guard lock(mutex_);
    CacheRecord r{to_string(kind), type.genus, type.mu.parts(), type.nu.parts(),
                  to_string(value), kEngineVersion, utc_now()};
    nlohmann::json j = {{"kind", r.kind},   {"g", r.g},
                        {"mu", r.mu},       {"nu", r.nu},
                        {"value", r.value}, {"engine_version", r.engine_version},
                        {"timestamp", r.timestamp}};
    if (path_.has_parent_path())
        std::filesystem::create_directories(path_.parent_path());
    std::ofstream out(path_, std::ios::app);
    out << j.dump() << '\n';
    records_[Key{r.kind, r.g, r.mu, r.nu}] = std::move(r);
}

std::size_t ResultCache::size() const {
    std::lock_guard lock(mutex_);
    return records_.size();
}

}  // namespace hurwitz
