#include "privscan/policy/cache.hpp"

#include "json.hpp"

#include <cstdlib>
#include <fstream>

#include "privscan/util/assets.hpp"
#include "privscan/util/sha256.hpp"

namespace privscan::policy {

using nlohmann::json;

CacheStore::CacheStore(std::filesystem::path dir, std::chrono::seconds ttl)
    : dir_(std::move(dir)), ttl_(ttl) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw CacheIoError("cache: cannot create " + dir_.string() + ": " + ec.message());
}

CacheStore CacheStore::from_env() {
    const char* env = std::getenv("PRIVSCAN_CACHE_DIR");
    return CacheStore(env && *env ? std::filesystem::path(env)
                                  : std::filesystem::path(".privscan-cache"));
}

std::string CacheStore::key_for(const std::string& normalized_url) {
    return util::sha256_hex(normalized_url);
}

std::optional<std::string> CacheStore::lookup(const std::string& normalized_url) const {
    const std::string key = key_for(normalized_url);
    const auto meta_path = dir_ / (key + ".meta");
    const auto html_path = dir_ / (key + ".html");
    if (!std::filesystem::exists(meta_path) || !std::filesystem::exists(html_path)) {
        return std::nullopt;
    }

    std::string meta_bytes;
    try {
        meta_bytes = util::read_file(meta_path);
    } catch (const IoError& e) {
        throw CacheIoError(std::string("cache: ") + e.what());
    }
    const json meta = json::parse(meta_bytes, nullptr, false);
    if (meta.is_discarded() || !meta.contains("stored_at") ||
        !meta["stored_at"].is_number_integer()) {
        throw CacheIoError("cache: corrupt meta entry " + meta_path.string());
    }

    const auto stored_at = std::chrono::system_clock::time_point(
        std::chrono::seconds(meta["stored_at"].get<std::int64_t>()));
    if (std::chrono::system_clock::now() - stored_at > ttl_) {
        return std::nullopt; // stale
    }

    try {
        return util::read_file(html_path);
    } catch (const IoError& e) {
        throw CacheIoError(std::string("cache: ") + e.what());
    }
}

void CacheStore::store(const std::string& normalized_url, std::string_view html) const {
    const std::string key = key_for(normalized_url);
    const auto now_s = std::chrono::duration_cast<std::chrono::seconds>(
                           std::chrono::system_clock::now().time_since_epoch())
                           .count();
    json meta{{"url", normalized_url}, {"stored_at", now_s}};
    try {
        util::write_file(dir_ / (key + ".html"), html);
        util::write_file(dir_ / (key + ".meta"), meta.dump(2));
    } catch (const IoError& e) {
        throw CacheIoError(std::string("cache: ") + e.what());
    }
}

} // namespace privscan::policy
