#pragma once

#include <chrono>
#include <filesystem>
#include <optional>
#include <string>

#include "privscan/errors.hpp"

namespace privscan::policy {

class CacheIoError : public Error {
public:
    using Error::Error;
};

/// Disk-backed HTML cache keyed by SHA-256 of the normalized URL. Each entry
/// is a `<key>.html` payload plus a `<key>.meta` JSON sidecar with the
/// original URL and the store time. Writes go through a temp file and an
/// atomic rename, so concurrent readers of a key never observe a torn entry.
class CacheStore {
public:
    static constexpr std::chrono::seconds kDefaultTtl{24 * 60 * 60};

    explicit CacheStore(std::filesystem::path dir, std::chrono::seconds ttl = kDefaultTtl);

    /// Cache dir from PRIVSCAN_CACHE_DIR (default ./.privscan-cache).
    static CacheStore from_env();

    /// Returns the cached HTML when a fresh entry exists.
    std::optional<std::string> lookup(const std::string& normalized_url) const;

    void store(const std::string& normalized_url, std::string_view html) const;

    const std::filesystem::path& dir() const { return dir_; }
    std::chrono::seconds ttl() const { return ttl_; }

    static std::string key_for(const std::string& normalized_url);

private:
    std::filesystem::path dir_;
    std::chrono::seconds ttl_;
};

} // namespace privscan::policy
