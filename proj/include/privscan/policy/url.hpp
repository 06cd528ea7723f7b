#pragma once

#include <string>
#include <string_view>

#include "privscan/errors.hpp"

namespace privscan::policy {

class InvalidUrlError : public Error {
public:
    using Error::Error;
};

struct UrlParts {
    std::string scheme; // "http" or "https", lowercased
    std::string host;   // lowercased
    int port = 0;       // resolved (default applied)
    std::string path;   // begins with '/', never empty
    std::string query;  // without '?', may be empty
};

/// Parses an http(s) URL. Throws InvalidUrlError for other schemes or
/// unparseable input.
UrlParts parse_url(std::string_view raw);

/// Canonical form used as the cache key: lowercased scheme/host, default
/// port dropped, fragment removed, empty path becomes "/".
std::string normalize_url(std::string_view raw);

} // namespace privscan::policy
