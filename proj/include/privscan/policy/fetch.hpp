#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include "privscan/errors.hpp"
#include "privscan/policy/cache.hpp"
#include "privscan/policy/sentences.hpp"

namespace privscan::policy {

class FetchError : public Error {
public:
    FetchError(const std::string& what, int status) : Error(what), status_(status) {}
    /// Upstream HTTP status; 0 for transport-level failures.
    int status() const { return status_; }

private:
    int status_;
};

struct FetchResponse {
    int status = 0; // 0 = transport error, body carries the message
    std::string body;
};

/// Network capability. Production code uses make_http_fetcher(); tests inject
/// counting stubs.
using HttpGet = std::function<FetchResponse(const std::string& url)>;

/// A fetched privacy policy: raw HTML plus extracted, sentence-segmented
/// plain text. Text longer than 2 MB is cut at the last whole sentence and
/// flagged `truncated`.
struct PolicyDocument {
    std::string source_url; // normalized
    std::string html;
    std::string text;
    std::vector<Sentence> sentences;
    std::chrono::system_clock::time_point fetched_at;
    bool from_cache = false;
    bool truncated = false;
};

inline constexpr std::size_t kMaxPolicyTextBytes = 2 * 1024 * 1024;

/// Cache-first policy retrieval. A fresh cache entry costs zero network
/// calls; a miss performs exactly one GET and persists the HTML. Failed
/// fetches never poison the cache.
/// Throws InvalidUrlError, FetchError, CacheIoError.
PolicyDocument fetch_policy(const std::string& url, const CacheStore& cache,
                            const HttpGet& fetcher);

/// Builds the text/sentence view of raw HTML (shared by hit and miss paths).
PolicyDocument make_policy_document(std::string source_url, std::string html, bool from_cache);

/// Real HTTP(S) GET via cpp-httplib.
HttpGet make_http_fetcher(std::chrono::seconds timeout = std::chrono::seconds(15));

} // namespace privscan::policy
