#include "privscan/policy/fetch.hpp"

#include "privscan/policy/html_text.hpp"
#include "privscan/policy/url.hpp"

namespace privscan::policy {

PolicyDocument make_policy_document(std::string source_url, std::string html, bool from_cache) {
    PolicyDocument doc;
    doc.source_url = std::move(source_url);
    doc.html = std::move(html);
    doc.text = html_to_text(doc.html);
    doc.fetched_at = std::chrono::system_clock::now();
    doc.from_cache = from_cache;

    if (doc.text.size() > kMaxPolicyTextBytes) {
        auto all = split_sentences(doc.text);
        std::size_t keep_end = 0;
        std::size_t keep_count = 0;
        for (const Sentence& s : all) {
            const std::size_t end = s.offset + s.text.size();
            if (end > kMaxPolicyTextBytes) break;
            keep_end = end;
            ++keep_count;
        }
        all.resize(keep_count);
        doc.text.resize(keep_end);
        doc.sentences = std::move(all);
        doc.truncated = true;
    } else {
        doc.sentences = split_sentences(doc.text);
    }
    return doc;
}

PolicyDocument fetch_policy(const std::string& url, const CacheStore& cache,
                            const HttpGet& fetcher) {
    const std::string normalized = normalize_url(url);

    if (auto cached = cache.lookup(normalized)) {
        return make_policy_document(normalized, std::move(*cached), /*from_cache=*/true);
    }

    FetchResponse resp = fetcher(normalized);
    if (resp.status == 0) {
        throw FetchError("policy fetch failed: " + normalized + ": " + resp.body, 0);
    }
    if (resp.status < 200 || resp.status >= 300) {
        throw FetchError(
            "policy fetch failed: " + normalized + ": HTTP " + std::to_string(resp.status),
            resp.status);
    }

    cache.store(normalized, resp.body);
    return make_policy_document(normalized, std::move(resp.body), /*from_cache=*/false);
}

} // namespace privscan::policy
