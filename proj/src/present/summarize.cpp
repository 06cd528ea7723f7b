#include "privscan/present/summarize.hpp"

#include <cstdlib>

#include "httplib.h"
#include "json.hpp"

#include "privscan/errors.hpp"
#include "privscan/policy/url.hpp"
#include "privscan/util/strings.hpp"

namespace privscan::present {

std::string enforce_summary_limit(const std::string& raw) {
    // summaries are card text: fold newlines and tabs away before measuring
    const std::string text = util::normalize_whitespace(raw);
    if (util::utf8_length(text) <= kSummaryMaxChars) return text;
    std::string prefix{util::utf8_prefix(text, kSummaryPrefixChars)};
    const std::size_t cut = prefix.find_last_of(' ');
    if (cut != std::string::npos && cut > 0) prefix.resize(cut);
    while (!prefix.empty() && prefix.back() == ' ') prefix.pop_back();
    return prefix + "…";
}

std::string DeterministicSummarizer::run(const std::vector<segments::PolicySegment>& segs,
                                         const DataType&) const {
    if (segs.empty()) throw Error("deterministic summarizer requires segments");
    return enforce_summary_limit(segs.front().text);
}

ExternalHttpSummarizer::ExternalHttpSummarizer(std::string url, std::string api_key)
    : url_(std::move(url)), api_key_(std::move(api_key)) {}

std::string ExternalHttpSummarizer::run(const std::vector<segments::PolicySegment>& segs,
                                        const DataType& type) const {
    const policy::UrlParts parts = policy::parse_url(url_);
    const std::string origin =
        parts.scheme + "://" + parts.host + (parts.port ? ":" + std::to_string(parts.port) : "");
    std::string path = parts.path;
    if (!parts.query.empty()) path += "?" + parts.query;

    nlohmann::json body;
    body["data_type"] = type.id;
    body["display_name"] = type.display_name;
    auto& texts = body["segments"] = nlohmann::json::array();
    for (const auto& seg : segs) texts.push_back(seg.text);

    httplib::Client client(origin);
    client.set_connection_timeout(5, 0);
    client.set_read_timeout(10, 0);
    httplib::Headers headers;
    if (!api_key_.empty()) headers.emplace("Authorization", "Bearer " + api_key_);

    auto res = client.Post(path, headers, body.dump(), "application/json");
    if (!res) throw Error("summarizer endpoint unreachable: " + httplib::to_string(res.error()));
    if (res->status != 200) {
        throw Error("summarizer endpoint returned status " + std::to_string(res->status));
    }
    const auto parsed = nlohmann::json::parse(res->body, nullptr, false);
    if (parsed.is_discarded() || !parsed.contains("summary") || !parsed["summary"].is_string()) {
        throw Error("summarizer endpoint returned malformed body");
    }
    return parsed["summary"].get<std::string>();
}

SummaryResult summarize(const std::vector<segments::PolicySegment>& segs, const DataType& type,
                        const Summarizer& backend, std::vector<std::string>* warnings) {
    if (segs.empty()) {
        return SummaryResult{"No disclosure found for " + type.display_name + ".", true};
    }

    std::string text;
    try {
        text = backend.run(segs, type);
    } catch (const std::exception& e) {
        text.clear();
        if (warnings) {
            warnings->push_back("summarizer '" + backend.name() + "' failed for '" + type.id +
                                "' (" + e.what() + "); using deterministic fallback");
        }
    }
    if (text.empty()) text = DeterministicSummarizer().run(segs, type);
    return SummaryResult{enforce_summary_limit(text), false};
}

std::unique_ptr<Summarizer> make_summarizer(const std::string& choice) {
    if (choice == "deterministic") return std::make_unique<DeterministicSummarizer>();
    if (choice == "external") {
        const char* url = std::getenv("PRIVSCAN_SUMMARIZER_URL");
        if (!url || !*url) {
            throw Error("the external summarizer requires PRIVSCAN_SUMMARIZER_URL");
        }
        const char* key = std::getenv("PRIVSCAN_SUMMARIZER_KEY");
        return std::make_unique<ExternalHttpSummarizer>(url, key ? key : "");
    }
    throw Error("unknown summarizer choice '" + choice + "'");
}

std::unique_ptr<Summarizer> summarizer_from_env() {
    const char* choice = std::getenv("PRIVSCAN_SUMMARIZER");
    return make_summarizer(choice && *choice ? choice : "deterministic");
}

} // namespace privscan::present
