#pragma once

#include <memory>
#include <string>
#include <vector>

#include "privscan/segments/extract.hpp"
#include "privscan/types.hpp"

namespace privscan::present {

constexpr int kSummaryMaxChars = 280;    // UTF-8 code points, hard cap
constexpr int kSummaryPrefixChars = 277; // truncation prefix before the ellipsis

/// Summary backend. Implementations must be safe for concurrent run() calls.
class Summarizer {
public:
    virtual ~Summarizer() = default;
    virtual std::string name() const = 0;
    /// Produces the summary text for one data type's segments (non-empty
    /// input). Throws on backend failure; callers fall back.
    virtual std::string run(const std::vector<segments::PolicySegment>& segs,
                            const DataType& type) const = 0;
};

/// Extractive default: the first matching sentence, truncated to the limit.
class DeterministicSummarizer final : public Summarizer {
public:
    std::string name() const override { return "deterministic"; }
    std::string run(const std::vector<segments::PolicySegment>& segs,
                    const DataType& type) const override;
};

/// POSTs segments to an external completion endpoint and expects
/// {"summary": str} back. Only the transport contract lives here; any
/// failure throws and the caller falls back to the deterministic backend.
class ExternalHttpSummarizer final : public Summarizer {
public:
    ExternalHttpSummarizer(std::string url, std::string api_key);
    std::string name() const override { return "external"; }
    std::string run(const std::vector<segments::PolicySegment>& segs,
                    const DataType& type) const override;

private:
    std::string url_;
    std::string api_key_;
};

struct SummaryResult {
    std::string text;
    bool undisclosed = false;
};

/// Zero segments yield the fixed undisclosed text. Otherwise the backend
/// runs; on failure (throw or empty output) the deterministic backend takes
/// over and a note lands in `warnings`. Output never exceeds 280 code points.
SummaryResult summarize(const std::vector<segments::PolicySegment>& segs, const DataType& type,
                        const Summarizer& backend, std::vector<std::string>* warnings = nullptr);

/// Truncation rule: text over 280 code points becomes the 277-code-point
/// prefix cut at its last word boundary, plus an ellipsis.
std::string enforce_summary_limit(const std::string& text);

/// Backend by name: "deterministic", or "external" configured from
/// PRIVSCAN_SUMMARIZER_URL (required) and PRIVSCAN_SUMMARIZER_KEY. Any other
/// name throws.
std::unique_ptr<Summarizer> make_summarizer(const std::string& choice);

/// make_summarizer(PRIVSCAN_SUMMARIZER), defaulting to deterministic.
std::unique_ptr<Summarizer> summarizer_from_env();

} // namespace privscan::present
