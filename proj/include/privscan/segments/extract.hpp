#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "privscan/policy/fetch.hpp"
#include "privscan/taxonomy.hpp"

namespace privscan::segments {

/// A verbatim policy sentence attributed to one data type.
struct PolicySegment {
    std::string data_type;
    std::string text;           // verbatim sentence
    std::size_t sentence_index = 0;
    std::string matched_phrase; // first lexicon phrase that fired
};

using SegmentMap = std::map<std::string, std::vector<PolicySegment>>;

/// Maps every data type to the sentences whose lowercase form contains one of
/// its lexicon phrases, in document order, deduplicated per sentence. A
/// sentence may appear under several types. Every declared type is present in
/// the result, possibly with an empty list.
SegmentMap extract_segments(const policy::PolicyDocument& doc, const Taxonomy& taxonomy);

struct SegmentStats {
    std::map<std::string, std::size_t> per_type;
    std::size_t total_distinct_sentences = 0;
};

SegmentStats segment_stats(const SegmentMap& result);

} // namespace privscan::segments
