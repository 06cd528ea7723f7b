#include "privscan/segments/extract.hpp"

#include <set>

#include "privscan/util/strings.hpp"

namespace privscan::segments {

SegmentMap extract_segments(const policy::PolicyDocument& doc, const Taxonomy& taxonomy) {
    SegmentMap out;
    for (const DataType& type : taxonomy.types) out[type.id]; // all types present

    for (const policy::Sentence& sentence : doc.sentences) {
        const std::string lower = util::to_lower(sentence.text);
        for (const DataType& type : taxonomy.types) {
            const auto it = taxonomy.lexicon.find(type.id);
            if (it == taxonomy.lexicon.end()) continue;
            for (const std::string& phrase : it->second) {
                if (!phrase_matches(lower, phrase)) continue;
                out[type.id].push_back(
                    PolicySegment{type.id, sentence.text, sentence.index, phrase});
                break; // one segment per (sentence, type)
            }
        }
    }
    return out;
}

SegmentStats segment_stats(const SegmentMap& result) {
    SegmentStats stats;
    std::set<std::size_t> distinct;
    for (const auto& [type, segments] : result) {
        stats.per_type[type] = segments.size();
        for (const PolicySegment& s : segments) distinct.insert(s.sentence_index);
    }
    stats.total_distinct_sentences = distinct.size();
    return stats;
}

} // namespace privscan::segments
