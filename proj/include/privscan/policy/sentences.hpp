#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace privscan::policy {

/// One sentence of the extracted policy text. `text` is the verbatim
/// substring of the source at [offset, offset + text.size()).
struct Sentence {
    std::size_t index = 0;
    std::string text;
    std::size_t offset = 0;
};

/// Splits normalized text on '.', '!' or '?' followed by whitespace plus an
/// uppercase letter, or by a newline. A fixed abbreviation list ("e.g.",
/// "i.e.", "etc.", ...) guards against false splits. Segmentation is
/// lossless: sentences plus the whitespace gaps between them reconstruct the
/// input exactly.
std::vector<Sentence> split_sentences(const std::string& text);

} // namespace privscan::policy
