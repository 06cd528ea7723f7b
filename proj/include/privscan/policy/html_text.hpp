#pragma once

#include <string>
#include <string_view>

namespace privscan::policy {

/// Tolerant HTML-to-plain-text conversion:
///  - <script>/<style>/<nav> subtrees and comments are dropped,
///  - block-level elements become paragraph breaks (one '\n'),
///  - entities are decoded,
///  - whitespace runs collapse to single spaces.
/// Never throws; invalid UTF-8 passes through unchanged.
std::string html_to_text(std::string_view html);

} // namespace privscan::policy
