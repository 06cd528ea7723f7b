#include "privscan/policy/sentences.hpp"

#include <array>
#include <cctype>

#include "privscan/util/strings.hpp"

namespace privscan::policy {

namespace {

bool is_terminator(char c) { return c == '.' || c == '!' || c == '?'; }

bool is_abbreviation(const std::string& text, std::size_t dot, std::size_t start) {
    static const std::array<std::string_view, 7> kAbbrev = {
        "e.g.", "i.e.", "etc.", "vs.", "cf.", "inc.", "ltd."};
    std::size_t k = dot;
    while (k > start && !std::isspace(static_cast<unsigned char>(text[k - 1]))) --k;
    const std::string token = util::to_lower(std::string_view(text).substr(k, dot + 1 - k));
    for (auto a : kAbbrev) {
        if (token == a) return true;
    }
    return false;
}

// True when the terminator run ending at `last` closes a sentence:
// end of text, a following newline, or whitespace followed by an uppercase
// letter.
bool boundary_after(const std::string& text, std::size_t last) {
    std::size_t k = last + 1;
    if (k >= text.size()) return true;
    while (k < text.size() && (text[k] == ' ' || text[k] == '\t')) ++k;
    if (k >= text.size()) return true;
    if (text[k] == '\n') return true;
    if (k == last + 1) return false; // terminator glued to the next char
    return std::isupper(static_cast<unsigned char>(text[k])) != 0;
}

} // namespace

std::vector<Sentence> split_sentences(const std::string& text) {
    std::vector<Sentence> out;
    const std::size_t n = text.size();
    std::size_t start = 0;

    auto skip_ws = [&](std::size_t p) {
        while (p < n && std::isspace(static_cast<unsigned char>(text[p]))) ++p;
        return p;
    };

    start = skip_ws(0);
    std::size_t i = start;
    while (i < n) {
        if (is_terminator(text[i])) {
            std::size_t last = i;
            while (last + 1 < n && is_terminator(text[last + 1])) ++last;
            const bool lone_dot = last == i && text[i] == '.';
            const bool guarded = lone_dot && is_abbreviation(text, i, start);
            if (!guarded && boundary_after(text, last)) {
                out.push_back(Sentence{out.size(), text.substr(start, last + 1 - start), start});
                start = skip_ws(last + 1);
                i = start;
                continue;
            }
            i = last + 1;
            continue;
        }
        ++i;
    }

    if (start < n) {
        std::size_t end = n;
        while (end > start && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
        if (end > start) {
            out.push_back(Sentence{out.size(), text.substr(start, end - start), start});
        }
    }
    return out;
}

} // namespace privscan::policy
