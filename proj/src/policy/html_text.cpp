#include "privscan/policy/html_text.hpp"

#include <array>
#include <cctype>
#include <map>

#include "privscan/util/strings.hpp"

namespace privscan::policy {

namespace {

const std::map<std::string, std::string, std::less<>>& named_entities() {
    static const std::map<std::string, std::string, std::less<>> table = {
        {"amp", "&"},      {"lt", "<"},       {"gt", ">"},      {"quot", "\""},
        {"apos", "'"},     {"nbsp", " "},     {"copy", "\xC2\xA9"},
        {"rsquo", "\xE2\x80\x99"}, {"lsquo", "\xE2\x80\x98"},
        {"rdquo", "\xE2\x80\x9D"}, {"ldquo", "\xE2\x80\x9C"},
        {"ndash", "\xE2\x80\x93"}, {"mdash", "\xE2\x80\x94"},
        {"hellip", "\xE2\x80\xA6"},
    };
    return table;
}

bool is_block_tag(std::string_view name) {
    static const std::array<std::string_view, 30> kBlock = {
        "p",      "div",     "br",     "li",   "ul",      "ol",     "dl",   "dt",
        "dd",     "h1",      "h2",     "h3",   "h4",      "h5",     "h6",   "tr",
        "table",  "thead",   "tbody",  "blockquote",      "section", "article",
        "header", "footer",  "main",   "aside", "hr",     "pre",    "form", "fieldset"};
    for (auto b : kBlock) {
        if (b == name) return true;
    }
    return false;
}

std::string encode_utf8(std::uint32_t cp) {
    std::string out;
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x110000) {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
    return out;
}

// Decodes the entity starting at html[pos] ('&'). Returns the replacement and
// advances pos past the entity, or returns "&" and advances by one when the
// input does not look like an entity.
std::string decode_entity(std::string_view html, std::size_t& pos) {
    const std::size_t semi = html.find(';', pos + 1);
    if (semi == std::string_view::npos || semi - pos > 12) {
        ++pos;
        return "&";
    }
    std::string_view body = html.substr(pos + 1, semi - pos - 1);
    if (!body.empty() && body[0] == '#') {
        std::uint32_t cp = 0;
        bool ok = body.size() > 1;
        if (body.size() > 2 && (body[1] == 'x' || body[1] == 'X')) {
            for (std::size_t i = 2; i < body.size() && ok; ++i) {
                const char c = body[i];
                if (!std::isxdigit(static_cast<unsigned char>(c))) ok = false;
                cp = cp * 16 + (std::isdigit(static_cast<unsigned char>(c))
                                    ? c - '0'
                                    : std::tolower(static_cast<unsigned char>(c)) - 'a' + 10);
            }
        } else {
            for (std::size_t i = 1; i < body.size() && ok; ++i) {
                if (!std::isdigit(static_cast<unsigned char>(body[i]))) ok = false;
                cp = cp * 10 + (body[i] - '0');
            }
        }
        if (ok && cp > 0 && cp < 0x110000) {
            pos = semi + 1;
            return encode_utf8(cp);
        }
    } else {
        const auto& table = named_entities();
        if (auto it = table.find(util::to_lower(body)); it != table.end()) {
            pos = semi + 1;
            return it->second;
        }
    }
    ++pos;
    return "&";
}

// Returns the lowercased tag name starting at html[pos] (first char after '<'
// and optional '/').
std::string tag_name_at(std::string_view html, std::size_t pos) {
    std::string name;
    while (pos < html.size() && (std::isalnum(static_cast<unsigned char>(html[pos])))) {
        name.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(html[pos]))));
        ++pos;
    }
    return name;
}

// Advances past the current tag's closing '>', honoring quoted attributes.
std::size_t skip_tag(std::string_view html, std::size_t pos) {
    char quote = 0;
    while (pos < html.size()) {
        const char c = html[pos];
        if (quote) {
            if (c == quote) quote = 0;
        } else if (c == '"' || c == '\'') {
            quote = c;
        } else if (c == '>') {
            return pos + 1;
        }
        ++pos;
    }
    return pos;
}

// Finds the matching close tag (case-insensitive) and returns the position
// just past its '>'. Used for script/style/nav whose content is dropped.
std::size_t skip_subtree(std::string_view html, std::size_t pos, std::string_view name) {
    const std::string close = "</" + std::string(name);
    while (pos < html.size()) {
        const std::size_t lt = html.find('<', pos);
        if (lt == std::string_view::npos) return html.size();
        bool match = lt + close.size() <= html.size();
        for (std::size_t i = 0; match && i < close.size(); ++i) {
            if (std::tolower(static_cast<unsigned char>(html[lt + i])) != close[i]) match = false;
        }
        if (match) return skip_tag(html, lt);
        pos = lt + 1;
    }
    return html.size();
}

} // namespace

std::string html_to_text(std::string_view html) {
    std::string out;
    out.reserve(html.size() / 2);
    bool pending_space = false;
    bool pending_break = false;

    auto emit = [&](std::string_view chunk) {
        for (char c : chunk) {
            if (std::isspace(static_cast<unsigned char>(c))) {
                pending_space = true;
                continue;
            }
            if (!out.empty()) {
                if (pending_break) {
                    out.push_back('\n');
                } else if (pending_space) {
                    out.push_back(' ');
                }
            }
            pending_break = false;
            pending_space = false;
            out.push_back(c);
        }
    };

    std::size_t pos = 0;
    while (pos < html.size()) {
        const char c = html[pos];
        if (c == '<') {
            if (util::starts_with(html.substr(pos), "<!--")) {
                const std::size_t end = html.find("-->", pos + 4);
                pos = end == std::string_view::npos ? html.size() : end + 3;
                continue;
            }
            std::size_t name_pos = pos + 1;
            const bool closing = name_pos < html.size() && html[name_pos] == '/';
            if (closing) ++name_pos;
            const std::string name = tag_name_at(html, name_pos);
            if (name.empty()) { // stray '<' in text
                emit(html.substr(pos, 1));
                ++pos;
                continue;
            }
            if (!closing && (name == "script" || name == "style" || name == "nav")) {
                pos = skip_subtree(html, skip_tag(html, pos), name);
                pending_break = true;
                continue;
            }
            if (is_block_tag(name)) pending_break = true;
            pos = skip_tag(html, pos);
            continue;
        }
        if (c == '&') {
            emit(decode_entity(html, pos));
            continue;
        }
        emit(html.substr(pos, 1));
        ++pos;
    }
    return out;
}

} // namespace privscan::policy
