#include "privscan/present/draw.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "privscan/present/font5x7.hpp"

namespace privscan::present {

namespace {

char32_t next_codepoint(std::string_view s, std::size_t& i) {
    const unsigned char b0 = s[i];
    if (b0 < 0x80) {
        i += 1;
        return b0;
    }
    auto cont = [&](std::size_t k) {
        return i + k < s.size() && (static_cast<unsigned char>(s[i + k]) & 0xC0) == 0x80;
    };
    if ((b0 & 0xE0) == 0xC0 && cont(1)) {
        const char32_t cp = ((b0 & 0x1F) << 6) | (s[i + 1] & 0x3F);
        i += 2;
        return cp;
    }
    if ((b0 & 0xF0) == 0xE0 && cont(1) && cont(2)) {
        const char32_t cp = ((b0 & 0x0F) << 12) | ((s[i + 1] & 0x3F) << 6) | (s[i + 2] & 0x3F);
        i += 3;
        return cp;
    }
    if ((b0 & 0xF8) == 0xF0 && cont(1) && cont(2) && cont(3)) {
        const char32_t cp = ((b0 & 0x07) << 18) | ((s[i + 1] & 0x3F) << 12) |
                            ((s[i + 2] & 0x3F) << 6) | (s[i + 3] & 0x3F);
        i += 4;
        return cp;
    }
    i += 1;
    return 0xFFFD;
}

std::size_t codepoint_count(std::string_view s) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < s.size(); next_codepoint(s, i)) ++n;
    return n;
}

void put(RasterImage& img, int x, int y, Rgba color) {
    if (x < 0 || y < 0 || x >= img.width || y >= img.height) return;
    img.set(x, y, color);
}

bool inside_rounded(const BoundingBox& box, int radius, int x, int y) {
    if (x < box.left || y < box.top || x >= box.right || y >= box.bottom) return false;
    if (radius <= 0) return true;
    const int cx1 = box.left + radius, cx2 = box.right - 1 - radius;
    const int cy1 = box.top + radius, cy2 = box.bottom - 1 - radius;
    const int nx = std::clamp(x, cx1, cx2), ny = std::clamp(y, cy1, cy2);
    const int dx = x - nx, dy = y - ny;
    return dx * dx + dy * dy <= radius * radius;
}

} // namespace

void fill_rect(RasterImage& img, const BoundingBox& box, Rgba color) {
    const BoundingBox c = clip(box, img.width, img.height);
    if (!c.valid()) return;
    for (int y = c.top; y < c.bottom; ++y) {
        for (int x = c.left; x < c.right; ++x) img.set(x, y, color);
    }
}

void fill_rounded_rect(RasterImage& img, const BoundingBox& box, int radius, Rgba color) {
    if (!box.valid()) return;
    radius = std::clamp(radius, 0, std::min(box.width(), box.height()) / 2);
    const BoundingBox c = clip(box, img.width, img.height);
    for (int y = c.top; y < c.bottom; ++y) {
        for (int x = c.left; x < c.right; ++x) {
            if (inside_rounded(box, radius, x, y)) img.set(x, y, color);
        }
    }
}

void draw_rounded_outline(RasterImage& img, const BoundingBox& box, int radius, int thickness,
                          Rgba color) {
    if (!box.valid() || thickness < 1) return;
    radius = std::clamp(radius, 0, std::min(box.width(), box.height()) / 2);
    const BoundingBox inner{box.left + thickness, box.top + thickness, box.right - thickness,
                            box.bottom - thickness};
    const int inner_radius = std::max(0, radius - thickness);
    const BoundingBox c = clip(box, img.width, img.height);
    for (int y = c.top; y < c.bottom; ++y) {
        for (int x = c.left; x < c.right; ++x) {
            if (!inside_rounded(box, radius, x, y)) continue;
            if (inner.valid() && inside_rounded(inner, inner_radius, x, y)) continue;
            img.set(x, y, color);
        }
    }
}

void draw_line(RasterImage& img, int x0, int y0, int x1, int y1, int thickness, Rgba color) {
    const int steps = std::max(std::abs(x1 - x0), std::abs(y1 - y0));
    const int half = thickness / 2;
    for (int s = 0; s <= steps; ++s) {
        const double t = steps == 0 ? 0.0 : static_cast<double>(s) / steps;
        const int cx = static_cast<int>(std::lround(x0 + t * (x1 - x0)));
        const int cy = static_cast<int>(std::lround(y0 + t * (y1 - y0)));
        for (int dy = -half; dy <= half; ++dy) {
            for (int dx = -half; dx <= half; ++dx) put(img, cx + dx, cy + dy, color);
        }
    }
}

void draw_text(RasterImage& img, int x, int y, std::string_view utf8, int scale, Rgba color) {
    scale = std::max(1, scale);
    int pen = x;
    for (std::size_t i = 0; i < utf8.size();) {
        const char32_t cp = next_codepoint(utf8, i);
        const std::uint8_t* cols = font::glyph(cp);
        for (int cx = 0; cx < font::kGlyphWidth; ++cx) {
            for (int cy = 0; cy < font::kGlyphHeight; ++cy) {
                if (!(cols[cx] >> cy & 1)) continue;
                for (int sy = 0; sy < scale; ++sy) {
                    for (int sx = 0; sx < scale; ++sx) {
                        put(img, pen + cx * scale + sx, y + cy * scale + sy, color);
                    }
                }
            }
        }
        pen += font::kAdvance * scale;
    }
}

int text_width(std::string_view utf8, int scale) {
    return static_cast<int>(codepoint_count(utf8)) * font::kAdvance * std::max(1, scale);
}

int line_height(int scale) { return (font::kGlyphHeight + 2) * std::max(1, scale); }

std::vector<std::string> wrap_text(std::string_view utf8, int scale, int max_width_px) {
    const int advance = font::kAdvance * std::max(1, scale);
    const std::size_t max_chars = std::max<std::size_t>(1, max_width_px / advance);

    std::vector<std::string> words;
    std::size_t pos = 0;
    while (pos < utf8.size()) {
        const std::size_t sp = utf8.find(' ', pos);
        const std::string_view w =
            utf8.substr(pos, sp == std::string_view::npos ? std::string_view::npos : sp - pos);
        if (!w.empty()) words.emplace_back(w);
        if (sp == std::string_view::npos) break;
        pos = sp + 1;
    }

    std::vector<std::string> lines;
    std::string line;
    std::size_t line_chars = 0;
    auto flush = [&] {
        if (!line.empty()) {
            lines.push_back(std::move(line));
            line.clear();
            line_chars = 0;
        }
    };
    for (std::string& word : words) {
        std::size_t word_chars = codepoint_count(word);
        // hard-break words that cannot fit a line on their own
        while (word_chars > max_chars) {
            flush();
            std::size_t i = 0, taken = 0;
            while (taken < max_chars) {
                next_codepoint(word, i);
                ++taken;
            }
            lines.push_back(word.substr(0, i));
            word.erase(0, i);
            word_chars -= max_chars;
        }
        const std::size_t need = line_chars == 0 ? word_chars : line_chars + 1 + word_chars;
        if (need > max_chars) flush();
        if (line_chars == 0) {
            line = word;
            line_chars = codepoint_count(line);
        } else {
            line += ' ';
            line += word;
            line_chars = need;
        }
    }
    flush();
    if (lines.empty()) lines.emplace_back();
    return lines;
}

} // namespace privscan::present
