// Regenerates the bundled assets: icon templates, fixture pages, sidecars,
// the fixture policy document, the taxonomy, and the ground-truth boxes.
// Deterministic: same inputs produce byte-identical files.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "privscan/present/draw.hpp"
#include "privscan/raster.hpp"
#include "privscan/util/assets.hpp"
#include "privscan/util/png_io.hpp"

using privscan::BoundingBox;
using privscan::RasterImage;
using privscan::Rgba;
namespace draw = privscan::present;

namespace {

// ---- icon rasterizer: layered shapes, 4x4 supersampled coverage ----

// Icons are opaque rounded tiles with a contrasting glyph, like app icons.
// A template needs internal gray contrast for normalized correlation to
// discriminate; a flat silhouette would degenerate into an edge detector.
struct Layer {
    std::function<bool(double, double)> contains;
    Rgba color; // painted where the shape covers; later layers win
};

RasterImage rasterize_icon(int size, const std::vector<Layer>& layers) {
    RasterImage img(size, size, Rgba{0, 0, 0, 0});
    for (int y = 0; y < size; ++y) {
        for (int x = 0; x < size; ++x) {
            // premultiplied accumulation over a 4x4 sample grid
            int r = 0, g = 0, b = 0, a = 0;
            for (int sy = 0; sy < 4; ++sy) {
                for (int sx = 0; sx < 4; ++sx) {
                    const double px = x + (sx + 0.5) / 4.0;
                    const double py = y + (sy + 0.5) / 4.0;
                    const Rgba* hit = nullptr;
                    for (const Layer& layer : layers) {
                        if (layer.contains(px, py)) hit = &layer.color;
                    }
                    if (hit) {
                        r += hit->r;
                        g += hit->g;
                        b += hit->b;
                        a += 255;
                    }
                }
            }
            if (a > 0) {
                img.set(x, y, Rgba{static_cast<std::uint8_t>((r * 255 + a / 2) / a),
                                   static_cast<std::uint8_t>((g * 255 + a / 2) / a),
                                   static_cast<std::uint8_t>((b * 255 + a / 2) / a),
                                   static_cast<std::uint8_t>((a + 8) / 16)});
            }
        }
    }
    return img;
}

auto circle(double cx, double cy, double r) {
    return [=](double x, double y) {
        const double dx = x - cx, dy = y - cy;
        return dx * dx + dy * dy <= r * r;
    };
}

auto rect(double l, double t, double r, double b) {
    return [=](double x, double y) { return x >= l && x < r && y >= t && y < b; };
}

auto rrect(double l, double t, double r, double b, double rad) {
    return [=](double x, double y) {
        if (x < l || x >= r || y < t || y >= b) return false;
        const double nx = std::clamp(x, l + rad, r - rad);
        const double ny = std::clamp(y, t + rad, b - rad);
        const double dx = x - nx, dy = y - ny;
        return dx * dx + dy * dy <= rad * rad;
    };
}

auto triangle(double x1, double y1, double x2, double y2, double x3, double y3) {
    return [=](double x, double y) {
        auto side = [&](double ax, double ay, double bx, double by) {
            return (bx - ax) * (y - ay) - (by - ay) * (x - ax);
        };
        const double d1 = side(x1, y1, x2, y2);
        const double d2 = side(x2, y2, x3, y3);
        const double d3 = side(x3, y3, x1, y1);
        const bool neg = d1 < 0 || d2 < 0 || d3 < 0;
        const bool pos = d1 > 0 || d2 > 0 || d3 > 0;
        return !(neg && pos);
    };
}

auto capsule(double x0, double y0, double x1, double y1, double r) {
    return [=](double x, double y) {
        const double vx = x1 - x0, vy = y1 - y0;
        const double len2 = vx * vx + vy * vy;
        double t = len2 == 0 ? 0 : ((x - x0) * vx + (y - y0) * vy) / len2;
        t = std::clamp(t, 0.0, 1.0);
        const double dx = x - (x0 + t * vx), dy = y - (y0 + t * vy);
        return dx * dx + dy * dy <= r * r;
    };
}

auto lower_ring(double cx, double cy, double r_out, double r_in) {
    return [=](double x, double y) {
        if (y < cy) return false;
        const double dx = x - cx, dy = y - cy;
        const double d2 = dx * dx + dy * dy;
        return d2 <= r_out * r_out && d2 >= r_in * r_in;
    };
}

auto tile(Rgba bg) { return Layer{rrect(2, 2, 78, 78, 12), bg}; }

RasterImage icon_location() {
    const Rgba bg{233, 238, 250, 255};
    const Rgba ink{34, 64, 182, 255};
    return rasterize_icon(80, {
                                  tile(bg),
                                  {circle(40, 32, 19), ink},
                                  {triangle(25, 42, 55, 42, 40, 68), ink},
                                  {circle(40, 32, 8), bg},
                              });
}

RasterImage icon_camera() {
    const Rgba bg{240, 240, 243, 255};
    const Rgba ink{48, 48, 60, 255};
    return rasterize_icon(80, {
                                  tile(bg),
                                  {rect(30, 17, 50, 27), ink},
                                  {rrect(11, 25, 69, 62, 7), ink},
                                  {circle(40, 43, 13), bg},
                                  {circle(40, 43, 8), ink},
                              });
}

RasterImage icon_photos() {
    const Rgba bg{237, 244, 236, 255};
    const Rgba ink{28, 122, 74, 255};
    return rasterize_icon(80, {
                                  tile(bg),
                                  {rrect(10, 14, 70, 66, 6), ink},
                                  {rrect(19, 23, 61, 57, 4), bg},
                                  {circle(30, 33, 7), ink},
                                  {triangle(21, 55, 41, 31, 59, 55), ink},
                              });
}

RasterImage icon_account() {
    const Rgba bg{238, 236, 247, 255};
    const Rgba ink{82, 70, 160, 255};
    auto shoulders = [](double x, double y) {
        const double dx = x - 40, dy = y - 66;
        return y >= 46 && y < 66 && dx * dx + dy * dy * 2.6 <= 23 * 23;
    };
    return rasterize_icon(80, {
                                  tile(bg),
                                  {circle(40, 29, 13), ink},
                                  {shoulders, ink},
                              });
}

RasterImage icon_contacts() {
    const Rgba bg{247, 241, 233, 255};
    const Rgba ink{150, 88, 38, 255};
    // solid book cover with the person cut out of it
    auto cut_shoulders = [](double x, double y) {
        const double dx = x - 46, dy = y - 68;
        return y >= 50 && y < 64 && dx * dx + dy * dy * 2.4 <= 19 * 19;
    };
    return rasterize_icon(80, {
                                  tile(bg),
                                  {rrect(16, 10, 68, 70, 7), ink},
                                  {rect(24, 10, 28, 70), bg}, // spine groove
                                  {circle(46, 32, 9), bg},
                                  {cut_shoulders, bg},
                              });
}

RasterImage icon_microphone() {
    const Rgba bg{249, 238, 238, 255};
    const Rgba ink{178, 42, 60, 255};
    return rasterize_icon(80, {
                                  tile(bg),
                                  {capsule(40, 20, 40, 38, 10), ink},
                                  {lower_ring(40, 40, 17, 12), ink},
                                  {rect(37, 56, 43, 63), ink},
                                  {rect(28, 62, 52, 67), ink},
                              });
}

RasterImage icon_identifiers() {
    const Rgba bg{232, 242, 244, 255};
    const Rgba ink{20, 116, 130, 255};
    // badge: solid card, cut-out portrait circle and two text bars
    return rasterize_icon(80, {
                                  tile(bg),
                                  {rrect(10, 18, 70, 62, 7), ink},
                                  {circle(26, 40, 9), bg},
                                  {rect(42, 27, 64, 36), bg},
                                  {rect(42, 44, 64, 53), bg},
                              });
}

// ---- fixture pages ----

constexpr int kPageW = 540;
constexpr int kPageH = 960;
constexpr Rgba kPageBg{245, 246, 248, 255};
constexpr Rgba kBarBg{63, 81, 140, 255};
constexpr Rgba kCardBg{255, 255, 255, 255};
constexpr Rgba kInkDark{40, 44, 52, 255};
constexpr Rgba kInkMid{120, 126, 134, 255};

void blit_alpha(RasterImage& dst, const RasterImage& src, int ox, int oy) {
    for (int y = 0; y < src.height; ++y) {
        for (int x = 0; x < src.width; ++x) {
            const Rgba s = src.at(x, y);
            if (s.a == 0) continue;
            const int tx = ox + x, ty = oy + y;
            if (tx < 0 || ty < 0 || tx >= dst.width || ty >= dst.height) continue;
            const Rgba d = dst.at(tx, ty);
            const int a = s.a;
            dst.set(tx, ty,
                    Rgba{static_cast<std::uint8_t>((s.r * a + d.r * (255 - a)) / 255),
                         static_cast<std::uint8_t>((s.g * a + d.g * (255 - a)) / 255),
                         static_cast<std::uint8_t>((s.b * a + d.b * (255 - a)) / 255), 255});
        }
    }
}

RasterImage new_page(const std::string& title) {
    RasterImage page(kPageW, kPageH, kPageBg);
    draw::fill_rect(page, BoundingBox{0, 0, kPageW, 72}, kBarBg);
    draw::draw_text(page, 24, 24, title, 3, Rgba{255, 255, 255, 255});
    return page;
}

void text_row(RasterImage& page, const BoundingBox& box, const std::string& label) {
    draw::fill_rect(page, box, kCardBg);
    draw::draw_text(page, box.left + 16, (box.top + box.bottom) / 2 - 7, label, 2, kInkDark);
    draw::fill_rect(page, BoundingBox{box.left, box.bottom, box.right, box.bottom + 2},
                    Rgba{228, 230, 234, 255});
}

void feed_card(RasterImage& page, int top, int lines) {
    const BoundingBox card{28, top, kPageW - 28, top + 48 + lines * 26};
    draw::fill_rounded_rect(page, card, 8, kCardBg);
    for (int i = 0; i < lines; ++i) {
        draw::fill_rect(page,
                        BoundingBox{card.left + 18, top + 24 + i * 26,
                                    card.right - 18 - (i * 37) % 120, top + 38 + i * 26},
                        Rgba{214, 218, 224, 255});
    }
}

// ---- bundled documents ----

const char* kTaxonomyJson = R"({
  "types": [
    {"id": "account", "display_name": "Account"},
    {"id": "camera", "display_name": "Camera"},
    {"id": "contacts", "display_name": "Contacts"},
    {"id": "identifiers", "display_name": "Identifiers"},
    {"id": "location", "display_name": "Location"},
    {"id": "microphone", "display_name": "Microphone"},
    {"id": "photos", "display_name": "Photos"}
  ],
  "lexicon": {
    "account": ["account", "profile", "username"],
    "camera": ["camera"],
    "contacts": ["contacts", "address book"],
    "identifiers": ["identifier", "advertising id", "device id"],
    "location": ["location", "geolocation", "nearby"],
    "microphone": ["microphone", "voice recording"],
    "photos": ["photos", "gallery", "album", "media library"]
  },
  "templates": {
    "account": ["icons/account.png"],
    "camera": ["icons/camera.png"],
    "contacts": ["icons/contacts.png"],
    "identifiers": ["icons/identifiers.png"],
    "location": ["icons/location.png"],
    "microphone": ["icons/microphone.png"],
    "photos": ["icons/photos.png"]
  }
}
)";

const char* kPolicyHtml = R"(<!DOCTYPE html>
<html>
<head>
  <title>Privacy Policy &mdash; Dummy Shop</title>
  <style>body { font-family: sans-serif; } .x { color: #333; }</style>
  <script>console.log("analytics stub that must never reach the text");</script>
</head>
<body>
<nav><a href="/">Home</a> <a href="/policy">Policy</a></nav>
<h1>Privacy Policy</h1>
<p>This policy explains what we collect and why. It was last updated in June 2025.</p>
<h2>Data we collect</h2>
<p>We collect your precise location to show nearby offers and estimate delivery times.
Your account information, e.g. username and email address, is stored on our servers.
The app accesses your camera only while you take pictures for a posting.
Photos and media that you attach are uploaded from your gallery to our service.
We read your contacts only after you ask us to invite a friend, and we do not sell
your address book to anyone.</p>
<h2>Device access</h2>
<p>Voice recordings from the microphone are processed on the device and deleted after
transcription. Device identifiers such as the advertising id help us measure campaign
reach. Crash reports contain no personal data.</p>
<h2>Sharing</h2>
<p>We never sell personal data. Aggregated statistics may be shared with partners.
You can request deletion at any time; see the contact section. Payment processing is
handled by a third party under its own terms.</p>
</body>
</html>
)";

nlohmann::ordered_json sidecar(std::initializer_list<std::pair<BoundingBox, const char*>> rows) {
    nlohmann::ordered_json doc;
    auto& elements = doc["elements"] = nlohmann::ordered_json::array();
    for (const auto& [box, text] : rows) {
        nlohmann::ordered_json el;
        el["box"] = {box.left, box.top, box.right, box.bottom};
        el["text"] = text;
        elements.push_back(std::move(el));
    }
    return doc;
}

void write(const std::filesystem::path& path, const std::string& bytes) {
    std::filesystem::create_directories(path.parent_path());
    privscan::util::write_file(path.string(), bytes);
    std::printf("wrote %s (%zu bytes)\n", path.string().c_str(), bytes.size());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"regenerate the bundled privscan assets"};
    std::string out_dir = "assets";
    app.add_option("--out", out_dir, "target directory (default: ./assets)");
    CLI11_PARSE(app, argc, argv);
    const std::filesystem::path out(out_dir);

    using privscan::util::encode_png;

    // icon templates
    const RasterImage location = icon_location();
    const RasterImage camera = icon_camera();
    const RasterImage photos = icon_photos();
    const RasterImage account = icon_account();
    const RasterImage contacts = icon_contacts();
    const RasterImage microphone = icon_microphone();
    const RasterImage identifiers = icon_identifiers();
    write(out / "icons/location.png", encode_png(location));
    write(out / "icons/camera.png", encode_png(camera));
    write(out / "icons/photos.png", encode_png(photos));
    write(out / "icons/account.png", encode_png(account));
    write(out / "icons/contacts.png", encode_png(contacts));
    write(out / "icons/microphone.png", encode_png(microphone));
    write(out / "icons/identifiers.png", encode_png(identifiers));

    // home: one location icon plus location-related text (the mixed page)
    RasterImage home = new_page("Home");
    blit_alpha(home, location, 60, 150);
    draw::fill_rounded_rect(home, BoundingBox{160, 170, 480, 214}, 8, kCardBg);
    draw::draw_text(home, 172, 184, "Enable location services", 2, kInkDark);
    feed_card(home, 300, 4);
    feed_card(home, 480, 5);
    feed_card(home, 690, 3);
    draw::draw_text(home, 28, 868, "Pull to refresh", 2, kInkMid);
    write(out / "fixtures/home.png", encode_png(home));
    write(out / "fixtures/home.sidecar.json",
          sidecar({{BoundingBox{160, 170, 480, 214}, "Enable location services"},
                   {BoundingBox{28, 300, 512, 420}, "Daily digest"},
                   {BoundingBox{28, 480, 512, 630}, "Trending near you"},
                   {BoundingBox{28, 690, 512, 790}, "Editor picks"}})
              .dump(2));

    // posting: profile, camera, album icons; no sidecar (the icon-only page)
    RasterImage posting = new_page("New post");
    blit_alpha(posting, account, 60, 120);
    blit_alpha(posting, camera, 230, 120);
    blit_alpha(posting, photos, 400, 120);
    draw::fill_rounded_rect(posting, BoundingBox{28, 260, 512, 700}, 8, kCardBg);
    draw::draw_text(posting, 46, 282, "Write a caption", 2, kInkMid);
    feed_card(posting, 730, 3);
    write(out / "fixtures/posting.png", encode_png(posting));

    // settings: text rows only (the text-only page)
    RasterImage settings = new_page("Settings");
    text_row(settings, BoundingBox{0, 120, kPageW, 168}, "Account");
    text_row(settings, BoundingBox{0, 180, kPageW, 228}, "Notifications");
    text_row(settings, BoundingBox{0, 240, kPageW, 288}, "Display and brightness");
    text_row(settings, BoundingBox{0, 300, kPageW, 348}, "Storage");
    text_row(settings, BoundingBox{0, 360, kPageW, 408}, "About this app");
    write(out / "fixtures/settings.png", encode_png(settings));
    write(out / "fixtures/settings.sidecar.json",
          sidecar({{BoundingBox{0, 120, kPageW, 168}, "Account"},
                   {BoundingBox{0, 180, kPageW, 228}, "Notifications"},
                   {BoundingBox{0, 240, kPageW, 288}, "Display and brightness"},
                   {BoundingBox{0, 300, kPageW, 348}, "Storage"},
                   {BoundingBox{0, 360, kPageW, 408}, "About this app"}})
              .dump(2));

    // rewards: nothing personal-data related at all (the empty page)
    RasterImage rewards = new_page("Rewards");
    feed_card(rewards, 120, 2);
    feed_card(rewards, 240, 2);
    draw::draw_text(rewards, 28, 380, "Daily check-in", 2, kInkDark);
    draw::draw_text(rewards, 28, 420, "Points balance: 120", 2, kInkMid);
    draw::draw_text(rewards, 28, 460, "Redeem a gift", 2, kInkMid);
    write(out / "fixtures/rewards.png", encode_png(rewards));
    write(out / "fixtures/rewards.sidecar.json",
          sidecar({{BoundingBox{28, 372, 512, 400}, "Daily check-in"},
                   {BoundingBox{28, 412, 512, 440}, "Points balance: 120"},
                   {BoundingBox{28, 452, 512, 480}, "Redeem a gift"}})
              .dump(2));

    // documents and ground truth
    write(out / "fixtures/policy.html", kPolicyHtml);
    write(out / "taxonomy.json", kTaxonomyJson);

    nlohmann::ordered_json truth;
    truth["home"]["location"] = {{60, 150, 140, 230}};
    truth["posting"]["account"] = {{60, 120, 140, 200}};
    truth["posting"]["camera"] = {{230, 120, 310, 200}};
    truth["posting"]["photos"] = {{400, 120, 480, 200}};
    truth["settings"] = nlohmann::ordered_json::object();
    truth["rewards"] = nlohmann::ordered_json::object();
    write(out / "fixtures/truth.json", truth.dump(2));

    return 0;
}
