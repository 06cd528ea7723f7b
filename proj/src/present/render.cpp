#include "privscan/present/render.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "privscan/present/draw.hpp"

namespace privscan::present {

namespace {

constexpr int kTextScale = 2;
constexpr int kCardPad = 12;
constexpr int kTitleGap = 6;
constexpr int kCardRadius = 10;
constexpr int kBoxRadius = 6;
constexpr int kBoxStroke = 3;

constexpr Rgba kAccent{230, 57, 70, 255};     // detection outlines, leader line
constexpr Rgba kCardBg{252, 252, 252, 255};
constexpr Rgba kCardBorder{38, 50, 56, 255};
constexpr Rgba kTitleColor{16, 16, 16, 255};
constexpr Rgba kBodyColor{52, 58, 64, 255};

int card_width(int screen_width) { return static_cast<int>(std::lround(screen_width * 0.9)); }

std::vector<std::string> body_lines(const std::string& summary, int screen_width) {
    return wrap_text(summary, kTextScale, card_width(screen_width) - 2 * kCardPad);
}

int required_height(std::size_t n_body_lines, int /*screen_width*/) {
    const int lh = line_height(kTextScale);
    const int h = 2 * kCardPad + lh + kTitleGap + static_cast<int>(n_body_lines) * lh;
    return std::max(h, kMinCardHeight);
}

} // namespace

CppCard make_card(const std::vector<segments::PolicySegment>& segs, const DataType& type,
                  const std::vector<BoundingBox>& boxes, int screen_width, int screen_height,
                  const Summarizer& backend, std::vector<std::string>* warnings) {
    const SummaryResult summary = summarize(segs, type, backend, warnings);
    const int height = required_height(body_lines(summary.text, screen_width).size(), screen_width);

    const auto gap = select_gap(compute_gaps(screen_height, boxes));
    const CardPlacement placed = layout_card(gap, screen_width, screen_height, height);

    CppCard card;
    card.data_type = type.id;
    card.summary = summary.text;
    card.segment_count = static_cast<int>(segs.size());
    card.undisclosed = summary.undisclosed;
    card.box = placed.box;
    card.overflow = placed.overflow;
    return card;
}

AnnotatedImage render_annotated(const RasterImage& screen,
                                const std::vector<Detection>& detections, const CppCard& card,
                                const std::string& display_name) {
    AnnotatedImage out;
    out.data_type = card.data_type;
    out.card = card;
    out.image = screen;
    for (const Detection& d : detections) out.detection_boxes.push_back(d.box);

    for (const BoundingBox& box : out.detection_boxes) {
        draw_rounded_outline(out.image, box, kBoxRadius, kBoxStroke, kAccent);
    }

    // leader line to the detection box nearest the card center
    if (!out.detection_boxes.empty()) {
        const double ccx = (card.box.left + card.box.right) / 2.0;
        const double ccy = (card.box.top + card.box.bottom) / 2.0;
        const BoundingBox* nearest = nullptr;
        double best = 0.0;
        for (const BoundingBox& box : out.detection_boxes) {
            const double bx = (box.left + box.right) / 2.0;
            const double by = (box.top + box.bottom) / 2.0;
            const double d2 = (bx - ccx) * (bx - ccx) + (by - ccy) * (by - ccy);
            if (!nearest || d2 < best) {
                nearest = &box;
                best = d2;
            }
        }
        const int tx = (nearest->left + nearest->right) / 2;
        const int ty = (nearest->top + nearest->bottom) / 2;
        int sx = static_cast<int>(ccx), sy;
        if (ty < card.box.top) {
            sy = card.box.top;
        } else if (ty >= card.box.bottom) {
            sy = card.box.bottom - 1;
        } else {
            sy = std::clamp(ty, card.box.top, card.box.bottom - 1);
            sx = tx < card.box.left ? card.box.left : card.box.right - 1;
        }
        draw_line(out.image, sx, sy, tx, ty, 3, kAccent);
    }

    fill_rounded_rect(out.image, card.box, kCardRadius, kCardBg);
    draw_rounded_outline(out.image, card.box, kCardRadius, 2, kCardBorder);

    const int text_x = card.box.left + kCardPad;
    int text_y = card.box.top + kCardPad;
    draw_text(out.image, text_x, text_y, display_name, kTextScale, kTitleColor);
    text_y += line_height(kTextScale) + kTitleGap;
    for (const std::string& line : body_lines(card.summary, screen.width)) {
        draw_text(out.image, text_x, text_y, line, kTextScale, kBodyColor);
        text_y += line_height(kTextScale);
    }
    return out;
}

std::vector<AnnotatedImage> present(const RasterImage& screen,
                                    const std::vector<Detection>& detections,
                                    const segments::SegmentMap& segment_map,
                                    const Taxonomy& taxonomy, const Summarizer& summarizer,
                                    std::vector<std::string>* warnings) {
    if (detections.empty()) throw EmptyDetectionsError();

    std::map<std::string, std::vector<Detection>> by_type;
    for (const Detection& d : detections) by_type[d.data_type].push_back(d);

    struct Task {
        std::string id;
        const std::vector<Detection>* dets;
    };
    std::vector<Task> tasks;
    for (const auto& [id, dets] : by_type) tasks.push_back(Task{id, &dets});

    static const std::vector<segments::PolicySegment> kNoSegments;
    std::vector<AnnotatedImage> slots(tasks.size());
    std::vector<std::vector<std::string>> warning_slots(tasks.size());

    const int n = static_cast<int>(tasks.size());
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
        const Task& task = tasks[i];
        const DataType* type = taxonomy.find(task.id);
        const DataType fallback{task.id, task.id};
        if (!type) type = &fallback;

        auto seg_it = segment_map.find(task.id);
        const auto& segs = seg_it == segment_map.end() ? kNoSegments : seg_it->second;

        std::vector<BoundingBox> boxes;
        for (const Detection& d : *task.dets) boxes.push_back(d.box);

        CppCard card = make_card(segs, *type, boxes, screen.width, screen.height, summarizer,
                                 &warning_slots[i]);
        slots[i] = render_annotated(screen, *task.dets, card, type->display_name);
    }

    if (warnings) {
        for (const auto& slot : warning_slots) {
            warnings->insert(warnings->end(), slot.begin(), slot.end());
        }
    }
    return slots;
}

} // namespace privscan::present
