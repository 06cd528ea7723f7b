#include "privscan/detect/match.hpp"

#include <algorithm>
#include <cmath>

#include "privscan/detect/gray.hpp"
#include "privscan/detect/ncc.hpp"
#include "privscan/detect/nms.hpp"
#include "privscan/geometry.hpp"
#include "privscan/util/strings.hpp"

namespace privscan::detect {

namespace {

struct MatchTask {
    const IconTemplate* tpl = nullptr;
    int scaled_w = 0;
    int scaled_h = 0;
};

std::vector<MatchTask> build_tasks(const TemplateLibrary& lib, const DetectionParams& params,
                                   int screen_w, int screen_h,
                                   std::vector<std::string>* warnings) {
    std::vector<MatchTask> tasks;
    for (const IconTemplate& entry : lib.entries()) {
        for (double scale : params.scales) {
            const int w = static_cast<int>(std::lround(entry.image.width * scale));
            const int h = static_cast<int>(std::lround(entry.image.height * scale));
            if (w < 1 || h < 1) continue;
            if (w > screen_w || h > screen_h) {
                if (warnings) {
                    warnings->push_back("template '" + entry.data_type + "' at scale " +
                                        std::to_string(scale) + " exceeds the screen; skipped");
                }
                continue;
            }
            tasks.push_back(MatchTask{&entry, w, h});
        }
    }
    return tasks;
}

std::vector<Detection> run_task(const ScreenSpectra& spectra, const MatchTask& task,
                                const DetectionParams& params) {
    RasterImage scaled = resize_bilinear(task.tpl->image, task.scaled_w, task.scaled_h);
    MaskedTemplate masked = make_masked_template(scaled);
    if (!masked.usable()) return {};

    ScoreMap scores = ncc_score_map(spectra, masked);
    std::vector<Detection> out;
    for (const Peak& p : find_peaks(scores, params.ncc_threshold)) {
        Detection d;
        d.box = BoundingBox{p.x, p.y, p.x + task.scaled_w, p.y + task.scaled_h};
        d.data_type = task.tpl->data_type;
        d.score = p.score;
        d.source = DetectionSource::kIcon;
        out.push_back(d);
    }
    return out;
}

} // namespace

std::vector<Detection> match_icons(const RasterImage& screen, const TemplateLibrary& lib,
                                   const DetectionParams& params, ExecMode mode,
                                   std::vector<std::string>* warnings) {
    params.validate();
    if (!screen.valid() || lib.empty()) return {};

    const std::vector<MatchTask> tasks =
        build_tasks(lib, params, screen.width, screen.height, warnings);
    if (tasks.empty()) {
        // every scale of every template was larger than the screen
        if (warnings) {
            warnings->push_back("no template fits the screen at any scale; icon matching skipped");
        }
        return {};
    }

    const GrayImage gray = to_gray(screen);
    const ScreenSpectra spectra(gray);

    std::vector<std::vector<Detection>> slots(tasks.size());
    const int n = static_cast<int>(tasks.size());
    if (mode == ExecMode::kParallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < n; ++i) {
            slots[i] = run_task(spectra, tasks[i], params);
        }
    } else {
        for (int i = 0; i < n; ++i) {
            slots[i] = run_task(spectra, tasks[i], params);
        }
    }

    std::vector<Detection> out;
    for (const auto& slot : slots) {
        out.insert(out.end(), slot.begin(), slot.end());
    }
    return out;
}

std::vector<Detection> match_text(const std::vector<UiElement>& elements,
                                  const Taxonomy& taxonomy) {
    std::vector<Detection> out;
    for (const UiElement& element : elements) {
        if (element.text.empty() || !element.box.valid()) continue;
        const std::string lower = util::to_lower(element.text);
        for (const DataType& type : taxonomy.types) {
            auto it = taxonomy.lexicon.find(type.id);
            if (it == taxonomy.lexicon.end()) continue;
            for (const std::string& phrase : it->second) {
                if (!phrase_matches(lower, phrase)) continue;
                Detection d;
                d.box = element.box;
                d.data_type = type.id;
                d.score = 1.0;
                d.source = DetectionSource::kText;
                out.push_back(d);
                break; // one detection per (element, type)
            }
        }
    }
    return out;
}

std::vector<Detection> detect_context(const RasterImage& screen,
                                      const std::optional<std::vector<UiElement>>& sidecar,
                                      const Taxonomy& taxonomy, const TemplateLibrary& lib,
                                      const DetectionParams& params, ExecMode mode,
                                      std::vector<std::string>* warnings) {
    std::vector<Detection> all = match_icons(screen, lib, params, mode, warnings);
    if (sidecar) {
        std::vector<Detection> text = match_text(*sidecar, taxonomy);
        all.insert(all.end(), text.begin(), text.end());
    }

    all = dedup_nms(std::move(all), params.nms_iou);

    std::vector<Detection> out;
    out.reserve(all.size());
    for (Detection& d : all) {
        d.box = clip(d.box, screen.width, screen.height);
        if (d.box.valid()) out.push_back(std::move(d));
    }

    std::sort(out.begin(), out.end(), [](const Detection& a, const Detection& b) {
        if (a.data_type != b.data_type) return a.data_type < b.data_type;
        if (a.box.top != b.box.top) return a.box.top < b.box.top;
        return a.box.left < b.box.left;
    });
    return out;
}

} // namespace privscan::detect
