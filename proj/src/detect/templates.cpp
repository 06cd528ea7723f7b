#include "privscan/detect/templates.hpp"

#include "privscan/errors.hpp"
#include "privscan/util/assets.hpp"
#include "privscan/util/png_io.hpp"

namespace privscan::detect {

TemplateLibrary TemplateLibrary::load(const Taxonomy& taxonomy, const std::string& dir) {
    TemplateLibrary lib;
    for (const DataType& type : taxonomy.types) {
        auto it = taxonomy.templates.find(type.id);
        if (it == taxonomy.templates.end()) continue;
        for (const std::string& file : it->second) {
            RasterImage image = util::decode_png(util::read_file(dir + "/" + file));
            lib.add(type.id, std::move(image));
        }
    }
    return lib;
}

void TemplateLibrary::add(std::string data_type, RasterImage image) {
    if (!image.valid()) {
        throw Error("template image for '" + data_type + "' is empty");
    }
    entries_.push_back(IconTemplate{std::move(data_type), std::move(image)});
}

} // namespace privscan::detect
