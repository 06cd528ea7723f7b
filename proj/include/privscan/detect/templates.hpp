#pragma once

#include <string>
#include <vector>

#include "privscan/raster.hpp"
#include "privscan/taxonomy.hpp"

namespace privscan::detect {

/// A reference icon for one data type. Alpha channel is the match mask.
struct IconTemplate {
    std::string data_type;
    RasterImage image;
};

class TemplateLibrary {
public:
    /// Loads every template PNG referenced by the taxonomy, resolved
    /// relative to `dir`. Types without a template entry are skipped;
    /// a referenced file that is missing or undecodable throws.
    static TemplateLibrary load(const Taxonomy& taxonomy, const std::string& dir);

    void add(std::string data_type, RasterImage image);

    const std::vector<IconTemplate>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

private:
    std::vector<IconTemplate> entries_;
};

} // namespace privscan::detect
