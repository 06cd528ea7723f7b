#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "privscan/types.hpp"

namespace privscan {

/// The configurable personal-data-type catalogue: declared types plus the
/// lexicon phrases and icon templates that detect each of them.
struct Taxonomy {
    std::vector<DataType> types;
    std::map<std::string, std::vector<std::string>> lexicon;
    std::map<std::string, std::vector<std::string>> templates;

    const DataType* find(const std::string& id) const;
    bool has(const std::string& id) const { return find(id) != nullptr; }

    friend bool operator==(const Taxonomy&, const Taxonomy&) = default;
};

/// Parses and validates a taxonomy document:
///   {"types":[{"id":..,"display_name":..}...],
///    "lexicon":{id:[phrase...]}, "templates":{id:[path...]}}
/// Phrases are lowercased and whitespace-normalized on load.
/// Throws SchemaError, ReferenceError or DuplicateIdError.
Taxonomy load_taxonomy(std::string_view json_bytes);

Taxonomy load_taxonomy_file(const std::filesystem::path& path);

/// Serializes back to the document format accepted by load_taxonomy.
std::string serialize_taxonomy(const Taxonomy& taxonomy);

/// Case-sensitive substring match against an already-lowercased haystack.
/// Phrases shorter than 4 characters only match at word edges, so "id" does
/// not fire inside "video".
bool phrase_matches(std::string_view haystack_lower, std::string_view phrase);

} // namespace privscan
