#include "privscan/taxonomy.hpp"

#include "json.hpp"

#include <cctype>
#include <set>

#include "privscan/errors.hpp"
#include "privscan/util/assets.hpp"
#include "privscan/util/strings.hpp"

namespace privscan {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

bool valid_id(const std::string& id) {
    if (id.empty()) return false;
    for (char c : id) {
        if (!(std::islower(static_cast<unsigned char>(c)) || c == '_')) return false;
    }
    return true;
}

json parse_or_schema_error(std::string_view bytes) {
    json doc = json::parse(bytes, nullptr, false);
    if (doc.is_discarded()) throw SchemaError("taxonomy: document is not valid JSON");
    if (!doc.is_object()) throw SchemaError("taxonomy: top level must be an object");
    return doc;
}

} // namespace

const DataType* Taxonomy::find(const std::string& id) const {
    for (const DataType& t : types) {
        if (t.id == id) return &t;
    }
    return nullptr;
}

Taxonomy load_taxonomy(std::string_view json_bytes) {
    const json doc = parse_or_schema_error(json_bytes);

    Taxonomy out;
    if (!doc.contains("types") || !doc["types"].is_array() || doc["types"].empty()) {
        throw SchemaError("taxonomy: 'types' must be a non-empty array");
    }

    std::set<std::string> seen;
    for (const json& t : doc["types"]) {
        if (!t.is_object() || !t.contains("id") || !t["id"].is_string() ||
            !t.contains("display_name") || !t["display_name"].is_string()) {
            throw SchemaError("taxonomy: each type needs string 'id' and 'display_name'");
        }
        DataType dt{t["id"].get<std::string>(), t["display_name"].get<std::string>()};
        if (!valid_id(dt.id)) {
            throw SchemaError("taxonomy: id '" + dt.id + "' must match [a-z_]+");
        }
        if (!seen.insert(dt.id).second) {
            throw DuplicateIdError("taxonomy: duplicate type id '" + dt.id + "'");
        }
        out.types.push_back(std::move(dt));
    }

    if (doc.contains("lexicon")) {
        if (!doc["lexicon"].is_object()) throw SchemaError("taxonomy: 'lexicon' must be an object");
        for (const auto& [id, phrases] : doc["lexicon"].items()) {
            if (!seen.contains(id)) {
                throw ReferenceError("taxonomy: lexicon key '" + id + "' has no declared type");
            }
            if (!phrases.is_array()) {
                throw SchemaError("taxonomy: lexicon['" + id + "'] must be an array");
            }
            std::vector<std::string> list;
            for (const json& p : phrases) {
                if (!p.is_string()) throw SchemaError("taxonomy: lexicon phrases must be strings");
                std::string normalized =
                    util::normalize_whitespace(util::to_lower(p.get<std::string>()));
                if (normalized.empty()) {
                    throw SchemaError("taxonomy: empty lexicon phrase under '" + id + "'");
                }
                list.push_back(std::move(normalized));
            }
            out.lexicon[id] = std::move(list);
        }
    }

    if (doc.contains("templates")) {
        if (!doc["templates"].is_object()) {
            throw SchemaError("taxonomy: 'templates' must be an object");
        }
        for (const auto& [id, paths] : doc["templates"].items()) {
            if (!seen.contains(id)) {
                throw ReferenceError("taxonomy: templates key '" + id + "' has no declared type");
            }
            if (!paths.is_array()) {
                throw SchemaError("taxonomy: templates['" + id + "'] must be an array");
            }
            std::vector<std::string> list;
            for (const json& p : paths) {
                if (!p.is_string()) throw SchemaError("taxonomy: template paths must be strings");
                std::string path = p.get<std::string>();
                if (path.empty()) {
                    throw SchemaError("taxonomy: empty template path under '" + id + "'");
                }
                list.push_back(std::move(path));
            }
            out.templates[id] = std::move(list);
        }
    }

    return out;
}

Taxonomy load_taxonomy_file(const std::filesystem::path& path) {
    return load_taxonomy(util::read_file(path));
}

std::string serialize_taxonomy(const Taxonomy& taxonomy) {
    ordered_json doc;
    doc["types"] = ordered_json::array();
    for (const DataType& t : taxonomy.types) {
        doc["types"].push_back({{"id", t.id}, {"display_name", t.display_name}});
    }
    doc["lexicon"] = ordered_json::object();
    for (const auto& [id, phrases] : taxonomy.lexicon) doc["lexicon"][id] = phrases;
    doc["templates"] = ordered_json::object();
    for (const auto& [id, paths] : taxonomy.templates) doc["templates"][id] = paths;
    return doc.dump(2);
}

bool phrase_matches(std::string_view haystack_lower, std::string_view phrase) {
    if (phrase.empty() || phrase.size() > haystack_lower.size()) return false;

    const bool need_word_edges = phrase.size() < 4;
    auto is_word = [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) != 0;
    };

    std::size_t pos = 0;
    while ((pos = haystack_lower.find(phrase, pos)) != std::string_view::npos) {
        if (!need_word_edges) return true;
        const bool left_ok = pos == 0 || !is_word(haystack_lower[pos - 1]);
        const std::size_t end = pos + phrase.size();
        const bool right_ok = end == haystack_lower.size() || !is_word(haystack_lower[end]);
        if (left_ok && right_ok) return true;
        ++pos;
    }
    return false;
}

} // namespace privscan
