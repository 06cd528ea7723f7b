#include "privscan/util/assets.hpp"

#include <cstdlib>
#include <fstream>

#include "privscan/errors.hpp"

#ifndef PRIVSCAN_DEFAULT_ASSETS_DIR
#define PRIVSCAN_DEFAULT_ASSETS_DIR "assets"
#endif

namespace privscan::util {

std::filesystem::path assets_dir() {
    if (const char* env = std::getenv("PRIVSCAN_ASSETS_DIR"); env && *env) {
        return std::filesystem::path(env);
    }
    return std::filesystem::path(PRIVSCAN_DEFAULT_ASSETS_DIR);
}

std::filesystem::path default_taxonomy_path() {
    return assets_dir() / "taxonomy.json";
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError("read failed: " + path.string());
    return bytes;
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot create " + tmp.string());
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!out) throw IoError("write failed: " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw IoError("rename failed: " + path.string() + ": " + ec.message());
}

} // namespace privscan::util
