#include "gmnrep/cache.hpp"

#include <atomic>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <unistd.h>

namespace gmnrep {

json CacheKey::to_json() const {
    return json{{"kind", kind}, {"m", m}, {"n", n}, {"shape", shape}, {"version", version}};
}

std::string CacheKey::file_name() const {
    std::string s = kind + "_m" + std::to_string(m) + "_n" + std::to_string(n) + "_";
    for (char c : shape) {
        if (std::isalnum(static_cast<unsigned char>(c))) {
            s += c;
        } else if (c == ',') {
            s += '.';
        } else if (c == ']') {
            s += '_';
        }
    }
    return s + "_" + version + ".json";
}

Cache Cache::from_environment() {
    if (const char* dir = std::getenv("GMNREP_CACHE"); dir && *dir) return Cache(dir);
    if (const char* xdg = std::getenv("XDG_DATA_HOME"); xdg && *xdg) return Cache(std::filesystem::path(xdg) / "gmnrep");
    if (const char* home = std::getenv("HOME"); home && *home) {
        return Cache(std::filesystem::path(home) / ".local" / "share" / "gmnrep");
    }
    return Cache(std::filesystem::temp_directory_path() / "gmnrep");
}

std::optional<json> Cache::load(const CacheKey& key) const {
    std::ifstream in(dir_ / key.file_name());
    if (!in) return std::nullopt;
    try {
        json doc = json::parse(in);
        if (doc.at("key") != key.to_json()) return std::nullopt;
        return doc.at("value");
    } catch (const json::exception&) {
        return std::nullopt;
    }
}

bool Cache::store(const CacheKey& key, const json& value) const {
    static std::atomic<unsigned> counter{0};
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) return false;
    const auto target = dir_ / key.file_name();
    const auto tmp = dir_ / (key.file_name() + ".tmp" + std::to_string(::getpid()) + "." + std::to_string(counter++));
    {
        std::ofstream out(tmp);
        if (!out) return false;
        out << json{{"key", key.to_json()}, {"value", value}}.dump();
        if (!out) {
            out.close();
            std::filesystem::remove(tmp, ec);
            return false;
        }
    }
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        return false;
    }
    return true;
}

}  // namespace gmnrep
