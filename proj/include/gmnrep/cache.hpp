#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "gmnrep/json_io.hpp"

namespace gmnrep {

inline constexpr const char* kArtifactVersion = "gmnrep-1";

struct CacheKey {
    std::string kind;  // e.g. "rep"
    int m = 1;
    int n = 0;
    std::string shape;  // canonical JSON of the shape
    std::string version = kArtifactVersion;

    json to_json() const;
    std::string file_name() const;
};

/**
 * JSON blobs on disk. Each file stores its key, and a lookup hits only when the
 * stored key matches exactly, version tag included. Writes go to a temporary
 * file that is then renamed into place.
 */
class Cache {
public:
    explicit Cache(std::filesystem::path dir) : dir_(std::move(dir)) {}
    /// $GMNREP_CACHE, else $XDG_DATA_HOME/gmnrep, else ~/.local/share/gmnrep.
    static Cache from_environment();

    const std::filesystem::path& dir() const { return dir_; }
    std::optional<json> load(const CacheKey& key) const;
    /// Returns false (and leaves no partial file) when the directory is not writable.
    bool store(const CacheKey& key, const json& value) const;

private:
    std::filesystem::path dir_;
};

}  // namespace gmnrep
