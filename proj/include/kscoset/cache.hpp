#pragma once

// On-disk cache of resolved spectra, one JSON document per (m, n, k, schema
// version). Writes go to a temporary file that is renamed into place.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <system_error>

#include "json.hpp"

#include "kscoset/coset.hpp"
#include "kscoset/document.hpp"

namespace kscoset {

inline constexpr const char* kCacheDirEnv = "KSCOSET_CACHE_DIR";

/// $KSCOSET_CACHE_DIR, else $XDG_CACHE_HOME/kscoset, else $HOME/.cache/kscoset.
inline std::optional<std::filesystem::path> default_cache_dir() {
    if (const char* dir = std::getenv(kCacheDirEnv); dir != nullptr && *dir != '\0') return std::filesystem::path(dir);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg != nullptr && *xdg != '\0') {
        return std::filesystem::path(xdg) / "kscoset";
    }
    if (const char* home = std::getenv("HOME"); home != nullptr && *home != '\0') {
        return std::filesystem::path(home) / ".cache" / "kscoset";
    }
    return std::nullopt;
}

class SpectrumCache {
public:
    explicit SpectrumCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    const std::filesystem::path& dir() const { return dir_; }

    std::filesystem::path path_for(const CosetSpec& spec) const {
        return dir_ / ("spectrum-v" + std::string(doc::kSchemaVersion) + "-" + std::to_string(spec.m()) + "-" +
                       std::to_string(spec.n()) + "-" + std::to_string(spec.k()) + ".json");
    }

    enum class Status { miss, hit, corrupt };

    struct Lookup {
        Status status = Status::miss;
        nlohmann::json document;
        std::string error;
    };

    /// A hit requires a parseable spectrum document for exactly this spec.
    Lookup load(const CosetSpec& spec) const {
        Lookup out;
        const auto path = path_for(spec);
        std::error_code ec;
        if (!std::filesystem::exists(path, ec)) return out;
        try {
            std::ifstream in(path, std::ios::binary);
            std::ostringstream buffer;
            buffer << in.rdbuf();
            auto document = nlohmann::json::parse(buffer.str());
            const ResolvedSpectrum parsed = doc::spectrum_from_json(document);
            if (parsed.spec != spec) throw std::invalid_argument("cache entry is for " + to_string(parsed.spec));
            out.status = Status::hit;
            out.document = std::move(document);
        } catch (const std::exception& e) {
            out.status = Status::corrupt;
            out.error = e.what();
        }
        return out;
    }

    void store(const CosetSpec& spec, const nlohmann::json& document) const {
        std::filesystem::create_directories(dir_);
        const auto target = path_for(spec);
        auto temp = target;
        temp += ".tmp";
        {
            std::ofstream out(temp, std::ios::binary | std::ios::trunc);
            if (!out) throw std::runtime_error("cannot write cache file " + temp.string());
            out << document.dump() << "\n";
        }
        std::filesystem::rename(temp, target);
    }

private:
    std::filesystem::path dir_;
};

}  // namespace kscoset
