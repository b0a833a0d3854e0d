#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

namespace pathdepth {

inline std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

/// Content-addressed result cache: one JSON file per key under a
/// user-chosen directory. Files carry the full key material, so a read
/// with a mismatched or unparsable payload is simply ignored and the
/// result recomputed; the cache is never trusted blindly.
class result_cache {
public:
    explicit result_cache(std::filesystem::path dir)
        : dir_(std::move(dir)), mutex_(std::make_unique<std::mutex>()) {
        std::filesystem::create_directories(dir_);
    }

    const std::filesystem::path& directory() const { return dir_; }

    std::optional<nlohmann::json> load(std::string_view key) const {
        std::lock_guard<std::mutex> lock(*mutex_);
        std::ifstream in(path_for(key));
        if (!in) return std::nullopt;
        nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
        if (j.is_discarded() || !j.is_object()) return std::nullopt;
        if (!j.contains("key") || j["key"] != key) return std::nullopt;
        if (!j.contains("value")) return std::nullopt;
        return j["value"];
    }

    void store(std::string_view key, const nlohmann::json& value) const {
        std::lock_guard<std::mutex> lock(*mutex_);
        nlohmann::json j;
        j["key"] = std::string(key);
        j["value"] = value;
        std::filesystem::path target = path_for(key);
        std::filesystem::path tmp = target;
        tmp += ".tmp";
        {
            std::ofstream out(tmp);
            out << j.dump();
        }
        std::error_code ec;
        std::filesystem::rename(tmp, target, ec); // atomic on POSIX
        if (ec) std::filesystem::remove(tmp, ec);
    }

private:
    std::filesystem::path path_for(std::string_view key) const {
        char hex[17];
        std::snprintf(hex, sizeof hex, "%016llx",
                      static_cast<unsigned long long>(fnv1a64(key)));
        return dir_ / (std::string(hex) + ".json");
    }

    std::filesystem::path dir_;
    std::unique_ptr<std::mutex> mutex_;
};

} // namespace pathdepth
