#pragma once

#include "gridsub/bigint.hpp"
#include "gridsub/geometry.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace gridsub {

using Json = nlohmann::ordered_json;

enum class Method { enumeration, recursion, closed_form, schroeder_identity, flip_bfs };

std::string to_string(Method m);

struct CountReport {
    std::string config;  ///< PointConfiguration::descriptor()
    std::string object = "subdivisions";  ///< or "triangulations"
    bool bimonotone = true;
    Method method = Method::enumeration;
    Conventions conventions{};
    BigCount count = 0;
    long long elapsed_ms = 0;
    bool cached = false;
    std::string version;

    std::string mode() const { return bimonotone ? "bimonotone" : "all"; }
    /// Identifies the request for caching: everything except count and timing.
    std::string cache_key() const;
};

Json to_json(const CountReport& r);
std::string csv_header();
std::string to_csv_row(const CountReport& r);

/// Flat JSON file of previously reported counts keyed by CountReport::cache_key().
class CountCache {
public:
    explicit CountCache(std::filesystem::path path);

    std::optional<BigCount> lookup(const std::string& key) const;
    void store(const std::string& key, const BigCount& count);
    /// Writes the file if anything was stored; throws std::runtime_error on I/O failure.
    void save() const;

private:
    std::filesystem::path path_;
    Json entries_ = Json::object();
    bool dirty_ = false;
};

}  // namespace gridsub
