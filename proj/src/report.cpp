#include "gridsub/report.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gridsub {

std::string to_string(Method m) {
    switch (m) {
        case Method::enumeration: return "enumeration";
        case Method::recursion: return "recursion";
        case Method::closed_form: return "closed-form";
        case Method::schroeder_identity: return "schroeder-identity";
        case Method::flip_bfs: return "flip-bfs";
    }
    return "unknown";
}

std::string CountReport::cache_key() const {
    std::ostringstream os;
    os << "v=" << version << ";object=" << object << ";config=" << config << ";mode=" << mode() << ";method=" << to_string(method)
       << ";edge-interaction=" << to_string(conventions.interaction)
       << ";candidates=" << to_string(conventions.candidates);
    return os.str();
}

Json to_json(const CountReport& r) {
    Json j;
    j["config"] = r.config;
    j["object"] = r.object;
    j["mode"] = r.mode();
    j["method"] = to_string(r.method);
    j["conventions"] = {{"edge_interaction", to_string(r.conventions.interaction)},
                        {"candidates", to_string(r.conventions.candidates)}};
    j["count"] = to_decimal(r.count);
    j["cached"] = r.cached;
    j["elapsed_ms"] = r.elapsed_ms;
    j["version"] = r.version;
    return j;
}

std::string csv_header() { return "config,object,mode,method,edge_interaction,candidates,count,elapsed_ms,version"; }

std::string to_csv_row(const CountReport& r) {
    std::ostringstream os;
    // Descriptors contain commas.
    os << '"' << r.config << "\"," << r.object << ',' << r.mode() << ',' << to_string(r.method) << ','
       << to_string(r.conventions.interaction) << ',' << to_string(r.conventions.candidates) << ','
       << to_decimal(r.count) << ',' << r.elapsed_ms << ',' << r.version;
    return os.str();
}

CountCache::CountCache(std::filesystem::path path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) return;  // first use
    Json doc;
    try {
        in >> doc;
    } catch (const Json::parse_error& e) {
        throw std::runtime_error("cache file " + path_.string() + " is not valid JSON: " + e.what());
    }
    if (doc.contains("entries") && doc["entries"].is_object()) entries_ = doc["entries"];
}

std::optional<BigCount> CountCache::lookup(const std::string& key) const {
    const auto it = entries_.find(key);
    if (it == entries_.end() || !it->is_string()) return std::nullopt;
    return BigCount(it->get<std::string>());
}

void CountCache::store(const std::string& key, const BigCount& count) {
    entries_[key] = to_decimal(count);
    dirty_ = true;
}

void CountCache::save() const {
    if (!dirty_) return;
    Json doc;
    doc["format"] = "gridsub-count-cache";
    doc["entries"] = entries_;
    std::ofstream out(path_);
    if (!out) throw std::runtime_error("cannot write cache file " + path_.string());
    out << doc.dump(2) << '\n';
    if (!out) throw std::runtime_error("failed writing cache file " + path_.string());
}

}  // namespace gridsub
