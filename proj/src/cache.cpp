#include "deltaw/cache.hpp"
#include "deltaw/version.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

namespace fs = std::filesystem;
using nlohmann::json;

namespace deltaw {

namespace {

// FNV-1a, 64-bit.  Keys are short; no need for anything stronger, we only
// want a stable filename and collisions are resolved by the key stored
// inside the record.
std::string fnv1a_hex(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(h));
    return std::string(buf);
}

} // namespace

std::string canonical_key(const WeightVector& w, int genus,
                          const std::string& coeffs,
                          const std::string& command) {
    std::vector<Rational> ws = w.entries();
    std::sort(ws.begin(), ws.end(), [](const Rational& a, const Rational& b) {
        return b < a;
    });
    std::ostringstream out;
    out << command << "|g" << genus << '|' << coeffs << '|';
    for (std::size_t i = 0; i < ws.size(); ++i) {
        if (i) out << ',';
        out << ws[i].str();
    }
    return out.str();
}

ResultCache::ResultCache(std::string dir) : dir_(std::move(dir)) {
    fs::create_directories(dir_);
}

std::string ResultCache::path_for(const std::string& key) const {
    return (fs::path(dir_) / (fnv1a_hex(key) + ".json")).string();
}

std::optional<ResultRecord> ResultCache::lookup(const std::string& key) const {
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;
    json j = json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded() || !j.is_object()) return std::nullopt;
    ResultRecord rec;
    rec.key = j.value("key", "");
    rec.command = j.value("command", "");
    rec.payload = j.value("payload", "");
    rec.engine_version = j.value("engine_version", "");
    rec.seconds = j.value("seconds", 0.0);
    if (rec.key != key) return std::nullopt;            // hash collision
    if (rec.engine_version != kEngineVersion) return std::nullopt;
    return rec;
}

void ResultCache::store(const ResultRecord& rec) const {
    json j;
    j["key"] = rec.key;
    j["command"] = rec.command;
    j["payload"] = rec.payload;
    j["engine_version"] =
        rec.engine_version.empty() ? kEngineVersion : rec.engine_version;
    j["seconds"] = rec.seconds;

    const std::string final_path = path_for(rec.key);
    const std::string tmp_path = final_path + ".tmp";
    {
        std::ofstream out(tmp_path, std::ios::trunc);
        out << j.dump(2) << '\n';
        if (!out) throw std::runtime_error("cache: failed to write " + tmp_path);
    }
    fs::rename(tmp_path, final_path);
}

} // namespace deltaw
