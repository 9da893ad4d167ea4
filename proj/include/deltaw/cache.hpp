#pragma once

// On-disk memoization of CLI results.  Records are keyed by a canonical
// string derived from the weight vector (sorted descending, exact
// rationals), the genus, the coefficient ring and the command name, so
// permutations of the same multiset of weights share one cache entry.
// Each record is a single JSON file; writes go through a temp file and a
// rename so a crash never leaves a half-written record behind.

#include "deltaw/weights.hpp"

#include <optional>
#include <string>

namespace deltaw {

struct ResultRecord {
    std::string key;            // canonical key, see canonical_key()
    std::string command;        // e.g. "homology"
    std::string payload;        // serialized result (JSON text)
    std::string engine_version; // kEngineVersion at store time
    double seconds = 0.0;       // wall-clock cost of the original computation
};

// Canonical cache key.  Weights are sorted in descending order and printed
// exactly ("num/den"), so the key is independent of input order and of how
// the user spelled the expression.
std::string canonical_key(const WeightVector& w, int genus,
                          const std::string& coeffs,
                          const std::string& command);

class ResultCache {
public:
    // Creates `dir` (and parents) if needed.
    explicit ResultCache(std::string dir);

    // Returns the stored payload if a record exists for `key` and was
    // written by the same engine version; otherwise nullopt.
    std::optional<ResultRecord> lookup(const std::string& key) const;

    // Atomic write-then-rename.  Overwrites any existing record.
    void store(const ResultRecord& rec) const;

    // Path of the file a given key maps to (for tests/diagnostics).
    std::string path_for(const std::string& key) const;

    const std::string& dir() const { return dir_; }

private:
    std::string dir_;
};

} // namespace deltaw
