#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace deltaw {

// Marks are numbered 1..n and stored as a bitmask with bit i-1 for mark i.
// n is capped well below 32 elsewhere (complex sizes blow up long before).
struct MarkSet {
    std::uint32_t bits = 0;

    MarkSet() = default;
    explicit MarkSet(std::uint32_t b) : bits(b) {}

    static MarkSet full(int n) { return MarkSet(n >= 32 ? ~0u : ((1u << n) - 1u)); }
    static MarkSet single(int mark) { return MarkSet(1u << (mark - 1)); }

    bool contains(int mark) const { return (bits >> (mark - 1)) & 1u; }
    bool empty() const { return bits == 0; }
    int size() const { return __builtin_popcount(bits); }

    MarkSet with(int mark) const { return MarkSet(bits | (1u << (mark - 1))); }
    MarkSet without(int mark) const { return MarkSet(bits & ~(1u << (mark - 1))); }
    MarkSet complement(int n) const { return MarkSet(full(n).bits & ~bits); }

    friend MarkSet operator&(MarkSet a, MarkSet b) { return MarkSet(a.bits & b.bits); }
    friend MarkSet operator|(MarkSet a, MarkSet b) { return MarkSet(a.bits | b.bits); }
    friend bool operator==(MarkSet a, MarkSet b) { return a.bits == b.bits; }
    friend bool operator!=(MarkSet a, MarkSet b) { return a.bits != b.bits; }
    friend bool operator<(MarkSet a, MarkSet b) { return a.bits < b.bits; }

    bool subset_of(MarkSet o) const { return (bits & ~o.bits) == 0; }

    std::vector<int> members() const {
        std::vector<int> out;
        for (std::uint32_t b = bits; b; b &= b - 1)
            out.push_back(__builtin_ctz(b) + 1);
        return out;
    }

    /// "{2,3,5}" (ascending); "{}" when empty.
    std::string str() const {
        std::string s = "{";
        bool first = true;
        for (int m : members()) {
            if (!first) s += ",";
            s += std::to_string(m);
            first = false;
        }
        return s + "}";
    }
};

}  // namespace deltaw
