#pragma once
#include <cstdint>
#include <stdexcept>
#include <string>

namespace grmod {

#define GRMOD_CHECK(cond, msg)                                                 \
    do {                                                                       \
        if (!(cond))                                                           \
            throw std::logic_error(std::string("internal check failed: ") +    \
                                   (msg));                                     \
    } while (0)

// Raised when a Groebner run would process an S-pair above the configured
// degree cap.  Carries enough context for a usable diagnostic.
struct DegreeCapError : std::runtime_error {
    DegreeCapError(int cap_, int degree_, const std::string& where_)
        : std::runtime_error("degree cap " + std::to_string(cap_) +
                             " exceeded at degree " + std::to_string(degree_) +
                             " (" + where_ + ")"),
          cap(cap_), degree(degree_), where(where_) {}
    int cap;
    int degree;
    std::string where;
};

// FNV-1a, used for stable content hashes of rings/presentations.
struct Fnv1a {
    uint64_t h = 1469598103934665603ull;

    void byte(uint8_t b) {
        h ^= b;
        h *= 1099511628211ull;
    }
    void u32(uint32_t v) {
        for (int i = 0; i < 4; ++i) byte(static_cast<uint8_t>(v >> (8 * i)));
    }
    void u64(uint64_t v) {
        for (int i = 0; i < 8; ++i) byte(static_cast<uint8_t>(v >> (8 * i)));
    }
    void i32(int v) { u32(static_cast<uint32_t>(v)); }
    void str(const std::string& s) {
        u64(s.size());
        for (char c : s) byte(static_cast<uint8_t>(c));
    }
    uint64_t value() const { return h; }
};

std::string hex16(uint64_t v);

} // namespace grmod
