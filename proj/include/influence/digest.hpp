#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace influence {

// 64-bit FNV-1a. Used for config/corpus fingerprints in output headers,
// not for anything security-sensitive.
class Fnv1a {
public:
    void update(std::string_view bytes) {
        for (const char c : bytes) {
            state_ ^= static_cast<unsigned char>(c);
            state_ *= 0x100000001B3ull;
        }
    }
    std::uint64_t value() const { return state_; }

private:
    std::uint64_t state_ = 0xCBF29CE484222325ull;
};

std::uint64_t fnv1a(std::string_view bytes);
std::string to_hex(std::uint64_t v);

// Digest of a file's raw bytes; throws DataError if unreadable.
std::uint64_t digest_file(const std::string& path);

}  // namespace influence
