#include "influence/digest.hpp"

#include <array>
#include <cstdio>
#include <fstream>

#include "influence/error.hpp"

namespace influence {

std::uint64_t fnv1a(std::string_view bytes) {
    Fnv1a h;
    h.update(bytes);
    return h.value();
}

std::string to_hex(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return std::string(buf);
}

std::uint64_t digest_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open file for digest: " + path);
    Fnv1a h;
    std::array<char, 1 << 16> buf;
    while (in) {
        in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
        h.update(std::string_view(buf.data(), static_cast<std::size_t>(in.gcount())));
    }
    return h.value();
}

}  // namespace influence
