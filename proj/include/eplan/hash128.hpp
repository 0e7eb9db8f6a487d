#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace eplan {

struct Digest128 {
    std::uint64_t hi = 0;
    std::uint64_t lo = 0;

    auto operator<=>(const Digest128&) const = default;

    [[nodiscard]] std::string hex() const;
};

struct Digest128Hash {
    std::size_t operator()(const Digest128& d) const {
        return static_cast<std::size_t>(d.hi ^ (d.lo * 0x9e3779b97f4a7c15ull));
    }
};

/// MurmurHash3 x64 128-bit variant (public-domain algorithm by Austin
/// Appleby), with byte-wise block loads so the digest is identical on
/// little- and big-endian platforms.
Digest128 hash128(std::string_view bytes);

} // namespace eplan
