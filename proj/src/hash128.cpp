#include "eplan/hash128.hpp"

#include <array>

namespace eplan {

namespace {

inline std::uint64_t rotl64(std::uint64_t x, int r) {
    return (x << r) | (x >> (64 - r));
}

inline std::uint64_t fmix64(std::uint64_t k) {
    k ^= k >> 33;
    k *= 0xff51afd7ed558ccdull;
    k ^= k >> 33;
    k *= 0xc4ceb9fe1a85ec53ull;
    k ^= k >> 33;
    return k;
}

inline std::uint64_t load_le64(const unsigned char* p) {
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) {
        v = (v << 8) | p[i];
    }
    return v;
}

} // namespace

std::string Digest128::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out(32, '0');
    std::uint64_t parts[2] = {hi, lo};
    for (int p = 0; p < 2; ++p) {
        for (int i = 0; i < 16; ++i) {
            out[p * 16 + i] = digits[(parts[p] >> (60 - 4 * i)) & 0xf];
        }
    }
    return out;
}

Digest128 hash128(std::string_view bytes) {
    const auto* data = reinterpret_cast<const unsigned char*>(bytes.data());
    const std::size_t len = bytes.size();
    const std::size_t nblocks = len / 16;

    std::uint64_t h1 = 0;
    std::uint64_t h2 = 0;
    const std::uint64_t c1 = 0x87c37b91114253d5ull;
    const std::uint64_t c2 = 0x4cf5ad432745937full;

    for (std::size_t i = 0; i < nblocks; ++i) {
        std::uint64_t k1 = load_le64(data + i * 16);
        std::uint64_t k2 = load_le64(data + i * 16 + 8);

        k1 *= c1;
        k1 = rotl64(k1, 31);
        k1 *= c2;
        h1 ^= k1;
        h1 = rotl64(h1, 27);
        h1 += h2;
        h1 = h1 * 5 + 0x52dce729;

        k2 *= c2;
        k2 = rotl64(k2, 33);
        k2 *= c1;
        h2 ^= k2;
        h2 = rotl64(h2, 31);
        h2 += h1;
        h2 = h2 * 5 + 0x38495ab5;
    }

    const unsigned char* tail = data + nblocks * 16;
    std::uint64_t k1 = 0;
    std::uint64_t k2 = 0;
    switch (len & 15) {
    case 15:
        k2 ^= static_cast<std::uint64_t>(tail[14]) << 48;
        [[fallthrough]];
    case 14:
        k2 ^= static_cast<std::uint64_t>(tail[13]) << 40;
        [[fallthrough]];
    case 13:
        k2 ^= static_cast<std::uint64_t>(tail[12]) << 32;
        [[fallthrough]];
    case 12:
        k2 ^= static_cast<std::uint64_t>(tail[11]) << 24;
        [[fallthrough]];
    case 11:
        k2 ^= static_cast<std::uint64_t>(tail[10]) << 16;
        [[fallthrough]];
    case 10:
        k2 ^= static_cast<std::uint64_t>(tail[9]) << 8;
        [[fallthrough]];
    case 9:
        k2 ^= static_cast<std::uint64_t>(tail[8]);
        k2 *= c2;
        k2 = rotl64(k2, 33);
        k2 *= c1;
        h2 ^= k2;
        [[fallthrough]];
    case 8:
        k1 ^= static_cast<std::uint64_t>(tail[7]) << 56;
        [[fallthrough]];
    case 7:
        k1 ^= static_cast<std::uint64_t>(tail[6]) << 48;
        [[fallthrough]];
    case 6:
        k1 ^= static_cast<std::uint64_t>(tail[5]) << 40;
        [[fallthrough]];
    case 5:
        k1 ^= static_cast<std::uint64_t>(tail[4]) << 32;
        [[fallthrough]];
    case 4:
        k1 ^= static_cast<std::uint64_t>(tail[3]) << 24;
        [[fallthrough]];
    case 3:
        k1 ^= static_cast<std::uint64_t>(tail[2]) << 16;
        [[fallthrough]];
    case 2:
        k1 ^= static_cast<std::uint64_t>(tail[1]) << 8;
        [[fallthrough]];
    case 1:
        k1 ^= static_cast<std::uint64_t>(tail[0]);
        k1 *= c1;
        k1 = rotl64(k1, 31);
        k1 *= c2;
        h1 ^= k1;
        break;
    default:
        break;
    }

    h1 ^= static_cast<std::uint64_t>(len);
    h2 ^= static_cast<std::uint64_t>(len);
    h1 += h2;
    h2 += h1;
    h1 = fmix64(h1);
    h2 = fmix64(h2);
    h1 += h2;
    h2 += h1;

    return Digest128{h1, h2};
}

} // namespace eplan
