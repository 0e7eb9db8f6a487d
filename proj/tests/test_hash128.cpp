#include "eplan/hash128.hpp"

#include <doctest.h>

using namespace eplan;

TEST_CASE("digest matches the published 128-bit murmur3 x64 values") {
    struct Vector {
        const char* input;
        std::uint64_t hi;
        std::uint64_t lo;
    };
    // Seed 0; hi/lo are the reference h1/h2 words.
    const Vector vectors[] = {
        {"", 0x0000000000000000ull, 0x0000000000000000ull},
        {"a", 0x85555565f6597889ull, 0xe6b53a48510e895aull},
        {"hello world", 0x533f6046eb7f610eull, 0xab97467d60eb63b1ull},
        {"world 0: 101", 0xf7421f501a923fbcull, 0x12a58b08ac58823dull},
        {"0123456789abcdef", 0x4be06d94cf4ad1a7ull, 0x87c35b5c63a708daull},
        {"The quick brown fox jumps over the lazy dog", 0xe34bbc7bbc071b6cull,
         0x7a433ca9c49a9347ull},
    };
    for (const Vector& v : vectors) {
        const Digest128 d = hash128(v.input);
        CAPTURE(v.input);
        CHECK(d.hi == v.hi);
        CHECK(d.lo == v.lo);
    }
}

TEST_CASE("hex rendering is 32 lowercase digits") {
    const Digest128 d = hash128("hello world");
    CHECK(d.hex() == "533f6046eb7f610eab97467d60eb63b1");
}

TEST_CASE("distinct short inputs do not collide") {
    CHECK(hash128("edge 0 a 1") != hash128("edge 0 a 2"));
    CHECK(hash128("world 1: 0") != hash128("world 1: 1"));
    CHECK(hash128("x") != hash128("x\n"));
}
