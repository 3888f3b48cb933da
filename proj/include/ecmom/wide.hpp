#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ecmom {

// 128-bit signed integers back every exact accumulator in this library.
// All arithmetic on them goes through the checked_* helpers below, which
// throw std::overflow_error instead of wrapping.
using int128 = __int128;
using uint128 = unsigned __int128;

inline int128 checked_add(int128 a, int128 b) {
    int128 r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("int128 addition overflow");
    return r;
}

inline int128 checked_sub(int128 a, int128 b) {
    int128 r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("int128 subtraction overflow");
    return r;
}

inline int128 checked_mul(int128 a, int128 b) {
    int128 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("int128 multiplication overflow");
    return r;
}

// base^exp with overflow checking; exp >= 0
inline int128 checked_pow(int128 base, unsigned exp) {
    int128 r = 1;
    while (exp > 0) {
        if (exp & 1u) r = checked_mul(r, base);
        exp >>= 1u;
        if (exp > 0) base = checked_mul(base, base);
    }
    return r;
}

std::string to_decimal(int128 v);

// Parses an optionally signed decimal string; throws std::invalid_argument
// on malformed input and std::overflow_error if the value does not fit.
int128 int128_from_decimal(std::string_view s);

}  // namespace ecmom
