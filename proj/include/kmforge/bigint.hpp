#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace kmforge {

using BigInt = mpz_class;
using BigRat = mpq_class;

// Number of bits in x > 0 (so bit_length(1) == 1, bit_length(8) == 4).
inline std::size_t bit_length(const BigInt& x) {
    return mpz_sizeinbase(x.get_mpz_t(), 2);
}

inline bool is_power_of_two(const BigInt& x) {
    return x > 0 && mpz_popcount(x.get_mpz_t()) == 1;
}

// Exact test b <= 2^e for b >= 1, e >= 0; never materializes 2^e.
inline bool leq_pow2(const BigInt& b, const BigInt& e) {
    BigInt bl = static_cast<unsigned long>(bit_length(b));
    if (bl <= e) return true;               // b < 2^bl <= 2^e
    return bl == e + 1 && is_power_of_two(b);  // b == 2^e exactly
}

inline std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::string fnv1a64_hex(const std::string& bytes) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = fnv1a64(bytes);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

} // namespace kmforge
