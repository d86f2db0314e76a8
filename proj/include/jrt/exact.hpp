#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace jrt {

inline mpz_class binom(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline mpz_class ipow(unsigned long base, unsigned long exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

inline bool fits_int64(const mpz_class& v) {
    return v >= mpz_class(INT64_MIN) && v <= mpz_class(INT64_MAX);
}

/// Decimal string; used wherever a value may exceed 64 bits.
inline std::string to_decimal(const mpz_class& v) { return v.get_str(); }

}  // namespace jrt
