#pragma once

#include <gmpxx.h>

#include <string>

namespace flowrec {

// All arithmetic in this library is exact. Int and Rat are the only numeric
// types that cross module boundaries; no floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

// gmpxx has no long long constructor; long is 64 bit on every platform we
// build for.
inline Int to_int(long long v) { return Int(static_cast<long>(v)); }

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int pow_int(const Int& base, unsigned long exp) {
    Int result;
    mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exp);
    return result;
}

inline Rat pow_rat(const Rat& base, unsigned long exp) {
    return make_rat(pow_int(base.get_num(), exp), pow_int(base.get_den(), exp));
}

// (-1)^n
inline Int parity_sign(long long n) { return (n % 2 == 0) ? Int(1) : Int(-1); }

inline std::string to_string(const Int& v) { return v.get_str(); }
inline std::string to_string(const Rat& v) { return v.get_str(); }

} // namespace flowrec
