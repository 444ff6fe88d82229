#ifndef ESYMLAB_BIGINT_HPP
#define ESYMLAB_BIGINT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace esymlab {

using BigInt = mpz_class;

inline BigInt to_big(std::uint64_t v) {
    BigInt r;
    mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return r;
}

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

BigInt binomial(std::uint64_t n, std::uint64_t k);

}  // namespace esymlab

#endif
