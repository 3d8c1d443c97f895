#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "pathbij/error.hpp"

namespace pathbij {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

// Division that must leave no remainder; a remainder means a formula was
// transcribed wrongly, so it is reported instead of silently truncated.
inline BigInt exact_div(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw domain_error("exact_div: division by zero");
    }
    BigInt q;
    BigInt r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0) {
        throw domain_error("exact_div: " + num.str() + " is not divisible by " + den.str());
    }
    return q;
}

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    BigInt result = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        result *= (n - i);
        result /= (i + 1);
    }
    return result;
}

inline BigInt ipow(const BigInt& base, unsigned exponent) {
    return boost::multiprecision::pow(base, exponent);
}

inline std::string to_string(const BigInt& value) { return value.str(); }

}  // namespace pathbij
