#include "urnq/bigint.hpp"

#include <bit>
#include <stdexcept>

namespace urnq {

int ones_in_binary(unsigned long long n) {
    return std::popcount(n);
}

int two_adic_valuation(const BigInt& value) {
    if (value < 1) {
        throw std::invalid_argument("two_adic_valuation: value must be >= 1");
    }
    return static_cast<int>(boost::multiprecision::lsb(value));
}

BigInt binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (long i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1;  // exact: product of j consecutive integers is divisible by j!
    }
    return result;
}

BigInt floor_rat(const BigRat& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);  // always > 0
    BigInt q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

BigInt ceil_rat(const BigRat& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    BigInt q = num / den;
    if (num % den != 0 && num > 0) ++q;
    return q;
}

}  // namespace urnq
