#ifndef URNQ_BIGINT_HPP
#define URNQ_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace urnq {

// Exact integer / rational types used everywhere a weight, count or bound
// appears. No floating point is allowed in any bound formula.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// b(n): number of 1's in the binary representation of n.
int ones_in_binary(unsigned long long n);

/// mu(N): largest l such that 2^l divides N. Rejects N < 1.
int two_adic_valuation(const BigInt& value);

/// Exact binomial coefficient; 0 when k < 0 or k > n.
BigInt binomial(long n, long k);

BigInt floor_rat(const BigRat& r);
BigInt ceil_rat(const BigRat& r);

}  // namespace urnq

#endif
