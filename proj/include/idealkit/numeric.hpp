#ifndef IDEALKIT_NUMERIC_HPP
#define IDEALKIT_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace idealkit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Rational& q) { return q.sign(); }

std::string rational_to_text(const Rational& q);

/// True iff p is a prime that fits the prime-field backend (p < 2^31).
bool is_supported_prime(long long p);

}  // namespace idealkit

#endif
