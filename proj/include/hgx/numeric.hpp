#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hgx {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// C(n, k), zero whenever k < 0, n < 0 or k > n.
Integer binomial(long long n, long long k);

/// Elementary symmetric polynomial e_t of the part sizes: the number of t-sets
/// with at most one vertex per part.
Integer multipartite_count(const std::vector<int>& parts, int t);

/// "p/q", or "p" for integers.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

long long to_ll(const Integer& z);

}  // namespace hgx
