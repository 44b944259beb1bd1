#include "hgx/numeric.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "hgx/error.hpp"

namespace hgx {

Integer binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer out = 1;
  for (long long i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

Integer multipartite_count(const std::vector<int>& parts, int t) {
  if (t < 0) return 0;
  std::vector<Integer> e(static_cast<std::size_t>(t) + 1, 0);
  e[0] = 1;
  for (int size : parts) {
    for (int j = t; j >= 1; --j) e[j] += e[j - 1] * size;
  }
  return e[t];
}

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

long long to_ll(const Integer& z) {
  if (z > std::numeric_limits<long long>::max() || z < std::numeric_limits<long long>::min())
    throw Error(ErrorCode::CapacityExceeded, "value " + z.str() + " does not fit in 64 bits");
  return z.convert_to<long long>();
}

}  // namespace hgx
