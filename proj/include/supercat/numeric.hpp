#pragma once

// Exact scalars. BigInt and BigRat are the only numeric types used by the
// library; no floating point enters any count or coefficient.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "supercat/errors.hpp"

namespace supercat {

// Expression templates are disabled so intermediate results are plain values.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using BigRat = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

inline BigInt numerator_of(const BigRat& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const BigRat& r) { return boost::multiprecision::denominator(r); }

inline std::string to_string(const BigInt& v) { return v.str(); }

/// "p" for integers, "p/q" otherwise (lowest terms, positive denominator).
inline std::string to_string(const BigRat& v) {
  const BigInt den = denominator_of(v);
  if (den == 1) return numerator_of(v).str();
  return numerator_of(v).str() + "/" + den.str();
}

/// Inverse of to_string(BigRat); accepts "p" or "p/q".
inline BigRat parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return BigRat(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw DomainError("zero denominator in rational '" + s + "'");
    return BigRat(num, den);
  } catch (const std::runtime_error&) {
    throw DomainError("malformed rational '" + s + "'");
  }
}

inline BigInt factorial(int n) {
  if (n < 0) throw DomainError("factorial of negative integer " + std::to_string(n));
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

/// Binomial coefficient with the usual convention: 0 unless 0 <= k <= n.
inline BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

/// Generalized binomial coefficient alpha(alpha-1)...(alpha-k+1)/k! for rational alpha.
inline BigRat binomial(const BigRat& alpha, int k) {
  if (k < 0) return 0;
  BigRat r = 1;
  for (int i = 0; i < k; ++i) {
    r *= alpha - i;
    r /= i + 1;
  }
  return r;
}

inline BigInt pow_int(const BigInt& base, unsigned e) { return boost::multiprecision::pow(base, e); }

}  // namespace supercat
