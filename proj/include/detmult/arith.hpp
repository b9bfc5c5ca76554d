#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace detmult {

using BigInteger = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when an argument lies outside the domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when two computation routes that must agree do not. Signals a bug,
/// never a property of the input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// k! for k >= 0. Values are memoized in a process-wide table.
BigInteger factorial(long k);

BigInteger binomial(long n, long k);

/// Bernoulli numbers with B_1 = +1/2, so that
/// sum_{i=0}^{k} C(k+1, i) B_i = k + 1.
Rational bernoulli(long k);

/// "p/q" for non-integers, plain decimal otherwise.
std::string to_string(const Rational& q);
std::string to_string(const BigInteger& z);

/// Inverse of to_string(Rational). Accepts "a", "-a", "a/b"; throws
/// DomainError on anything else or a zero denominator.
Rational parse_rational(const std::string& text);

/// Dense univariate polynomial with exact rational coefficients. coefficient(i)
/// multiplies x^i. The stored coefficient vector never ends in a zero, so the
/// zero polynomial has no coefficients and degree -1.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);

  static RationalPolynomial constant(Rational c);
  static RationalPolynomial monomial(Rational c, int power);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coefficient(int power) const;
  Rational leading_coefficient() const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational operator()(const Rational& x) const;
  Rational operator()(long x) const { return (*this)(Rational(x)); }

  RationalPolynomial& operator+=(const RationalPolynomial& other);
  RationalPolynomial& operator-=(const RationalPolynomial& other);
  RationalPolynomial& operator*=(const Rational& scalar);
  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const Rational& s) { return a *= s; }
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);

  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Human-readable form, highest power first, e.g. "1/2*x^2 + 1/2*x".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// F with F(b) = sum_{k=1}^{b} k^p for every integer b >= 0.
RationalPolynomial faulhaber_polynomial(int p);

/// F with F(b) = sum_{k=a}^{b} f(k) for every integer b >= a.
RationalPolynomial poly_range_sum(const RationalPolynomial& f, long a);

/// The unique polynomial of degree < points.size() through the given points,
/// computed in exact Newton form.
RationalPolynomial interpolate(std::span<const std::pair<long, Rational>> points);

}  // namespace detmult
