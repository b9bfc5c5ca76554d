#include "detmult/arith.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>

namespace detmult {

namespace {

std::mutex factorial_mutex;
std::vector<BigInteger> factorial_table{BigInteger(1)};

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_table{Rational(1)};

}  // namespace

BigInteger factorial(long k) {
  if (k < 0) throw DomainError("factorial of negative integer " + std::to_string(k));
  std::lock_guard lock(factorial_mutex);
  while (static_cast<long>(factorial_table.size()) <= k) {
    const auto next = static_cast<long>(factorial_table.size());
    factorial_table.push_back(factorial_table.back() * next);
  }
  return factorial_table[static_cast<std::size_t>(k)];
}

BigInteger binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInteger result = 1;
  for (long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

Rational bernoulli(long k) {
  if (k < 0) throw DomainError("bernoulli index must be nonnegative");
  std::lock_guard lock(bernoulli_mutex);
  // B_j = (j + 1 - sum_{i<j} C(j+1, i) B_i) / (j + 1)
  while (static_cast<long>(bernoulli_table.size()) <= k) {
    const auto j = static_cast<long>(bernoulli_table.size());
    Rational acc = j + 1;
    for (long i = 0; i < j; ++i) acc -= Rational(binomial(j + 1, i)) * bernoulli_table[static_cast<std::size_t>(i)];
    bernoulli_table.push_back(acc / (j + 1));
  }
  return bernoulli_table[static_cast<std::size_t>(k)];
}

std::string to_string(const BigInteger& z) { return z.str(); }

std::string to_string(const Rational& q) {
  const BigInteger num = boost::multiprecision::numerator(q);
  const BigInteger den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  auto parse_int = [&](const std::string& s, bool allow_sign) {
    std::size_t start = 0;
    if (allow_sign && !s.empty() && s[0] == '-') start = 1;
    if (start == s.size() || !std::all_of(s.begin() + static_cast<long>(start), s.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw DomainError("malformed rational '" + text + "'");
    return BigInteger(s);
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text, true));
  const BigInteger num = parse_int(text.substr(0, slash), true);
  const BigInteger den = parse_int(text.substr(slash + 1), false);
  if (den == 0) throw DomainError("zero denominator in '" + text + "'");
  return Rational(num, den);
}

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

RationalPolynomial RationalPolynomial::constant(Rational c) { return RationalPolynomial({std::move(c)}); }

RationalPolynomial RationalPolynomial::monomial(Rational c, int power) {
  if (power < 0) throw DomainError("negative monomial power");
  std::vector<Rational> coeffs(static_cast<std::size_t>(power) + 1);
  coeffs.back() = std::move(c);
  return RationalPolynomial(std::move(coeffs));
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::coefficient(int power) const {
  if (power < 0 || power > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(power)];
}

Rational RationalPolynomial::leading_coefficient() const { return is_zero() ? Rational(0) : coeffs_.back(); }

Rational RationalPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RationalPolynomial(std::move(out));
}

std::string RationalPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int p = degree(); p >= 0; --p) {
    Rational c = coeffs_[static_cast<std::size_t>(p)];
    if (c == 0) continue;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    if (c < 0) c = -c;
    first = false;
    if (p == 0) {
      out << detmult::to_string(c);
      continue;
    }
    if (c != 1) out << detmult::to_string(c) << "*";
    out << "x";
    if (p > 1) out << "^" << p;
  }
  return out.str();
}

RationalPolynomial faulhaber_polynomial(int p) {
  if (p < 0) throw DomainError("faulhaber power must be nonnegative");
  // F(b) = 1/(p+1) sum_{j=0}^{p} C(p+1, j) B_j b^{p+1-j}, with B_1 = +1/2.
  std::vector<Rational> coeffs(static_cast<std::size_t>(p) + 2);
  for (int j = 0; j <= p; ++j)
    coeffs[static_cast<std::size_t>(p + 1 - j)] = Rational(binomial(p + 1, j)) * bernoulli(j) / (p + 1);
  return RationalPolynomial(std::move(coeffs));
}

RationalPolynomial poly_range_sum(const RationalPolynomial& f, long a) {
  // F_p(b) - F_p(b-1) = b^p holds identically, so sum_{k=a}^{b} k^p = F_p(b) - F_p(a-1).
  RationalPolynomial total;
  for (int p = 0; p <= f.degree(); ++p) {
    const Rational c = f.coefficient(p);
    if (c == 0) continue;
    const RationalPolynomial fp = faulhaber_polynomial(p);
    total += (fp - RationalPolynomial::constant(fp(a - 1))) * c;
  }
  return total;
}

RationalPolynomial interpolate(std::span<const std::pair<long, Rational>> points) {
  if (points.empty()) throw DomainError("interpolation needs at least one point");
  std::set<long> seen;
  for (const auto& [x, y] : points)
    if (!seen.insert(x).second) throw DomainError("duplicate interpolation abscissa " + std::to_string(x));

  const std::size_t n = points.size();
  // Divided differences, overwritten in place: table[i] ends as f[x_0..x_i].
  std::vector<Rational> table;
  table.reserve(n);
  for (const auto& pt : points) table.push_back(pt.second);
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      table[i] = (table[i] - table[i - 1]) / Rational(points[i].first - points[i - level].first);

  // Horner on the Newton form: p = t0 + (x - x0)(t1 + (x - x1)(t2 + ...)).
  RationalPolynomial result = RationalPolynomial::constant(table[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    const RationalPolynomial factor({Rational(-points[i].first), Rational(1)});
    result = result * factor + RationalPolynomial::constant(table[i]);
  }
  return result;
}

}  // namespace detmult
