#include "detmult/multiplicities.hpp"

#include <future>
#include <sstream>

namespace detmult {

namespace {

BigInteger exact_quotient(const BigInteger& num, const BigInteger& den, const char* what) {
  if (num % den != 0) throw ConsistencyError(std::string(what) + " is not an integer");
  return num / den;
}

}  // namespace

std::string_view to_string(FamilyTag tag) {
  return tag == FamilyTag::generic_maximal_minors ? "generic-maximal-minors" : "sub-maximal-pfaffians";
}

int Family::ring_dimension() const {
  return std::visit([](const auto& p) { return p.ring_dimension(); }, params_);
}

int Family::first_nonzero_slice() const {
  if (const auto* g = std::get_if<GenericParams>(&params_)) return g->n;
  return 2 * std::get<PfaffianParams>(params_).n - 1;
}

int Family::local_cohomology_index() const {
  return std::visit([](const auto& p) { return p.finite_local_cohomology_index(); }, params_);
}

int Family::ext_index() const {
  return std::visit([](const auto& p) { return p.finite_ext_index(); }, params_);
}

std::string Family::describe() const {
  std::ostringstream out;
  if (const auto* g = std::get_if<GenericParams>(&params_))
    out << "generic(m=" << g->m << ",n=" << g->n << ")";
  else
    out << "pfaffian(n=" << std::get<PfaffianParams>(params_).n << ")";
  return out.str();
}

SliceFunction default_slice_function(const Family& family, unsigned jobs) {
  if (const auto* g = std::get_if<GenericParams>(&family.params())) {
    const GenericParams p = *g;
    return [p, jobs](int d) { return slice_length(p, d, jobs); };
  }
  const PfaffianParams p = std::get<PfaffianParams>(family.params());
  return [p, jobs](int d) { return pf_slice_length(p, d, jobs); };
}

RationalPolynomial slice_polynomial(const Family& family, unsigned jobs) {
  return slice_polynomial(family, default_slice_function(family, jobs));
}

RationalPolynomial slice_polynomial(const Family& family, const SliceFunction& slice) {
  const int d0 = family.first_nonzero_slice();
  const int k = family.ring_dimension();
  std::vector<std::pair<long, Rational>> nodes;
  nodes.reserve(static_cast<std::size_t>(k));
  for (int d = d0; d < d0 + k; ++d) nodes.emplace_back(d, Rational(slice(d)));
  RationalPolynomial poly = interpolate(nodes);

  for (int d = d0 + k; d <= d0 + k + 1; ++d) {
    const BigInteger actual = slice(d);
    if (poly(static_cast<long>(d)) != Rational(actual))
      throw ConsistencyError(family.describe() + ": slice length at d=" + std::to_string(d) + " is " +
                             to_string(actual) + " but the interpolated polynomial gives " +
                             to_string(poly(static_cast<long>(d))));
  }
  if (poly.degree() != k - 1)
    throw ConsistencyError(family.describe() + ": slice polynomial has degree " + std::to_string(poly.degree()) +
                           ", expected " + std::to_string(k - 1));
  return poly;
}

Rational j_multiplicity_from(const Family& family, const RationalPolynomial& slice_poly) {
  return Rational(factorial(family.ring_dimension() - 1)) * slice_poly.leading_coefficient();
}

Rational j_multiplicity(const Family& family, unsigned jobs) {
  return j_multiplicity_from(family, slice_polynomial(family, jobs));
}

Rational epsilon_multiplicity_from(const Family& family, const RationalPolynomial& slice_poly) {
  const RationalPolynomial cumulative = poly_range_sum(slice_poly, family.first_nonzero_slice());
  return Rational(factorial(family.ring_dimension())) * cumulative.leading_coefficient();
}

Rational epsilon_multiplicity(const Family& family, unsigned jobs) {
  return epsilon_multiplicity_from(family, slice_polynomial(family, jobs));
}

BigInteger closed_form_generic(int m, int n) {
  GenericParams::make(m, n);
  BigInteger num = factorial(static_cast<long>(m) * n);
  BigInteger den = 1;
  for (int i = 0; i < n; ++i) {
    num *= factorial(i);
    den *= factorial(m + i);
  }
  return exact_quotient(num, den, "closed_form_generic");
}

BigInteger grassmannian_degree(int a, int b) {
  if (a <= 0 || a >= b) throw DomainError("grassmannian_degree needs 0 < a < b");
  BigInteger num = factorial(static_cast<long>(a) * (b - a));
  BigInteger den = 1;
  for (int i = 0; i < a; ++i) {
    num *= factorial(i);
    den *= factorial(b - a + i);
  }
  return exact_quotient(num, den, "grassmannian_degree");
}

BigInteger closed_form_pfaffian(int n) {
  PfaffianParams::make(n);
  BigInteger num = factorial(2L * n * n + n);
  BigInteger den = 1;
  for (int i = 0; i < n; ++i) {
    num *= factorial(2 * i);
    den *= factorial(2 * n + 1 + 2 * i);
  }
  return exact_quotient(num, den, "closed_form_pfaffian");
}

BigInteger og_degree(int a) {
  if (a < 1) throw DomainError("og_degree needs a >= 1");
  BigInteger num = factorial((static_cast<long>(a) * a + a) / 2);
  BigInteger den = 1;
  for (int i = 1; i <= a - 1; ++i) num *= factorial(i);
  for (int i = 1; i <= a; ++i) den *= factorial(2 * i - 1);
  return exact_quotient(num, den, "og_degree");
}

BigInteger syt_rectangle(int m, int n) {
  if (m < 1 || n < 1) throw DomainError("syt_rectangle needs m, n >= 1");
  BigInteger hooks = 1;
  for (int row = 0; row < m; ++row)
    for (int col = 0; col < n; ++col) hooks *= (n - col - 1) + (m - row - 1) + 1;
  return exact_quotient(factorial(static_cast<long>(m) * n), hooks, "syt_rectangle");
}

BigInteger shifted_syt_staircase(int a) {
  if (a < 1) throw DomainError("shifted_syt_staircase needs a >= 1");
  // N!/prod lambda_i! * prod_{i<j} (lambda_i - lambda_j)/(lambda_i + lambda_j), lambda = (a, ..., 1)
  const long size = static_cast<long>(a) * (a + 1) / 2;
  BigInteger num = factorial(size);
  BigInteger den = 1;
  for (int i = 1; i <= a; ++i) den *= factorial(i);
  for (int p = a; p >= 1; --p)
    for (int q = p - 1; q >= 1; --q) {
      num *= p - q;
      den *= p + q;
    }
  return exact_quotient(num, den, "shifted_syt_staircase");
}

Rational selberg(int nv, int a, int b, int c) {
  if (nv < 1) throw DomainError("selberg needs at least one variable");
  if (a < 1 || b < 1 || c < 1) throw DomainError("selberg is evaluated only at positive integer parameters");
  // Gamma(k) = (k-1)! at positive integers.
  auto gamma = [](long k) { return factorial(k - 1); };
  BigInteger num = 1;
  BigInteger den = 1;
  for (long i = 0; i < nv; ++i) {
    num *= gamma(a + i * c) * gamma(b + i * c) * gamma(1 + (i + 1) * c);
    den *= gamma(a + b + (nv + i - 1) * c) * gamma(1 + c);
  }
  return Rational(num, den);
}

Rational integral_formula_generic(int m, int n) {
  GenericParams::make(m, n);
  Rational constant(factorial(static_cast<long>(m) * n - 1));
  for (int i = 1; i <= n; ++i) constant /= Rational(factorial(n - i) * factorial(m - i));
  if (n == 1) return constant;
  // The cube integral is (n-1)! times the ordered-simplex one.
  return constant * selberg(n - 1, 3, m - n + 1, 1) / Rational(factorial(n - 1));
}

Rational integral_formula_pfaffian(int n) {
  PfaffianParams::make(n);
  Rational constant(factorial(2L * n * n + n - 1));
  for (int i = 1; i <= 2 * n; ++i) constant /= Rational(factorial(i));
  if (n == 1) return constant;
  return constant * selberg(n - 1, 3, 5, 2) / Rational(factorial(n - 1));
}

std::map<std::string, Rational> oracle_values(const Family& family) {
  std::map<std::string, Rational> out;
  if (const auto* g = std::get_if<GenericParams>(&family.params())) {
    const int m = g->m;
    const int n = g->n;
    auto grassmann = std::async(std::launch::async, [=] { return grassmannian_degree(n, m + n); });
    auto integral = std::async(std::launch::async, [=] { return integral_formula_generic(m, n); });
    out["closed_form"] = Rational(closed_form_generic(m, n));
    out["syt_count"] = Rational(syt_rectangle(m, n));
    out["grassmannian_degree"] = Rational(grassmann.get());
    out["integral_formula"] = integral.get();
  } else {
    const int n = std::get<PfaffianParams>(family.params()).n;
    auto og = std::async(std::launch::async, [=] { return og_degree(2 * n); });
    auto integral = std::async(std::launch::async, [=] { return integral_formula_pfaffian(n); });
    out["closed_form"] = Rational(closed_form_pfaffian(n));
    out["syt_count"] = Rational(shifted_syt_staircase(2 * n));
    out["og_degree"] = Rational(og.get());
    out["integral_formula"] = integral.get();
  }
  return out;
}

MultiplicityReport build_report(const Family& family, unsigned jobs) {
  return build_report(family, default_slice_function(family, jobs));
}

MultiplicityReport build_report(const Family& family, const SliceFunction& slice) {
  auto oracles = std::async(std::launch::async, [&family] { return oracle_values(family); });
  MultiplicityReport report{family, family.local_cohomology_index(), {}, {}, {}, {}, false};
  report.slice_polynomial = slice_polynomial(family, slice);
  report.j_mult = j_multiplicity_from(family, report.slice_polynomial);
  report.epsilon_mult = epsilon_multiplicity_from(family, report.slice_polynomial);
  report.oracles = oracles.get();
  report.all_agree = true;
  for (const auto& [name, value] : report.oracles) report.all_agree = report.all_agree && value == report.j_mult;
  return report;
}

}  // namespace detmult
