#pragma once

#include "detmult/arith.hpp"
#include "detmult/ext_generic.hpp"
#include "detmult/ext_pfaffian.hpp"

#include <functional>
#include <map>
#include <string>
#include <variant>

namespace detmult {

enum class FamilyTag { generic_maximal_minors, sub_maximal_pfaffians };

std::string_view to_string(FamilyTag tag);

/// One of the two settings: maximal minors of a generic m x n matrix, or
/// sub-maximal pfaffians of a (2n+1) x (2n+1) skew-symmetric matrix.
class Family {
 public:
  static Family generic(int m, int n) { return Family(GenericParams::make(m, n)); }
  static Family pfaffian(int n) { return Family(PfaffianParams::make(n)); }
  explicit Family(GenericParams p) : params_(p) {}
  explicit Family(PfaffianParams p) : params_(p) {}

  FamilyTag tag() const {
    return std::holds_alternative<GenericParams>(params_) ? FamilyTag::generic_maximal_minors
                                                          : FamilyTag::sub_maximal_pfaffians;
  }
  const std::variant<GenericParams, PfaffianParams>& params() const { return params_; }

  /// k = mn or 2n^2 + n.
  int ring_dimension() const;
  /// Degree of the slice polynomial, k - 1.
  int slice_degree() const { return ring_dimension() - 1; }
  /// First d with a nonzero slice: n or 2n - 1.
  int first_nonzero_slice() const;
  /// Local cohomology index carrying the finite lengths: n^2 - 1 or 2n^2 - n - 1.
  int local_cohomology_index() const;
  int ext_index() const;

  /// e.g. "generic(m=4,n=3)".
  std::string describe() const;

  friend bool operator==(const Family&, const Family&) = default;

 private:
  std::variant<GenericParams, PfaffianParams> params_;
};

/// d -> slice length of the family at power d.
using SliceFunction = std::function<BigInteger(int d)>;

SliceFunction default_slice_function(const Family& family, unsigned jobs = 1);

/// Slice lengths interpolated at d0 .. d0+k-1 and checked at d0+k, d0+k+1.
/// Throws ConsistencyError on a mismatch at a check node or a degree other than k-1.
RationalPolynomial slice_polynomial(const Family& family, unsigned jobs = 1);
RationalPolynomial slice_polynomial(const Family& family, const SliceFunction& slice);

/// (k-1)! times the leading coefficient of the slice polynomial.
Rational j_multiplicity(const Family& family, unsigned jobs = 1);
Rational j_multiplicity_from(const Family& family, const RationalPolynomial& slice_poly);

/// k! times the leading coefficient of sum_{d=d0}^{D} slice(d) as a polynomial in D.
Rational epsilon_multiplicity(const Family& family, unsigned jobs = 1);
Rational epsilon_multiplicity_from(const Family& family, const RationalPolynomial& slice_poly);

/// (mn)! prod_{i=0}^{n-1} i!/(m+i)!
BigInteger closed_form_generic(int m, int n);

/// deg G(a,b) = (a(b-a))! prod_{i=0}^{a-1} i!/(b-a+i)!
BigInteger grassmannian_degree(int a, int b);

/// (2n^2+n)! prod_{i=0}^{n-1} (2i)!/(2n+1+2i)!
BigInteger closed_form_pfaffian(int n);

/// deg OG(a, 2a+1) = ((a^2+a)/2)! * 1!2!...(a-1)! / (1!3!...(2a-1)!)
BigInteger og_degree(int a);

/// Standard Young tableaux of the rectangle with m rows and n columns, by hook lengths.
BigInteger syt_rectangle(int m, int n);

/// Shifted standard tableaux of the staircase (a, a-1, ..., 1).
BigInteger shifted_syt_staircase(int a);

/// Selberg integral S_nv(a, b, c) for positive integer a, b, c.
Rational selberg(int nv, int a, int b, int c);

/// (mn-1)! prod_{i=1}^{n} 1/((n-i)!(m-i)!) times the ordered-simplex integral
/// of prod (1-x_i)^{m-n} x_i^2 prod (x_i-x_j)^2, i.e. S_{n-1}(3, m-n+1, 1)/(n-1)!.
Rational integral_formula_generic(int m, int n);

/// (2n^2+n-1)! prod_{i=1}^{2n} 1/i! times S_{n-1}(3, 5, 2)/(n-1)!.
Rational integral_formula_pfaffian(int n);

struct MultiplicityReport {
  Family family;
  int j_local_cohomology = 0;
  RationalPolynomial slice_polynomial;
  Rational j_mult;
  Rational epsilon_mult;
  std::map<std::string, Rational> oracles;
  bool all_agree = false;
};

/// Independent closed-form values for the family, keyed by oracle name.
std::map<std::string, Rational> oracle_values(const Family& family);

MultiplicityReport build_report(const Family& family, unsigned jobs = 1);
MultiplicityReport build_report(const Family& family, const SliceFunction& slice);

}  // namespace detmult
