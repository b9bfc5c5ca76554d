#include "detmult/verify.hpp"

#include "detmult/multiplicities.hpp"
#include "detmult/partitions.hpp"
#include "detmult/schur.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace detmult {

namespace {

class Recorder {
 public:
  explicit Recorder(VerifyReport& report) : report_(report) {}

  template <typename A, typename B>
  void equal(const std::string& name, const A& expected, const B& actual) {
    CheckResult r{name, expected == actual, {}, {}};
    if (!r.passed) {
      r.expected = render(expected);
      r.actual = render(actual);
    }
    report_.checks.push_back(std::move(r));
  }

  void truth(const std::string& name, bool ok, const std::string& detail = {}) {
    CheckResult r{name, ok, {}, {}};
    if (!ok) {
      r.expected = "true";
      r.actual = detail.empty() ? "false" : detail;
    }
    report_.checks.push_back(std::move(r));
  }

  void note(std::string text) { report_.notes.push_back(std::move(text)); }

 private:
  static std::string render(const BigInteger& v) { return to_string(v); }
  static std::string render(const Rational& v) { return to_string(v); }
  static std::string render(const std::string& v) { return v; }
  static std::string render(const RationalPolynomial& p) { return p.to_string(); }
  template <typename T>
  static std::string render(const T& v) {
    std::ostringstream out;
    if constexpr (requires { out << v; }) {
      out << v;
    } else {
      out << "{";
      bool first = true;
      for (const auto& item : v) {
        out << (first ? "" : ",") << item;
        first = false;
      }
      out << "}";
    }
    return out.str();
  }

  VerifyReport& report_;
};

// Semistandard tableaux of shape lambda with entries in 1..N, filled row by row.
BigInteger count_ssyt(const std::vector<int>& shape, int N) {
  std::vector<std::vector<int>> grid;
  for (int len : shape) grid.emplace_back(static_cast<std::size_t>(len), 0);
  BigInteger count = 0;
  auto rec = [&](auto&& self, std::size_t row, std::size_t col) -> void {
    if (row == grid.size()) {
      ++count;
      return;
    }
    if (col == grid[row].size()) {
      self(self, row + 1, 0);
      return;
    }
    int lo = 1;
    if (col > 0) lo = std::max(lo, grid[row][col - 1]);
    if (row > 0) lo = std::max(lo, grid[row - 1][col] + 1);
    for (int v = lo; v <= N; ++v) {
      grid[row][col] = v;
      self(self, row, col + 1);
    }
  };
  rec(rec, 0, 0);
  return count;
}

// Exact integral over [0,1]^nv of prod x_i^{a-1}(1-x_i)^{b-1} prod_{i<j}(x_i-x_j)^{2c},
// by expanding into monomials.
Rational cube_integral(int nv, int a, int b, int c) {
  using Monomial = std::vector<int>;
  std::map<Monomial, BigInteger> poly{{Monomial(static_cast<std::size_t>(nv), 0), 1}};
  auto multiply = [&](const std::map<Monomial, BigInteger>& factor) {
    std::map<Monomial, BigInteger> out;
    for (const auto& [ma, ca] : poly)
      for (const auto& [mb, cb] : factor) {
        Monomial m = ma;
        for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
        out[m] += ca * cb;
      }
    poly = std::move(out);
  };
  for (int i = 0; i < nv; ++i) {
    std::map<Monomial, BigInteger> factor;
    for (int k = 0; k <= b - 1; ++k) {
      Monomial m(static_cast<std::size_t>(nv), 0);
      m[static_cast<std::size_t>(i)] = a - 1 + k;
      factor[m] += binomial(b - 1, k) * ((k % 2) ? -1 : 1);
    }
    multiply(factor);
  }
  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j)
      for (int r = 0; r < 2 * c; ++r) {
        Monomial mi(static_cast<std::size_t>(nv), 0), mj(static_cast<std::size_t>(nv), 0);
        mi[static_cast<std::size_t>(i)] = 1;
        mj[static_cast<std::size_t>(j)] = 1;
        multiply({{mi, 1}, {mj, -1}});
      }
  Rational total = 0;
  for (const auto& [m, coeff] : poly) {
    Rational term(coeff);
    for (int e : m) term /= e + 1;
    total += term;
  }
  return total;
}

std::string label(const std::string& base, const std::string& params) { return base + " " + params; }

void check_arith(Recorder& rec, bool quick) {
  const int max_p = quick ? 4 : 8;
  const int max_b = quick ? 20 : 50;
  bool faulhaber_ok = true;
  std::string detail;
  for (int p = 0; p <= max_p; ++p) {
    const RationalPolynomial f = faulhaber_polynomial(p);
    BigInteger direct = 0;
    for (int b = 0; b <= max_b; ++b) {
      if (b > 0) direct += boost::multiprecision::pow(BigInteger(b), static_cast<unsigned>(p));
      if (f(static_cast<long>(b)) != Rational(direct)) {
        faulhaber_ok = false;
        detail = "p=" + std::to_string(p) + " b=" + std::to_string(b);
      }
    }
  }
  rec.truth("arith: faulhaber matches direct power sums", faulhaber_ok, detail);

  bool odd_ok = true;
  for (int k = 3; k <= 20; k += 2) odd_ok = odd_ok && bernoulli(k) == 0;
  rec.truth("arith: odd bernoulli numbers vanish", odd_ok);

  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> small(-5, 5);
  bool range_ok = true;
  bool interp_ok = true;
  for (int trial = 0; trial < (quick ? 5 : 20); ++trial) {
    const int deg = trial % 7;
    std::vector<Rational> coeffs;
    for (int i = 0; i <= deg; ++i) coeffs.emplace_back(small(rng), 1 + std::abs(small(rng)));
    const RationalPolynomial f(coeffs);
    const long a = small(rng);
    const RationalPolynomial F = poly_range_sum(f, a);
    Rational acc = 0;
    for (long b = a; b <= 30; ++b) {
      acc += f(b);
      range_ok = range_ok && F(b) == acc;
    }
    std::vector<std::pair<long, Rational>> nodes;
    for (int i = 0; i <= f.degree(); ++i) nodes.emplace_back(3 * i - 4, f(static_cast<long>(3 * i - 4)));
    if (!nodes.empty()) interp_ok = interp_ok && interpolate(nodes) == f;
  }
  rec.truth("arith: poly_range_sum matches termwise sums", range_ok);
  rec.truth("arith: interpolation inverts sampling", interp_ok);
}

void check_partitions(Recorder& rec, bool quick) {
  bool involution = true;
  for (int len = 0; len <= 6; ++len)
    for (const Partition& x : partitions_in_box(len, 6)) involution = involution && conjugate(conjugate(x)) == x;
  rec.truth("partitions: conjugate is an involution", involution);

  const int max_n = quick ? 3 : 4;
  const int max_d = quick ? 3 : 5;
  for (int n = 1; n <= max_n; ++n)
    for (int p = 1; p <= n; ++p)
      for (int d = 1; d <= max_d; ++d) {
        std::vector<Partition> X;
        for (const Partition& x : partitions_in_box(n, d))
          if (x.size() == static_cast<long>(p) * d) X.push_back(x);
        std::vector<ZEntry> from_definition;
        for (const ZEntry& e : z_set_from_definition(X, n))
          if (e.z.first() <= d - 1) from_definition.push_back(e);
        rec.truth(label("partitions: Z-set definition equals closed form",
                        "n=" + std::to_string(n) + " p=" + std::to_string(p) + " d=" + std::to_string(d)),
                  from_definition == z_set_closed_form(n, p, d));
      }
  for (int n = 1; n <= max_n; ++n)
    for (int d = 1; d <= (quick ? 4 : 6); ++d)
      rec.truth(label("partitions: Z^d_n is the maximal-minor set", "n=" + std::to_string(n) + " d=" + std::to_string(d)),
                z_set_closed_form(n, n, d) == z_set_maximal_minors(n, d));
}

void check_schur(Recorder& rec, bool quick) {
  const int max_size = quick ? 4 : 6;
  bool ssyt_ok = true;
  std::string detail;
  for (int N = 1; N <= 4; ++N)
    for (const Partition& x : partitions_in_box(N, max_size)) {
      if (x.size() > max_size) continue;
      std::vector<long> w(x.parts().begin(), x.parts().end());
      std::vector<int> shape;
      for (int part : x.parts())
        if (part > 0) shape.push_back(part);
      if (weyl_dimension(DominantWeight(w)) != count_ssyt(shape, N)) {
        ssyt_ok = false;
        detail = x.to_string() + " N=" + std::to_string(N);
      }
    }
  rec.truth("schur: weyl dimension equals SSYT count", ssyt_ok, detail);

  bool shift_ok = true;
  bool dual_ok = true;
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> entry(-6, 6), offset(-5, 5);
  for (int trial = 0; trial < (quick ? 50 : 300); ++trial) {
    std::vector<long> w(static_cast<std::size_t>(1 + trial % 5));
    for (long& v : w) v = entry(rng);
    std::sort(w.rbegin(), w.rend());
    const DominantWeight lambda(w);
    shift_ok = shift_ok && weyl_dimension(shift(lambda, offset(rng))) == weyl_dimension(lambda);
    std::vector<long> dual(w.rbegin(), w.rend());
    for (long& v : dual) v = -v;
    dual_ok = dual_ok && weyl_dimension(DominantWeight(dual)) == weyl_dimension(lambda);
  }
  rec.truth("schur: shift invariance", shift_ok);
  rec.truth("schur: dual weight has the same dimension", dual_ok);
}

void check_multiplicity_report(Recorder& rec, const Family& family, const SliceFunction& slice,
                               const std::string& tag) {
  try {
    const MultiplicityReport report = build_report(family, slice);
    rec.truth(label("polynomiality: held-out nodes match", tag), true);
    rec.equal(label("multiplicity: J equals epsilon", tag), report.j_mult, report.epsilon_mult);
    for (const auto& [name, value] : report.oracles)
      rec.equal(label("multiplicity: J equals " + name, tag), value, report.j_mult);
    rec.truth(label("multiplicity: integral value", tag), boost::multiprecision::denominator(report.j_mult) == 1,
              to_string(report.j_mult));
  } catch (const ConsistencyError& e) {
    rec.truth(label("polynomiality: held-out nodes match", tag), false, e.what());
  }
}

void check_generic(Recorder& rec, const GenericParams& params, const LengthSource& source, bool quick) {
  const int m = params.m;
  const int n = params.n;
  const std::string tag = "m=" + std::to_string(m) + " n=" + std::to_string(n);
  const int max_d = quick ? 6 : 8;
  auto slice = [&](int d) { return source.generic_slice(params, d); };

  bool telescoping = true;
  for (int d = 2; d <= max_d; ++d)
    telescoping = telescoping && slice(d) == cumulative_length(params, d) - cumulative_length(params, d - 1);
  telescoping = telescoping && slice(1) == cumulative_length(params, 1);
  rec.truth(label("generic: telescoping slice/cumulative", tag), telescoping);

  bool floor_ok = slice(n) >= 1;
  for (int d = 1; d < n; ++d) floor_ok = floor_ok && slice(d) == 0;
  rec.truth(label("generic: vanishing floor at d=n", tag), floor_ok);

  bool monotone = true;
  for (int d = n; d < max_d; ++d) monotone = monotone && slice(d) <= slice(d + 1);
  rec.truth(label("generic: slice lengths nondecreasing", tag), monotone);

  if (n == 1) {
    bool ok = true;
    for (int d = 1; d <= max_d + 4; ++d) ok = ok && slice(d) == binomial(d + m - 2, m - 1);
    rec.truth(label("generic: n=1 slice equals monomial count", tag), ok);
  }

  std::set<int> lemma;
  for (int s = 0; s < n; ++s) lemma.insert(params.finite_ext_index() - s * (m - n));
  for (int d = 1; d <= max_d; ++d) {
    const std::set<int> degrees = ext_nonvanishing_degrees(params, d);
    if (d >= n) {
      bool structure = true;
      for (int j : degrees) structure = structure && (1 - j) % (m - n) == 0 && j >= 2 && j <= params.finite_ext_index();
      rec.truth(label("generic: degree set divisibility", tag + " d=" + std::to_string(d)), structure);
      rec.equal(label("generic: degree set matches vanishing lemma", tag + " d=" + std::to_string(d)), lemma, degrees);
    } else if (degrees != lemma) {
      std::ostringstream note;
      note << "generic " << tag << " d=" << d << ": first-principles degrees {";
      bool first = true;
      for (int j : degrees) {
        note << (first ? "" : ",") << j;
        first = false;
      }
      note << "} differ from the d-free criterion (d < n)";
      rec.note(note.str());
    }
    bool classification = true;
    for (int j = 0; j <= params.ring_dimension(); ++j) {
      const bool finite = ext_length_classification(params, j, d) == LengthClassification::finite_nonzero;
      classification = classification && finite == (j == params.finite_ext_index() && d >= n);
    }
    rec.truth(label("generic: finite length only at n(m-n)+1 with d>=n", tag + " d=" + std::to_string(d)),
              classification);
  }

  check_multiplicity_report(rec, Family(params), slice, "generic " + tag);
  if (n == 2) {
    try {
      rec.equal(label("generic: Catalan value", tag), Rational(binomial(2 * m, m) / (m + 1)),
                j_multiplicity_from(Family(params), slice_polynomial(Family(params), slice)));
    } catch (const ConsistencyError& e) {
      rec.truth(label("generic: Catalan value", tag), false, e.what());
    }
  }
}

void check_pfaffian(Recorder& rec, const PfaffianParams& params, const LengthSource& source, bool quick) {
  const int n = params.n;
  const std::string tag = "n=" + std::to_string(n);
  const int max_d = quick ? 6 : 10;
  auto slice = [&](int d) { return source.pfaffian_slice(params, d); };

  bool telescoping = slice(1) == pf_cumulative_length(params, 1);
  for (int d = 2; d <= max_d; ++d)
    telescoping = telescoping && slice(d) == pf_cumulative_length(params, d) - pf_cumulative_length(params, d - 1);
  rec.truth(label("pfaffian: telescoping slice/cumulative", tag), telescoping);

  bool floor_ok = slice(2 * n - 1) == 1;
  for (int d = 1; d < 2 * n - 1; ++d) floor_ok = floor_ok && slice(d) == 0;
  rec.truth(label("pfaffian: vanishing floor, value 1 at d=2n-1", tag), floor_ok);

  if (n == 1) {
    bool ok = true;
    for (int d = 1; d <= max_d + 4; ++d) ok = ok && slice(d) == BigInteger(d) * (d + 1) / 2;
    rec.truth(label("pfaffian: n=1 slice equals d(d+1)/2", tag), ok);
  }

  bool parity = true;
  bool classification = true;
  for (int d = 1; d <= max_d; ++d) {
    for (int j : pf_nonvanishing_degrees(params, d)) parity = parity && j % 2 == 1 && j >= 3 && j <= 2 * n + 1;
    for (int j = 0; j <= params.ring_dimension(); ++j) {
      const bool finite = pf_length_classification(params, j, d) == LengthClassification::finite_nonzero;
      classification = classification && finite == (j == params.finite_ext_index() && d >= 2 * n - 1);
    }
  }
  rec.truth(label("pfaffian: nonvanishing degrees odd in [3, 2n+1]", tag), parity);
  rec.truth(label("pfaffian: finite length only at 2n+1 with d>=2n-1", tag), classification);

  bool pattern = true;
  for (int d = 2 * n - 1; d <= max_d; ++d) {
    const long top = d + 1 - 2 * n;
    std::vector<long> eps(static_cast<std::size_t>(n - 1), top);
    const DominantWeight w = PfaffianWeightSlice{d, eps}.weight(params);
    for (std::size_t i = 0; i + 1 < w.length(); i += 2) pattern = pattern && w[i] == w[i + 1];
  }
  rec.truth(label("pfaffian: slice weights have doubled pairs", tag), pattern);

  check_multiplicity_report(rec, Family(params), slice, "pfaffian " + tag);
}

void check_selberg(Recorder& rec) {
  rec.equal("selberg: S_1(3,2,1) = 1/12", Rational(1, 12), selberg(1, 3, 2, 1));
  rec.equal("selberg: S_1(3,5,2) = 1/105", Rational(1, 105), selberg(1, 3, 5, 2));
  for (int m = 3; m <= 6; ++m)
    rec.equal("selberg: S_1(3,m-1,1) = 2/(m^3-m) m=" + std::to_string(m), Rational(2, m * m * m - m),
              selberg(1, 3, m - 1, 1));
  for (int nv = 1; nv <= 2; ++nv)
    for (int a = 1; a <= 4; ++a)
      for (int b = 1; b <= 4; ++b)
        rec.equal("selberg: closed form equals expanded integral nv=" + std::to_string(nv) + " a=" + std::to_string(a) +
                      " b=" + std::to_string(b),
                  cube_integral(nv, a, b, 1), selberg(nv, a, b, 1));
}

}  // namespace

LengthSource LengthSource::standard(unsigned jobs) {
  return {[jobs](const GenericParams& p, int d) { return slice_length(p, d, jobs); },
          [jobs](const PfaffianParams& p, int d) { return pf_slice_length(p, d, jobs); }};
}

bool VerifyReport::passed() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

VerifyReport run_verify(const VerifyOptions& options, const LengthSource& source) {
  VerifyReport report;
  Recorder rec(report);
  const bool quick = options.quick;
  const int max_n = quick ? std::min(options.generic_max_n, 2) : options.generic_max_n;
  const int pf_max_n = quick ? std::min(options.pfaffian_max_n, 2) : options.pfaffian_max_n;

  check_arith(rec, quick);
  check_partitions(rec, quick);
  check_schur(rec, quick);
  for (int n = 1; n <= max_n; ++n)
    for (int m = n + 1; m <= options.generic_max_m; ++m) check_generic(rec, GenericParams::make(m, n), source, quick);
  for (int n = 1; n <= pf_max_n; ++n) check_pfaffian(rec, PfaffianParams::make(n), source, quick);
  check_selberg(rec);
  return report;
}

}  // namespace detmult
