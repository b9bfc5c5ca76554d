#pragma once

#include "detmult/arith.hpp"
#include "detmult/ext_generic.hpp"
#include "detmult/ext_pfaffian.hpp"

#include <functional>
#include <string>
#include <vector>

namespace detmult {

struct VerifyOptions {
  int generic_max_m = 5;
  int generic_max_n = 3;
  int pfaffian_max_n = 2;
  /// Only families with n <= 2 and shortened inner ranges.
  bool quick = false;
  unsigned jobs = 1;
};

/// Where the suite gets slice lengths from. Swapping in a perturbed source is
/// how the suite is checked to fail.
struct LengthSource {
  std::function<BigInteger(const GenericParams&, int)> generic_slice;
  std::function<BigInteger(const PfaffianParams&, int)> pfaffian_slice;

  static LengthSource standard(unsigned jobs = 1);
};

struct CheckResult {
  std::string name;
  bool passed = false;
  /// Filled on failure.
  std::string expected;
  std::string actual;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  /// Informational findings that are not failures.
  std::vector<std::string> notes;

  bool passed() const;
  std::size_t failures() const;
};

VerifyReport run_verify(const VerifyOptions& options, const LengthSource& source);

}  // namespace detmult
