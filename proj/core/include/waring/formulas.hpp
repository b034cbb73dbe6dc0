#ifndef WARING_FORMULAS_HPP
#define WARING_FORMULAS_HPP

#include <optional>
#include <string>
#include <vector>

#include "waring/common.hpp"

namespace waring {

// A closed-form evaluation; values are present only when every stated
// hypothesis holds.
struct ClosedForm {
  bool applicable = false;
  std::optional<i64> ring_value;   // for Z_p
  std::optional<i64> field_value;  // for Q_p
  i64 n = 0;                       // the exponent the formula speaks about
  std::string tag;
  std::string note;
};

// n = d*p^{k-1}*(p-1), p odd prime, p does not divide d: both values p^k.
ClosedForm phipk(i64 p, i64 k, i64 d);
// n = d*p^{k-1}*(p-1)/2 > 1, p odd prime, d odd, p does not divide d:
// ring (p^k-1)/2, field 2.
ClosedForm half_phipk(i64 p, i64 k, i64 d);
// n = 2^k*d, d odd: the cased value for Z_2 and Q_2.
ClosedForm two_power(i64 k, i64 d);
// p > (n-1)^4: 2 if gcd(n,p-1) | (p-1)/2 else 3, for both Z_p and Q_p.
ClosedForm large_p(i64 p, i64 n);

// Large-p residue field values (used inside large_p and by tests).
i64 large_p_w_fp(i64 p, i64 n);
i64 large_p_s_fp(i64 p, i64 n);

struct Mismatch {
  i64 p = 0;
  i64 n = 0;
  std::string formula;
  std::string detail;
};

struct CrossCheckReport {
  i64 pairs_checked = 0;
  i64 formulas_applied = 0;
  std::vector<Mismatch> mismatches;
  std::vector<std::string> skipped;
};

// Evaluates every applicable closed form against the reduction pipeline for
// all primes p <= pmax and exponents 2..nmax. Mismatches are data.
CrossCheckReport cross_check(i64 pmax, i64 nmax, const RingOptions& opt = {});

}  // namespace waring

#endif
