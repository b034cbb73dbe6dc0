#ifndef WARING_LOCAL_HPP
#define WARING_LOCAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "waring/engine.hpp"
#include "waring/ring.hpp"

namespace waring {

enum class TheoremTag {
  COR_PNHDVR_I,    // w = max{w_m(quot), s_m(quot)+1}
  COR_PNHDVR_II,   // w = w_m(quot)
  COR_PNHDVR_III,  // m = 1, w = 1
  COR_HDVR,        // field, n beyond the ramification window: w = s+1
  DVR_ODD,         // field, odd exponent: w = 2
  LSTAR_MAX,       // field, unit-anchored maximization over the quotient
  DELEGATE_PADIC,  // quadratic order collapses to Z_p
  SERIES_EQ1,
  SERIES_EQ2,
  SERIES_EQ3,
  SERIES_INFINITE_LEVEL,
  SERIES_LOWER_BOUND,
  MAIN_THEOREM_BOUND,
  ALGSET2_EXACT,
  FREE_PART_COLLAPSE,  // m = 1
  LARGE_P,
};

const char* to_string(TheoremTag tag);

// Every reduced value names the theorem that produced it and the finite
// quotient (if any) that was brute-forced.
struct ReductionTrace {
  TheoremTag tag;
  std::string quotient_label;
  std::optional<i64> quotient_w;
  std::optional<i64> quotient_s;
  bool extrapolated = false;  // quotient choice goes beyond the stated cases
  std::vector<std::string> notes;
};

struct LocalResult {
  i64 w = 0;
  std::optional<i64> s;
  ReductionTrace trace;
};

// w_n / s_n of Z_p via the quotient Z/p^{2*nu_p(n)+1}.
LocalResult padic_waring(i64 p, i64 n, const RingOptions& opt = {});
// w_n / s_n of Q_p.
LocalResult padic_field_waring(i64 p, i64 n, const RingOptions& opt = {});

// Reduction for a henselian DVR given its quotient R/m^{2*nu(m)+1}, the free
// part m of n and nu(m). Throws NotApplicableError if the quotient level is
// infinite.
LocalResult dvr_waring(const Ring& quotient, i64 n, i64 m, i64 nu_m);
// Field-of-fractions side of the same reduction; `uniformizer` is the image
// of the uniformizer in the quotient.
LocalResult dvr_field_waring(const Ring& quotient, i64 uniformizer, i64 n,
                             i64 m, i64 nu_m);

// sup over valuation/unit classes g of the anchored length of g, with the
// minimum taken over all n-th power multipliers of the quotient (including
// those vanishing there, which contribute the universal s+1 cap).
i64 lstar_maximize(const Ring& quotient, i64 uniformizer, i64 n,
                   const Ring::LocalStructure& ls);

struct QuadraticResult {
  i64 w_ring = 0;
  i64 w_field = 0;
  std::optional<i64> s;
  ReductionTrace trace;
};

// Waring data of Z_p[sqrt(d)] and Q_p(sqrt(d)) for squarefree d.
// p = 2 with d = 1 (mod 4) is rejected (the order Z[sqrt(d)] is not maximal
// there in the required way).
QuadraticResult quadratic_local(i64 d, i64 p, i64 n,
                                const RingOptions& opt = {});

enum class SeriesFlavor { FORMAL, LAURENT_MULTI, LAURENT_ITERATED, MIXED };

// Residue field input: either a concrete finite field or literature values
// (w_m, s_m, characteristic) for fields we cannot enumerate.
struct ResidueField {
  static ResidueField finite(i64 p, i64 j);
  static ResidueField symbolic(std::optional<i64> w, std::optional<i64> s,
                               i64 characteristic);

  bool is_finite_field = false;
  i64 p = 0;
  i64 j = 0;
  std::optional<i64> w;  // w_m(k); nullopt = unknown/infinite
  std::optional<i64> s;  // s_m(k); nullopt = infinite
  i64 characteristic = 0;
};

struct SeriesResult {
  std::optional<i64> value;        // exact, when the theorem yields one
  std::optional<i64> lower_bound;  // otherwise only a bound
  std::optional<i64> s;            // level of the series ring; nullopt = inf
  ReductionTrace trace;
};

SeriesResult series_waring(const ResidueField& k, i64 n, SeriesFlavor flavor,
                           i64 var_count = 1, const RingOptions& opt = {});

struct CoordinateBounds {
  i64 lower_w_ring = 0;
  i64 lower_w_field = 0;
  bool exact = false;
  ReductionTrace trace;
};

// Lower bounds for coordinate rings/fields of irreducible algebraic sets
// with a regular point (the geometry is the caller's responsibility).
CoordinateBounds coordinate_bounds(const ResidueField& k, i64 n,
                                   const RingOptions& opt = {});

struct RationalBound {
  i64 bound = 0;
  i64 witness_prime = 0;
  bool trivial_odd = false;
  std::vector<i64> skipped_primes;  // primes whose quotient exceeded the cap
};

// max over primes p <= pmax of w_n(Q_p); a lower bound for w_n(Q).
RationalBound rational_lower_bound(i64 n, i64 pmax,
                                   const RingOptions& opt = {});

}  // namespace waring

#endif
