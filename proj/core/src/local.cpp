#include "waring/local.hpp"

#include <algorithm>
#include <limits>

namespace waring {

const char* to_string(TheoremTag tag) {
  switch (tag) {
    case TheoremTag::COR_PNHDVR_I: return "COR_PNHDVR_I";
    case TheoremTag::COR_PNHDVR_II: return "COR_PNHDVR_II";
    case TheoremTag::COR_PNHDVR_III: return "COR_PNHDVR_III";
    case TheoremTag::COR_HDVR: return "COR_HDVR";
    case TheoremTag::DVR_ODD: return "DVR_ODD";
    case TheoremTag::LSTAR_MAX: return "LSTAR_MAX";
    case TheoremTag::DELEGATE_PADIC: return "DELEGATE_PADIC";
    case TheoremTag::SERIES_EQ1: return "SERIES_EQ1";
    case TheoremTag::SERIES_EQ2: return "SERIES_EQ2";
    case TheoremTag::SERIES_EQ3: return "SERIES_EQ3";
    case TheoremTag::SERIES_INFINITE_LEVEL: return "SERIES_INFINITE_LEVEL";
    case TheoremTag::SERIES_LOWER_BOUND: return "SERIES_LOWER_BOUND";
    case TheoremTag::MAIN_THEOREM_BOUND: return "MAIN_THEOREM_BOUND";
    case TheoremTag::ALGSET2_EXACT: return "ALGSET2_EXACT";
    case TheoremTag::FREE_PART_COLLAPSE: return "FREE_PART_COLLAPSE";
    case TheoremTag::LARGE_P: return "LARGE_P";
  }
  return "UNKNOWN";
}

i64 lstar_maximize(const Ring& quotient, i64 uniformizer, i64 n,
                   const Ring::LocalStructure& ls) {
  LengthTable anchored = lstar_table(quotient, n, ls);
  PowerSet powers = nth_power_set(quotient, n);
  constexpr std::int32_t kInf = std::numeric_limits<std::int32_t>::max();
  i64 best = 0;
  std::vector<char> seen(quotient.size(), 0);
  for (i64 v = 0; v < n; ++v) {
    i64 shift = quotient.pow(uniformizer, v);
    std::fill(seen.begin(), seen.end(), 0);
    for (i64 u : ls.units) {
      i64 g = quotient.mul(shift, u);
      if (seen[g]) continue;
      seen[g] = 1;
      // l(g) in the fraction field = min over n-th power multipliers t of
      // the anchored length of g*t; t = 0 stands in for multipliers that
      // vanish in the quotient and contributes the universal s+1 cap.
      std::int32_t least = kInf;
      for (i64 t : powers.members) {
        std::int32_t l = anchored.lengths[quotient.mul(g, t)];
        if (l != kUnreachable && l < least) least = l;
      }
      if (least != kInf && least > best) best = least;
    }
  }
  return best;
}

namespace {

ReductionTrace quotient_trace(TheoremTag tag, const Ring& quotient,
                              const WaringReport& rep) {
  ReductionTrace trace;
  trace.tag = tag;
  trace.quotient_label = quotient.label();
  trace.quotient_w = rep.w;
  trace.quotient_s = rep.s;
  return trace;
}

}  // namespace

LocalResult dvr_waring(const Ring& quotient, i64 n, i64 m, i64 nu_m) {
  if (m == 1) {
    LocalResult res;
    res.w = 1;
    res.s = 1;
    res.trace.tag = TheoremTag::COR_PNHDVR_III;
    res.trace.quotient_label = quotient.label();
    return res;
  }
  WaringReport rep = waring_number(quotient, m);
  if (!rep.s)
    throw NotApplicableError(
        "quotient has infinite level; the DVR reduction does not apply");
  LocalResult res;
  res.s = rep.s;
  if (n <= 2 * nu_m + 1) {
    res.w = rep.w;
    res.trace = quotient_trace(TheoremTag::COR_PNHDVR_II, quotient, rep);
  } else {
    res.w = std::max(rep.w, *rep.s + 1);
    res.trace = quotient_trace(TheoremTag::COR_PNHDVR_I, quotient, rep);
  }
  return res;
}

LocalResult dvr_field_waring(const Ring& quotient, i64 uniformizer, i64 n,
                             i64 m, i64 nu_m) {
  if (m == 1) {
    LocalResult res;
    res.w = 1;
    res.s = 1;
    res.trace.tag = TheoremTag::FREE_PART_COLLAPSE;
    res.trace.quotient_label = quotient.label();
    return res;
  }
  WaringReport rep = waring_number(quotient, m);
  if (!rep.s)
    throw NotApplicableError(
        "quotient has infinite level; the field reduction does not apply");
  LocalResult res;
  res.s = rep.s;
  if (n % 2 == 1) {
    res.w = 2;
    res.trace = quotient_trace(TheoremTag::DVR_ODD, quotient, rep);
  } else if (n > 2 * nu_m + 1) {
    res.w = *rep.s + 1;
    res.trace = quotient_trace(TheoremTag::COR_HDVR, quotient, rep);
  } else {
    auto ls = quotient.local_structure();
    res.w = lstar_maximize(quotient, uniformizer, m, ls);
    res.trace = quotient_trace(TheoremTag::LSTAR_MAX, quotient, rep);
  }
  return res;
}

LocalResult padic_waring(i64 p, i64 n, const RingOptions& opt) {
  if (!is_prime(p)) throw ValidationError("p must be prime");
  if (n < 2) throw ValidationError("exponent must be >= 2");
  i64 t = padic_valuation(n, p);
  i64 modulus = checked_pow(p, 2 * t + 1, opt.size_cap);
  Ring quotient = Ring::zmod(modulus, opt);
  return dvr_waring(quotient, n, n, t);
}

LocalResult padic_field_waring(i64 p, i64 n, const RingOptions& opt) {
  if (!is_prime(p)) throw ValidationError("p must be prime");
  if (n < 2) throw ValidationError("exponent must be >= 2");
  i64 t = padic_valuation(n, p);
  i64 modulus = checked_pow(p, 2 * t + 1, opt.size_cap);
  Ring quotient = Ring::zmod(modulus, opt);
  return dvr_field_waring(quotient, p % modulus, n, n, t);
}

namespace {

bool is_square_mod(i64 d, i64 p) {
  d %= p;
  if (d < 0) d += p;
  for (i64 x = 0; x <= p / 2; ++x)
    if (x * x % p == d) return true;
  return false;
}

// Z_2[sqrt(d)] for odd d = 3 (mod 4): 2 ramifies with uniformizer
// pi = 1 + sqrt(d), pi^2 = (d-1) + 2*pi, and m^{4a+1} = (2^{2a+1}, 2^{2a} pi)
// in the basis (1, pi).
Ring ramified_odd_d_quotient(i64 d, i64 a, const RingOptions& opt) {
  i64 e1 = checked_pow(2, 2 * a + 1, opt.size_cap);
  i64 e2 = e1 / 2;
  FiniteRingSpec spec;
  spec.moduli = {e1, e2};
  spec.one = {1 % e1, 0};
  spec.mult.assign(2, std::vector<std::vector<i64>>(2));
  spec.mult[0][0] = {1 % e1, 0};
  spec.mult[0][1] = {0, 1 % e2};
  spec.mult[1][0] = {0, 1 % e2};
  spec.mult[1][1] = {(d - 1) % e1 < 0 ? (d - 1) % e1 + e1 : (d - 1) % e1,
                     2 % e2};
  spec.label = "Z[pi]/(pi^" + std::to_string(4 * a + 1) + "), pi=1+sqrt(" +
               std::to_string(d) + ")";
  return Ring(std::move(spec), opt);
}

}  // namespace

QuadraticResult quadratic_local(i64 d, i64 p, i64 n, const RingOptions& opt) {
  if (!is_prime(p)) throw ValidationError("p must be prime");
  if (n < 2) throw ValidationError("exponent must be >= 2");
  if (d == 0 || d == 1 || !is_squarefree(d))
    throw ValidationError("d must be squarefree and different from 0, 1");
  i64 d4 = ((d % 4) + 4) % 4;
  if (p == 2 && d4 == 1)
    throw NotSupportedError(
        "p = 2 with d = 1 (mod 4) is not supported (non-maximal order)");

  const i64 a = padic_valuation(n, p);
  QuadraticResult out;

  if (d % p != 0 && p != 2 && is_square_mod(d, p)) {
    // sqrt(d) already lies in Z_p; the local order is Z_p itself.
    LocalResult ring_side = padic_waring(p, n, opt);
    LocalResult field_side = padic_field_waring(p, n, opt);
    out.w_ring = ring_side.w;
    out.w_field = field_side.w;
    out.s = ring_side.s;
    out.trace = ring_side.trace;
    out.trace.tag = TheoremTag::DELEGATE_PADIC;
    out.trace.notes.push_back("split/inert to Z_p; ring tag " +
                              std::string(to_string(ring_side.trace.tag)) +
                              ", field tag " +
                              std::string(to_string(field_side.trace.tag)));
    return out;
  }

  Ring quotient = Ring::zmod(2);  // replaced below
  i64 uniformizer = 0;
  i64 nu_m = 0;
  bool extrapolated = false;
  if (d % p == 0) {
    // Ramified: uniformizer sqrt(d), nu(p) = 2, so nu(n) = 2a and
    // m^{2 nu(n)+1} = (p^{2a+1}, p^{2a} sqrt(d)) locally.
    nu_m = 2 * a;
    i64 e1 = checked_pow(p, nu_m + 1, opt.size_cap);
    quotient = Ring::quadratic_quotient(d, e1, e1 / p, opt);
    uniformizer = quotient.index_of(std::vector<i64>{0, 1});
  } else if (p == 2) {
    // d = 3 (mod 4): ramified with uniformizer 1 + sqrt(d).
    nu_m = 2 * a;
    quotient = ramified_odd_d_quotient(d, a, opt);
    uniformizer = quotient.index_of(std::vector<i64>{0, 1});
  } else {
    // Unramified: residue field F_{p^2}, nu(n) = a.
    nu_m = a;
    if (a == 0) {
      quotient = Ring::gf(p, 2, opt);
    } else {
      // Galois-ring quotient Z[sqrt(d)]/(p^{2a+1}); d is a non-residue so
      // x^2 - d stays irreducible mod p. The quotient choice extends the
      // proven cases by analogy, hence the extrapolated flag.
      i64 e = checked_pow(p, 2 * a + 1, opt.size_cap);
      quotient = Ring::quadratic_quotient(d, e, e, opt);
      extrapolated = true;
    }
    uniformizer = quotient.index_of([&] {
      std::vector<i64> c(quotient.rank(), 0);
      c[0] = p;
      return c;
    }());
  }

  LocalResult ring_side = dvr_waring(quotient, n, n, nu_m);
  LocalResult field_side = dvr_field_waring(quotient, uniformizer, n, n, nu_m);
  out.w_ring = ring_side.w;
  out.w_field = field_side.w;
  out.s = ring_side.s;
  out.trace = ring_side.trace;
  out.trace.extrapolated = extrapolated;
  out.trace.notes.push_back("field tag " +
                            std::string(to_string(field_side.trace.tag)));
  return out;
}

ResidueField ResidueField::finite(i64 p, i64 j) {
  if (!is_prime(p)) throw ValidationError("residue field: p must be prime");
  if (j < 1) throw ValidationError("residue field: degree must be >= 1");
  ResidueField k;
  k.is_finite_field = true;
  k.p = p;
  k.j = j;
  k.characteristic = p;
  return k;
}

ResidueField ResidueField::symbolic(std::optional<i64> w, std::optional<i64> s,
                                    i64 characteristic) {
  ResidueField k;
  k.w = w;
  k.s = s;
  k.characteristic = characteristic;
  return k;
}

namespace {

struct ResidueValues {
  std::optional<i64> w;
  std::optional<i64> s;
  std::string label;
};

ResidueValues residue_values(const ResidueField& k, i64 m,
                             const RingOptions& opt) {
  if (k.is_finite_field) {
    Ring field = Ring::gf(k.p, k.j, opt);
    WaringReport rep = waring_number(field, m);
    return {rep.w, rep.s, field.label()};
  }
  return {k.w, k.s, "symbolic"};
}

}  // namespace

SeriesResult series_waring(const ResidueField& k, i64 n, SeriesFlavor flavor,
                           i64 var_count, const RingOptions& opt) {
  if (n < 1) throw ValidationError("exponent must be >= 1");
  if (var_count < 1) throw ValidationError("variable count must be >= 1");
  i64 m = free_part(n, k.characteristic);
  SeriesResult res;
  if (m == 1) {
    res.value = 1;
    res.s = 1;
    res.trace.tag = TheoremTag::FREE_PART_COLLAPSE;
    return res;
  }
  ResidueValues rv = residue_values(k, m, opt);
  res.trace.quotient_label = rv.label;
  res.trace.quotient_w = rv.w;
  res.trace.quotient_s = rv.s;
  if (rv.s) {
    res.s = rv.s;
    switch (flavor) {
      case SeriesFlavor::FORMAL:
        if (!rv.w) throw NotApplicableError("missing residue field data: w");
        res.value = std::max(*rv.w, *rv.s + 1);
        res.trace.tag = TheoremTag::SERIES_EQ1;
        break;
      case SeriesFlavor::LAURENT_MULTI:
      case SeriesFlavor::LAURENT_ITERATED:
        res.value = *rv.s + 1;
        res.trace.tag = TheoremTag::SERIES_EQ2;
        break;
      case SeriesFlavor::MIXED:
        res.value = *rv.s + 1;
        res.trace.tag = TheoremTag::SERIES_EQ3;
        break;
    }
    return res;
  }
  // Infinite level: exact for iterated Laurent flavors, only a bound for
  // the symmetric ones.
  if (!rv.w) throw NotApplicableError("missing residue field data: w");
  if (flavor == SeriesFlavor::LAURENT_ITERATED ||
      flavor == SeriesFlavor::MIXED) {
    res.value = *rv.w;
    res.trace.tag = TheoremTag::SERIES_INFINITE_LEVEL;
  } else {
    res.lower_bound = *rv.w;
    res.trace.tag = TheoremTag::SERIES_LOWER_BOUND;
  }
  return res;
}

CoordinateBounds coordinate_bounds(const ResidueField& k, i64 n,
                                   const RingOptions& opt) {
  if (n < 1) throw ValidationError("exponent must be >= 1");
  i64 m = free_part(n, k.characteristic);
  CoordinateBounds res;
  if (m == 1) {
    res.lower_w_ring = 1;
    res.lower_w_field = 1;
    res.exact = true;
    res.trace.tag = TheoremTag::FREE_PART_COLLAPSE;
    return res;
  }
  ResidueValues rv = residue_values(k, m, opt);
  res.trace.quotient_label = rv.label;
  res.trace.quotient_w = rv.w;
  res.trace.quotient_s = rv.s;
  if (rv.s) {
    if (n == 2 && k.characteristic != 2) {
      res.lower_w_ring = *rv.s + 1;
      res.lower_w_field = *rv.s + 1;
      res.exact = true;
      res.trace.tag = TheoremTag::ALGSET2_EXACT;
      return res;
    }
    if (!rv.w) throw NotApplicableError("missing residue field data: w");
    res.lower_w_ring = std::max(*rv.w, *rv.s + 1);
    res.lower_w_field = *rv.s + 1;
    res.trace.tag = TheoremTag::MAIN_THEOREM_BOUND;
    return res;
  }
  if (!rv.w) throw NotApplicableError("missing residue field data: w");
  res.lower_w_ring = *rv.w;
  res.lower_w_field = *rv.w;
  res.trace.tag = TheoremTag::MAIN_THEOREM_BOUND;
  return res;
}

RationalBound rational_lower_bound(i64 n, i64 pmax, const RingOptions& opt) {
  if (n < 2) throw ValidationError("exponent must be >= 2");
  if (pmax < 2) throw ValidationError("prime bound must be >= 2");
  RationalBound out;
  out.trivial_odd = (n % 2 == 1);
  for (i64 p = 2; p <= pmax; ++p) {
    if (!is_prime(p)) continue;
    try {
      LocalResult r = padic_field_waring(p, n, opt);
      if (r.w > out.bound) {
        out.bound = r.w;
        out.witness_prime = p;
      }
    } catch (const SizeCapError&) {
      out.skipped_primes.push_back(p);
    }
  }
  return out;
}

}  // namespace waring
