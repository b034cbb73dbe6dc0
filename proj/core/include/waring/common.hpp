#ifndef WARING_COMMON_HPP
#define WARING_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace waring {

using i64 = std::int64_t;

// Default cap on ring cardinality. All brute-force closures are linear in
// cardinality times generator count, so this bounds both memory and time.
inline constexpr i64 kDefaultSizeCap = 10'000'000;
// Moduli must fit comfortably below 2^31 so coordinate products stay in i64.
inline constexpr i64 kModulusLimit = i64{1} << 31;

struct RingOptions {
  i64 size_cap = kDefaultSizeCap;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A supplied ring description violates a structural invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A computation would exceed the configured size cap.
class SizeCapError : public Error {
 public:
  using Error::Error;
};

// A theorem hypothesis does not hold for the given inputs.
class NotApplicableError : public Error {
 public:
  using Error::Error;
};

// The input combination is outside the supported families.
class NotSupportedError : public Error {
 public:
  using Error::Error;
};

i64 gcd_i64(i64 a, i64 b);
i64 lcm_capped(i64 a, i64 b, i64 cap);
bool is_prime(i64 p);
// Exponent of p in n (p prime).
i64 padic_valuation(i64 n, i64 p);
// Largest divisor of n coprime to p; n itself when p == 0.
i64 free_part(i64 n, i64 p);
// p^e with overflow/cap detection; throws SizeCapError beyond cap.
i64 checked_pow(i64 p, i64 e, i64 cap);
bool is_squarefree(i64 d);

}  // namespace waring

#endif
