#ifndef WARING_ENGINE_HPP
#define WARING_ENGINE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "waring/ring.hpp"

namespace waring {

inline constexpr std::int32_t kUnreachable = -1;

// { x^n : x in R }, as sorted element indices. Always contains 0 and 1.
struct PowerSet {
  i64 n = 0;
  std::vector<i64> members;
};

PowerSet nth_power_set(const Ring& ring, i64 n);

// lengths[a] = least l such that a is a sum of l n-th powers (BFS depth over
// the addition-Cayley graph generated by the nonzero n-th powers), or
// kUnreachable. For the anchored variant the depth-1 seed is restricted to
// n-th powers of units; later summands are unrestricted.
struct LengthTable {
  i64 n = 0;
  bool anchored = false;
  std::vector<std::int32_t> lengths;
  std::int32_t max_finite = 0;
  i64 argmax = 0;          // smallest index attaining max_finite
  i64 reachable_count = 0;
};

LengthTable length_table(const Ring& ring, i64 n);
// Requires a local ring; pass a precomputed LocalStructure to avoid the
// O(|R|^2) unit scan when calling repeatedly.
LengthTable lstar_table(const Ring& ring, i64 n);
LengthTable lstar_table(const Ring& ring, i64 n,
                        const Ring::LocalStructure& ls);

struct WaringReport {
  i64 w = 0;                    // max finite length over the closure
  std::optional<i64> s;         // nullopt = -1 is not a sum of n-th powers
  i64 closure_size = 0;
  i64 witness_w = 0;
  std::optional<i64> witness_s;
  bool covers_ring = false;
};

WaringReport waring_number(const Ring& ring, i64 n);

// Independent oracle: iterated sumset DP S_{l+1} = S_l + S_1 with lengths
// taken from first appearance. Limited to |R| <= 10^4.
LengthTable naive_length_oracle(const Ring& ring, i64 n);

}  // namespace waring

#endif
