#ifndef WARING_TABLE_HPP
#define WARING_TABLE_HPP

#include <string>
#include <vector>

#include "waring/common.hpp"

namespace waring {

struct PrimeTableRow {
  i64 p = 0;
  i64 w_zp = 0;
  i64 w_qp = 0;
  i64 w_fp = 0;
  i64 s_fp = 0;
  std::string theorem_tag;
};

std::vector<i64> primes_up_to(i64 bound);

// One row per prime p <= pmax: w_n(Z_p), w_n(Q_p), w_n(F_p), s_n(F_p).
// Rows are computed in parallel but returned in prime order; primes whose
// quotient exceeds the cap are recorded in `skipped`.
std::vector<PrimeTableRow> prime_table(i64 n, i64 pmax, int threads,
                                       const RingOptions& opt = {},
                                       std::vector<i64>* skipped = nullptr);

enum class TableFormat { MARKDOWN, CSV, JSON_LINES };

std::string render_table(const std::vector<PrimeTableRow>& rows,
                         TableFormat format, bool classify = false);

}  // namespace waring

#endif
