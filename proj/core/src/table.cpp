#include "waring/table.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "waring/local.hpp"

namespace waring {

std::vector<i64> primes_up_to(i64 bound) {
  std::vector<i64> primes;
  if (bound < 2) return primes;
  std::vector<char> composite(bound + 1, 0);
  for (i64 p = 2; p <= bound; ++p) {
    if (composite[p]) continue;
    primes.push_back(p);
    for (i64 q = p * p; q <= bound; q += p) composite[q] = 1;
  }
  return primes;
}

namespace {

PrimeTableRow compute_row(i64 p, i64 n, const RingOptions& opt) {
  PrimeTableRow row;
  row.p = p;
  LocalResult ring_side = padic_waring(p, n, opt);
  LocalResult field_side = padic_field_waring(p, n, opt);
  row.w_zp = ring_side.w;
  row.w_qp = field_side.w;
  WaringReport fp = waring_number(Ring::zmod(p, opt), n);
  row.w_fp = fp.w;
  row.s_fp = fp.s.value_or(-1);
  row.theorem_tag = std::string(to_string(ring_side.trace.tag)) + "/" +
                    to_string(field_side.trace.tag);
  return row;
}

}  // namespace

std::vector<PrimeTableRow> prime_table(i64 n, i64 pmax, int threads,
                                       const RingOptions& opt,
                                       std::vector<i64>* skipped) {
  if (n < 2) throw ValidationError("exponent must be >= 2");
  if (pmax < 2) throw ValidationError("prime bound must be >= 2");
  std::vector<i64> primes = primes_up_to(pmax);
  std::vector<PrimeTableRow> rows(primes.size());
  std::vector<char> ok(primes.size(), 0);
  std::vector<char> capped(primes.size(), 0);
  if (threads < 1)
    threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<int>(
      std::min<std::size_t>(threads, std::max<std::size_t>(primes.size(), 1)));

  std::atomic<std::size_t> cursor{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= primes.size()) return;
      try {
        rows[i] = compute_row(primes[i], n, opt);
        ok[i] = 1;
      } catch (const SizeCapError&) {
        capped[i] = 1;
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<PrimeTableRow> out;
  out.reserve(primes.size());
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (ok[i]) out.push_back(std::move(rows[i]));
    else if (capped[i] && skipped) skipped->push_back(primes[i]);
  }
  return out;
}

namespace {

struct RowClass {
  std::vector<i64> primes;
  PrimeTableRow sample;
};

std::vector<RowClass> classify_rows(const std::vector<PrimeTableRow>& rows) {
  std::vector<RowClass> classes;
  for (const auto& row : rows) {
    auto it = std::find_if(classes.begin(), classes.end(), [&](const RowClass& c) {
      return c.sample.w_zp == row.w_zp && c.sample.w_qp == row.w_qp &&
             c.sample.w_fp == row.w_fp && c.sample.s_fp == row.s_fp &&
             c.sample.theorem_tag == row.theorem_tag;
    });
    if (it == classes.end())
      classes.push_back({{row.p}, row});
    else
      it->primes.push_back(row.p);
  }
  return classes;
}

std::string join_primes(const std::vector<i64>& primes, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(primes[i]);
  }
  return out;
}

}  // namespace

std::string render_table(const std::vector<PrimeTableRow>& rows,
                         TableFormat format, bool classify) {
  std::vector<RowClass> classes;
  if (classify)
    classes = classify_rows(rows);
  else
    for (const auto& row : rows) classes.push_back({{row.p}, row});

  std::ostringstream out;
  switch (format) {
    case TableFormat::CSV:
      out << "p,w_Zp,w_Qp,w_Fp,s_Fp,theorem_tag\n";
      for (const auto& c : classes)
        out << join_primes(c.primes, " ") << ',' << c.sample.w_zp << ','
            << c.sample.w_qp << ',' << c.sample.w_fp << ',' << c.sample.s_fp
            << ',' << c.sample.theorem_tag << '\n';
      break;
    case TableFormat::MARKDOWN:
      out << "| p | w_Zp | w_Qp | w_Fp | s_Fp | theorem |\n";
      out << "|---|------|------|------|------|---------|\n";
      for (const auto& c : classes)
        out << "| " << join_primes(c.primes, ", ") << " | " << c.sample.w_zp
            << " | " << c.sample.w_qp << " | " << c.sample.w_fp << " | "
            << c.sample.s_fp << " | " << c.sample.theorem_tag << " |\n";
      break;
    case TableFormat::JSON_LINES:
      for (const auto& c : classes) {
        nlohmann::json j;
        if (classify)
          j["p"] = c.primes;
        else
          j["p"] = c.primes.front();
        j["w_Zp"] = c.sample.w_zp;
        j["w_Qp"] = c.sample.w_qp;
        j["w_Fp"] = c.sample.w_fp;
        j["s_Fp"] = c.sample.s_fp;
        j["theorem_tag"] = c.sample.theorem_tag;
        out << j.dump() << '\n';
      }
      break;
  }
  return out.str();
}

}  // namespace waring
