#include "waring/engine.hpp"

#include <algorithm>

namespace waring {

PowerSet nth_power_set(const Ring& ring, i64 n) {
  if (n < 1) throw ValidationError("exponent must be >= 1");
  PowerSet ps;
  ps.n = n;
  std::vector<char> seen(ring.size(), 0);
  for (i64 x = 0; x < ring.size(); ++x) {
    i64 y = ring.pow(x, n);
    if (!seen[y]) {
      seen[y] = 1;
      ps.members.push_back(y);
    }
  }
  std::sort(ps.members.begin(), ps.members.end());
  return ps;
}

namespace {

LengthTable bfs(const Ring& ring, i64 n, const std::vector<i64>& seed,
                const std::vector<i64>& generators, bool anchored) {
  LengthTable table;
  table.n = n;
  table.anchored = anchored;
  table.lengths.assign(ring.size(), kUnreachable);
  std::vector<i64> frontier;
  for (i64 g : seed)
    if (table.lengths[g] == kUnreachable) {
      table.lengths[g] = 1;
      frontier.push_back(g);
    }
  std::int32_t depth = 1;
  std::vector<i64> next;
  while (!frontier.empty()) {
    next.clear();
    for (i64 x : frontier)
      for (i64 g : generators) {
        i64 y = ring.add(x, g);
        if (table.lengths[y] == kUnreachable) {
          table.lengths[y] = depth + 1;
          next.push_back(y);
        }
      }
    frontier.swap(next);
    ++depth;
  }
  table.max_finite = 0;
  table.argmax = 0;
  table.reachable_count = 0;
  for (i64 x = 0; x < ring.size(); ++x) {
    if (table.lengths[x] == kUnreachable) continue;
    ++table.reachable_count;
    if (table.lengths[x] > table.max_finite) {
      table.max_finite = table.lengths[x];
      table.argmax = x;
    }
  }
  return table;
}

std::vector<i64> nonzero(const std::vector<i64>& v) {
  std::vector<i64> out;
  out.reserve(v.size());
  for (i64 x : v)
    if (x != 0) out.push_back(x);
  return out;
}

}  // namespace

LengthTable length_table(const Ring& ring, i64 n) {
  PowerSet ps = nth_power_set(ring, n);
  return bfs(ring, n, ps.members, nonzero(ps.members), false);
}

LengthTable lstar_table(const Ring& ring, i64 n) {
  return lstar_table(ring, n, ring.local_structure());
}

LengthTable lstar_table(const Ring& ring, i64 n,
                        const Ring::LocalStructure& ls) {
  if (!ls.is_local)
    throw NotApplicableError("anchored length requires a local ring");
  PowerSet ps = nth_power_set(ring, n);
  std::vector<char> seen(ring.size(), 0);
  std::vector<i64> seed;
  for (i64 u : ls.units) {
    i64 y = ring.pow(u, n);
    if (!seen[y]) {
      seen[y] = 1;
      seed.push_back(y);
    }
  }
  std::sort(seed.begin(), seed.end());
  return bfs(ring, n, seed, nonzero(ps.members), true);
}

WaringReport waring_number(const Ring& ring, i64 n) {
  LengthTable table = length_table(ring, n);
  WaringReport report;
  report.w = table.max_finite;
  report.witness_w = table.argmax;
  report.closure_size = table.reachable_count;
  report.covers_ring = table.reachable_count == ring.size();
  i64 minus_one = ring.minus_one();
  if (table.lengths[minus_one] != kUnreachable) {
    report.s = table.lengths[minus_one];
    report.witness_s = minus_one;
  }
  return report;
}

LengthTable naive_length_oracle(const Ring& ring, i64 n) {
  if (ring.size() > 10'000)
    throw SizeCapError("naive oracle limited to 10^4 elements");
  PowerSet ps = nth_power_set(ring, n);
  LengthTable table;
  table.n = n;
  table.lengths.assign(ring.size(), kUnreachable);
  std::vector<char> current(ring.size(), 0);
  for (i64 g : ps.members) {
    current[g] = 1;
    table.lengths[g] = 1;
  }
  // S_{l+1} = S_l + S_1; 0 is an n-th power so the chain is increasing.
  for (std::int32_t l = 1;; ++l) {
    std::vector<char> next(ring.size(), 0);
    bool grew = false;
    for (i64 x = 0; x < ring.size(); ++x) {
      if (!current[x]) continue;
      for (i64 g : ps.members) {
        i64 y = ring.add(x, g);
        if (!next[y]) next[y] = 1;
      }
    }
    for (i64 y = 0; y < ring.size(); ++y)
      if (next[y] && table.lengths[y] == kUnreachable) {
        table.lengths[y] = l + 1;
        grew = true;
      }
    current.swap(next);
    if (!grew) break;
  }
  table.max_finite = 0;
  table.argmax = 0;
  table.reachable_count = 0;
  for (i64 x = 0; x < ring.size(); ++x) {
    if (table.lengths[x] == kUnreachable) continue;
    ++table.reachable_count;
    if (table.lengths[x] > table.max_finite) {
      table.max_finite = table.lengths[x];
      table.argmax = x;
    }
  }
  return table;
}

}  // namespace waring
