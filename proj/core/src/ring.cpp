#include "waring/ring.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace waring {

i64 gcd_i64(i64 a, i64 b) { return std::gcd(a, b); }

i64 lcm_capped(i64 a, i64 b, i64 cap) {
  i64 g = std::gcd(a, b);
  i64 r = a / g;
  if (r > cap / b + 1) throw SizeCapError("lcm exceeds cap");
  return r * b;
}

bool is_prime(i64 p) {
  if (p < 2) return false;
  for (i64 d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

i64 padic_valuation(i64 n, i64 p) {
  i64 v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

i64 free_part(i64 n, i64 p) {
  if (p == 0) return n;
  while (n % p == 0) n /= p;
  return n;
}

i64 checked_pow(i64 p, i64 e, i64 cap) {
  i64 r = 1;
  for (i64 i = 0; i < e; ++i) {
    if (r > cap / p)
      throw SizeCapError("power " + std::to_string(p) + "^" +
                         std::to_string(e) + " exceeds cap " +
                         std::to_string(cap));
    r *= p;
  }
  return r;
}

bool is_squarefree(i64 d) {
  if (d == 0) return false;
  if (d < 0) d = -d;
  for (i64 q = 2; q * q <= d; ++q)
    if (d % (q * q) == 0) return false;
  return true;
}

namespace {

i64 mod_reduce(i64 x, i64 m) {
  x %= m;
  if (x < 0) x += m;
  return x;
}

}  // namespace

Ring::Ring(FiniteRingSpec spec, const RingOptions& opt) : spec_(std::move(spec)) {
  finalize(opt);
  validate(opt);
}

void Ring::finalize(const RingOptions& opt) {
  const i64 r = static_cast<i64>(spec_.moduli.size());
  if (r < 1) throw ValidationError("ring rank must be positive");
  size_ = 1;
  stride_.assign(r, 1);
  for (i64 i = 0; i < r; ++i) {
    i64 m = spec_.moduli[i];
    if (m < 1) throw ValidationError("modulus at position " +
                                     std::to_string(i) + " must be >= 1");
    if (m > kModulusLimit) throw ValidationError("modulus exceeds 2^31");
    stride_[i] = size_;
    if (size_ > opt.size_cap / m)
      throw SizeCapError("cardinality exceeds size cap " +
                         std::to_string(opt.size_cap));
    size_ *= m;
  }
  if (spec_.one.size() != static_cast<size_t>(r))
    throw ValidationError("identity vector has wrong rank");
  for (i64 i = 0; i < r; ++i) spec_.one[i] = mod_reduce(spec_.one[i], spec_.moduli[i]);
  if (spec_.mult.size() != static_cast<size_t>(r))
    throw ValidationError("mult tensor has wrong rank");
  for (i64 i = 0; i < r; ++i) {
    if (spec_.mult[i].size() != static_cast<size_t>(r))
      throw ValidationError("mult tensor row " + std::to_string(i) +
                            " has wrong rank");
    for (i64 j = 0; j < r; ++j) {
      if (spec_.mult[i][j].size() != static_cast<size_t>(r))
        throw ValidationError("mult entry (" + std::to_string(i) + "," +
                              std::to_string(j) + ") has wrong rank");
      for (i64 k = 0; k < r; ++k)
        spec_.mult[i][j][k] = mod_reduce(spec_.mult[i][j][k], spec_.moduli[k]);
    }
  }
  one_idx_ = index_of(spec_.one);
  minus_one_idx_ = neg(one_idx_);
}

void Ring::validate(const RingOptions&) const {
  const i64 r = rank();
  // Commutativity.
  for (i64 i = 0; i < r; ++i)
    for (i64 j = i + 1; j < r; ++j)
      if (spec_.mult[i][j] != spec_.mult[j][i])
        throw ValidationError("multiplication not commutative at basis pair (" +
                              std::to_string(i) + "," + std::to_string(j) + ")");
  // Well-definedness: m_i * c[i][j][k] = 0 (mod m_k).
  for (i64 i = 0; i < r; ++i)
    for (i64 j = 0; j < r; ++j)
      for (i64 k = 0; k < r; ++k) {
        i64 v = (spec_.moduli[i] % spec_.moduli[k]) * spec_.mult[i][j][k] %
                spec_.moduli[k];
        if (v != 0)
          throw ValidationError(
              "multiplication does not respect moduli at (" +
              std::to_string(i) + "," + std::to_string(j) + "," +
              std::to_string(k) + ")");
      }
  // Identity on basis vectors.
  std::vector<i64> basis(r, 0);
  for (i64 i = 0; i < r; ++i) {
    std::fill(basis.begin(), basis.end(), 0);
    basis[i] = 1;
    auto prod = mul_coords(spec_.one, basis);
    if (prod != basis)
      throw ValidationError("identity fails on basis vector " +
                            std::to_string(i));
  }
  // Associativity on basis triples: exhaustive for rank <= 8, sampled above
  // (the check is cubic in rank only, so this matters for user specs).
  auto basis_vec = [&](i64 i) {
    std::vector<i64> e(r, 0);
    e[i] = 1;
    return e;
  };
  auto check_triple = [&](i64 i, i64 j, i64 k) {
    auto ei = basis_vec(i), ej = basis_vec(j), ek = basis_vec(k);
    auto left = mul_coords(mul_coords(ei, ej), ek);
    auto right = mul_coords(ei, mul_coords(ej, ek));
    if (left != right)
      throw ValidationError("associativity fails at basis triple (" +
                            std::to_string(i) + "," + std::to_string(j) + "," +
                            std::to_string(k) + ")");
  };
  if (r <= 8) {
    for (i64 i = 0; i < r; ++i)
      for (i64 j = 0; j < r; ++j)
        for (i64 k = 0; k < r; ++k) check_triple(i, j, k);
  } else {
    std::mt19937_64 rng(0xa55ee);
    std::uniform_int_distribution<i64> pick(0, r - 1);
    for (int t = 0; t < 100000; ++t) check_triple(pick(rng), pick(rng), pick(rng));
  }
}

std::vector<i64> Ring::coords_of(i64 idx) const {
  const i64 r = rank();
  std::vector<i64> c(r);
  for (i64 i = 0; i < r; ++i) {
    c[i] = (idx / stride_[i]) % spec_.moduli[i];
  }
  return c;
}

i64 Ring::index_of(std::span<const i64> coords) const {
  const i64 r = rank();
  if (coords.size() != static_cast<size_t>(r))
    throw ValidationError("coordinate vector has wrong rank");
  i64 idx = 0;
  for (i64 i = 0; i < r; ++i)
    idx += mod_reduce(coords[i], spec_.moduli[i]) * stride_[i];
  return idx;
}

i64 Ring::add(i64 a, i64 b) const {
  const i64 r = rank();
  if (r == 1) {
    i64 s = a + b;
    return s >= spec_.moduli[0] ? s - spec_.moduli[0] : s;
  }
  i64 idx = 0;
  for (i64 i = 0; i < r; ++i) {
    i64 m = spec_.moduli[i];
    i64 s = (a / stride_[i]) % m + (b / stride_[i]) % m;
    if (s >= m) s -= m;
    idx += s * stride_[i];
  }
  return idx;
}

i64 Ring::neg(i64 a) const {
  const i64 r = rank();
  i64 idx = 0;
  for (i64 i = 0; i < r; ++i) {
    i64 m = spec_.moduli[i];
    i64 c = (a / stride_[i]) % m;
    idx += (c == 0 ? 0 : m - c) * stride_[i];
  }
  return idx;
}

std::vector<i64> Ring::mul_coords(std::span<const i64> a,
                                  std::span<const i64> b) const {
  const i64 r = rank();
  std::vector<i64> out(r, 0);
  for (i64 i = 0; i < r; ++i) {
    if (a[i] == 0) continue;
    for (i64 j = 0; j < r; ++j) {
      if (b[j] == 0) continue;
      const auto& c = spec_.mult[i][j];
      for (i64 k = 0; k < r; ++k) {
        if (c[k] == 0) continue;
        i64 m = spec_.moduli[k];
        out[k] = (out[k] + (a[i] * b[j]) % m * c[k]) % m;
      }
    }
  }
  return out;
}

i64 Ring::mul(i64 a, i64 b) const {
  if (rank() == 1) {
    i64 m = spec_.moduli[0];
    i64 c = spec_.mult[0][0][0];
    return (a * b) % m * c % m;
  }
  auto ca = coords_of(a);
  auto cb = coords_of(b);
  return index_of(mul_coords(ca, cb));
}

i64 Ring::pow(i64 a, i64 e) const {
  i64 result = one_idx_;
  i64 base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

i64 Ring::characteristic() const {
  const i64 r = rank();
  i64 ch = 1;
  for (i64 i = 0; i < r; ++i) {
    i64 m = spec_.moduli[i];
    i64 order = m / std::gcd(spec_.one[i], m);
    ch = lcm_capped(ch, order, size_);
  }
  return ch;
}

Ring::LocalStructure Ring::local_structure() const {
  LocalStructure ls;
  ls.is_unit.assign(size_, 0);
  if (rank() == 1 && spec_.mult[0][0][0] == 1 % spec_.moduli[0]) {
    i64 m = spec_.moduli[0];
    for (i64 u = 0; u < m; ++u) ls.is_unit[u] = std::gcd(u, m) == 1;
  } else {
    // u is a unit iff some v has u*v = 1; early exit on hit.
    for (i64 u = 0; u < size_; ++u) {
      for (i64 v = 0; v < size_; ++v) {
        if (mul(u, v) == one_idx_) {
          ls.is_unit[u] = 1;
          break;
        }
      }
    }
  }
  for (i64 x = 0; x < size_; ++x)
    (ls.is_unit[x] ? ls.units : ls.non_units).push_back(x);

  // Locality: non-units closed under addition. (Absorption under
  // multiplication is automatic in a commutative ring.)
  ls.is_local = true;
  const i64 nn = static_cast<i64>(ls.non_units.size());
  if (nn * nn <= 10'000'000) {
    for (i64 i = 0; i < nn && ls.is_local; ++i)
      for (i64 j = i; j < nn; ++j)
        if (ls.is_unit[add(ls.non_units[i], ls.non_units[j])]) {
          ls.is_local = false;
          break;
        }
  } else {
    std::mt19937_64 rng(0x10ca1);
    std::uniform_int_distribution<i64> pick(0, nn - 1);
    for (int t = 0; t < 2'000'000 && ls.is_local; ++t)
      if (ls.is_unit[add(ls.non_units[pick(rng)], ls.non_units[pick(rng)])])
        ls.is_local = false;
  }
  return ls;
}

Ring Ring::zmod(i64 m, const RingOptions& opt) {
  if (m < 1) throw ValidationError("zmod modulus must be >= 1");
  FiniteRingSpec spec;
  spec.moduli = {m};
  spec.mult = {{{1 % m}}};
  spec.one = {1 % m};
  spec.label = "Z/" + std::to_string(m);
  return Ring(std::move(spec), opt);
}

namespace {

// Arithmetic in F_p[x] with vectors of coefficients, low degree first.
using Poly = std::vector<i64>;

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, i64 p) {
  const size_t j = f.size() - 1;  // f monic of degree j
  Poly prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < b.size(); ++k)
      prod[i + k] = (prod[i + k] + a[i] * b[k]) % p;
  for (size_t d = prod.size(); d-- > j;) {
    i64 c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (size_t i = 0; i < j; ++i)
      prod[d - j + i] = ((prod[d - j + i] - c * f[i]) % p + p) % p;
  }
  prod.resize(j);
  return prod;
}

Poly poly_powmod(Poly base, i64 e, const Poly& f, i64 p) {
  Poly result(f.size() - 1, 0);
  result[0] = 1;
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

Poly poly_mod(Poly a, const Poly& f, i64 p) {
  const size_t j = f.size() - 1;
  for (size_t d = a.size(); d-- > j;) {
    i64 c = a[d];
    if (c == 0) continue;
    a[d] = 0;
    for (size_t i = 0; i < j; ++i)
      a[d - j + i] = ((a[d - j + i] - c * f[i]) % p + p) % p;
  }
  a.resize(std::max(a.size(), j));
  a.resize(j);
  return a;
}

Poly poly_gcd(Poly a, Poly b, i64 p) {
  auto deg = [](const Poly& q) {
    for (size_t d = q.size(); d-- > 0;)
      if (q[d] != 0) return static_cast<int>(d);
    return -1;
  };
  while (deg(b) >= 0) {
    // a mod b with b made monic
    int db = deg(b);
    i64 lead = b[db];
    i64 inv = 1;
    for (i64 t = 1; t < p; ++t)
      if (lead * t % p == 1) {
        inv = t;
        break;
      }
    Poly bm(b.begin(), b.begin() + db + 1);
    for (auto& c : bm) c = c * inv % p;
    Poly r = a;
    for (int d = deg(r); d >= db; d = deg(r)) {
      i64 c = r[d];
      if (c == 0) break;
      for (int i = 0; i <= db; ++i)
        r[d - db + i] = ((r[d - db + i] - c * bm[i]) % p + p) % p;
    }
    a = b;
    b = r;
  }
  return a;
}

// Rabin irreducibility test for monic f of degree j over F_p.
bool poly_irreducible(const Poly& f, i64 p) {
  const i64 j = static_cast<i64>(f.size()) - 1;
  Poly x(j, 0);
  if (j == 1) return true;
  x[1 % j] = 1;
  // x^(p^j) == x mod f
  Poly t = x;
  for (i64 i = 0; i < j; ++i) t = poly_powmod(t, p, f, p);
  if (t != poly_mod(x, f, p)) return false;
  // for each prime divisor q of j: gcd(x^(p^(j/q)) - x, f) == const
  i64 rem = j;
  for (i64 q = 2; q * q <= rem; ++q) {
    if (rem % q != 0) continue;
    while (rem % q == 0) rem /= q;
    Poly u = x;
    for (i64 i = 0; i < j / q; ++i) u = poly_powmod(u, p, f, p);
    Poly diff = u;
    diff[1] = ((diff[1] - 1) % p + p) % p;
    Poly g = poly_gcd(f, diff, p);
    int dg = 0;
    for (size_t d = g.size(); d-- > 0;)
      if (g[d] != 0) {
        dg = static_cast<int>(d);
        break;
      }
    if (dg != 0) return false;
  }
  if (rem > 1) {
    i64 q = rem;
    Poly u = x;
    for (i64 i = 0; i < j / q; ++i) u = poly_powmod(u, p, f, p);
    Poly diff = u;
    diff[1] = ((diff[1] - 1) % p + p) % p;
    Poly g = poly_gcd(f, diff, p);
    int dg = 0;
    for (size_t d = g.size(); d-- > 0;)
      if (g[d] != 0) {
        dg = static_cast<int>(d);
        break;
      }
    if (dg != 0) return false;
  }
  return true;
}

// Smallest monic irreducible of degree j over F_p, low coefficients counted
// first: f = x^j + a_{j-1}x^{j-1} + ... + a_0 with (a_0,...,a_{j-1}) the
// digits of an increasing counter.
Poly smallest_irreducible(i64 p, i64 j) {
  Poly f(j + 1, 0);
  f[j] = 1;
  i64 total = 1;
  for (i64 i = 0; i < j; ++i) total *= p;
  for (i64 t = 0; t < total; ++t) {
    i64 v = t;
    for (i64 i = 0; i < j; ++i) {
      f[i] = v % p;
      v /= p;
    }
    if (poly_irreducible(f, p)) return f;
  }
  throw Error("no irreducible polynomial found");  // unreachable for p prime
}

}  // namespace

Ring Ring::gf(i64 p, i64 j, const RingOptions& opt) {
  if (!is_prime(p)) throw ValidationError("gf: p must be prime");
  if (j < 1) throw ValidationError("gf: extension degree must be >= 1");
  checked_pow(p, j, opt.size_cap);
  Poly f = smallest_irreducible(p, j);
  FiniteRingSpec spec;
  spec.moduli.assign(j, p);
  spec.one.assign(j, 0);
  spec.one[0] = 1 % p;
  spec.mult.assign(j, std::vector<std::vector<i64>>(j));
  for (i64 a = 0; a < j; ++a)
    for (i64 b = 0; b < j; ++b) {
      Poly prod(a + b + 1, 0);
      prod[a + b] = 1;
      spec.mult[a][b] = poly_mod(prod, f, p);
    }
  std::ostringstream lab;
  lab << "GF(" << p;
  if (j > 1) lab << "^" << j;
  lab << ")";
  spec.label = lab.str();
  return Ring(std::move(spec), opt);
}

Ring Ring::trunc_poly(i64 p, i64 k, const RingOptions& opt) {
  if (!is_prime(p)) throw ValidationError("trunc_poly: p must be prime");
  if (k < 1) throw ValidationError("trunc_poly: k must be >= 1");
  checked_pow(p, k, opt.size_cap);
  FiniteRingSpec spec;
  spec.moduli.assign(k, p);
  spec.one.assign(k, 0);
  spec.one[0] = 1 % p;
  spec.mult.assign(k, std::vector<std::vector<i64>>(k));
  for (i64 a = 0; a < k; ++a)
    for (i64 b = 0; b < k; ++b) {
      std::vector<i64> c(k, 0);
      if (a + b < k) c[a + b] = 1 % p;
      spec.mult[a][b] = std::move(c);
    }
  spec.label = "F_" + std::to_string(p) + "[x]/(x^" + std::to_string(k) + ")";
  return Ring(std::move(spec), opt);
}

Ring Ring::quadratic_quotient(i64 d, i64 e1, i64 e2, const RingOptions& opt) {
  if (d == 0) throw ValidationError("quadratic_quotient: d must be nonzero");
  if (e1 < 1 || e2 < 1)
    throw ValidationError("quadratic_quotient: moduli must be >= 1");
  if (e1 % e2 != 0)
    throw ValidationError("quadratic_quotient: ideal condition e2 | e1 fails");
  if (mod_reduce(d, e1) * e2 % e1 != 0)
    throw ValidationError(
        "quadratic_quotient: ideal condition e1 | d*e2 fails");
  FiniteRingSpec spec;
  spec.moduli = {e1, e2};
  spec.one = {1 % e1, 0};
  spec.mult.assign(2, std::vector<std::vector<i64>>(2));
  spec.mult[0][0] = {1 % e1, 0};
  spec.mult[0][1] = {0, 1 % e2};
  spec.mult[1][0] = {0, 1 % e2};
  spec.mult[1][1] = {mod_reduce(d, e1), 0};
  spec.label = "Z[sqrt(" + std::to_string(d) + ")]/(" + std::to_string(e1) +
               ", " + std::to_string(e2) + "*sqrt(" + std::to_string(d) + "))";
  return Ring(std::move(spec), opt);
}

FiniteRingSpec direct_product(const FiniteRingSpec& a,
                              const FiniteRingSpec& b) {
  const i64 ra = static_cast<i64>(a.moduli.size());
  const i64 rb = static_cast<i64>(b.moduli.size());
  FiniteRingSpec spec;
  spec.moduli = a.moduli;
  spec.moduli.insert(spec.moduli.end(), b.moduli.begin(), b.moduli.end());
  spec.one = a.one;
  spec.one.insert(spec.one.end(), b.one.begin(), b.one.end());
  spec.mult.assign(ra + rb, std::vector<std::vector<i64>>(
                                ra + rb, std::vector<i64>(ra + rb, 0)));
  for (i64 i = 0; i < ra; ++i)
    for (i64 j = 0; j < ra; ++j)
      for (i64 k = 0; k < ra; ++k) spec.mult[i][j][k] = a.mult[i][j][k];
  for (i64 i = 0; i < rb; ++i)
    for (i64 j = 0; j < rb; ++j)
      for (i64 k = 0; k < rb; ++k)
        spec.mult[ra + i][ra + j][ra + k] = b.mult[i][j][k];
  spec.label = a.label + " x " + b.label;
  return spec;
}

}  // namespace waring
