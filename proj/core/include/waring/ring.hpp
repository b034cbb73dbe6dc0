#ifndef WARING_RING_HPP
#define WARING_RING_HPP

#include <span>
#include <string>
#include <vector>

#include "waring/common.hpp"

namespace waring {

// A finite commutative ring presented as a Z-module Z/m_1 x ... x Z/m_r with
// multiplication given by structure constants: mult[i][j] is the coordinate
// vector of e_i * e_j, each entry reduced modulo the matching modulus.
struct FiniteRingSpec {
  std::vector<i64> moduli;
  std::vector<std::vector<std::vector<i64>>> mult;
  std::vector<i64> one;
  std::string label;
};

// A ring element is a reduced coordinate vector; inside the engine elements
// travel as mixed-radix indices into [0, cardinality).
struct RingElement {
  std::vector<i64> coords;

  friend bool operator==(const RingElement&, const RingElement&) = default;
};

class Ring {
 public:
  // Validates the spec (commutativity, well-definedness, associativity,
  // identity, size cap) and freezes it. Throws ValidationError/SizeCapError.
  explicit Ring(FiniteRingSpec spec, const RingOptions& opt = {});

  // Z/m with ordinary multiplication.
  static Ring zmod(i64 m, const RingOptions& opt = {});
  // F_{p^j} built as F_p[x]/(f) for the smallest monic irreducible f of
  // degree j, coefficient tuples scanned in increasing counting order.
  static Ring gf(i64 p, i64 j, const RingOptions& opt = {});
  // F_p[x]/(x^k).
  static Ring trunc_poly(i64 p, i64 k, const RingOptions& opt = {});
  // Z[sqrt(d)]/(e1, e2*sqrt(d)); requires e2 | e1 and e1 | d*e2.
  static Ring quadratic_quotient(i64 d, i64 e1, i64 e2,
                                 const RingOptions& opt = {});

  const FiniteRingSpec& spec() const { return spec_; }
  const std::string& label() const { return spec_.label; }
  i64 rank() const { return static_cast<i64>(spec_.moduli.size()); }
  i64 size() const { return size_; }
  const std::vector<i64>& moduli() const { return spec_.moduli; }

  i64 zero() const { return 0; }
  i64 one() const { return one_idx_; }
  i64 minus_one() const { return minus_one_idx_; }

  std::vector<i64> coords_of(i64 idx) const;
  RingElement element(i64 idx) const { return RingElement{coords_of(idx)}; }
  // Accepts unreduced (including negative) coordinates.
  i64 index_of(std::span<const i64> coords) const;

  i64 add(i64 a, i64 b) const;
  i64 neg(i64 a) const;
  i64 mul(i64 a, i64 b) const;
  // Repeated squaring; e >= 0.
  i64 pow(i64 a, i64 e) const;

  // Additive order of the identity.
  i64 characteristic() const;

  struct LocalStructure {
    std::vector<char> is_unit;   // by element index
    std::vector<i64> units;
    std::vector<i64> non_units;
    bool is_local = false;       // non-units form an ideal
  };
  // Unit test via bijectivity of the multiplication map (gcd fast path for
  // rank 1). Locality checks that non-units are closed under addition,
  // exhaustively up to ~10^7 pairs and by dense sampling beyond that.
  LocalStructure local_structure() const;

 private:
  Ring() = default;
  void finalize(const RingOptions& opt);
  void validate(const RingOptions& opt) const;
  std::vector<i64> mul_coords(std::span<const i64> a,
                              std::span<const i64> b) const;

  FiniteRingSpec spec_;
  i64 size_ = 1;
  std::vector<i64> stride_;
  i64 one_idx_ = 0;
  i64 minus_one_idx_ = 0;
};

// Blockwise direct product; handy for building non-local test rings.
FiniteRingSpec direct_product(const FiniteRingSpec& a, const FiniteRingSpec& b);

}  // namespace waring

#endif
