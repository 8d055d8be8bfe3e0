#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "uct/limits.hpp"

namespace uct {

/// Index of a field element. Index e corresponds to the polynomial whose coefficient
/// vector (constant term first) is the base-p expansion of e, so 0 and 1 are the
/// additive and multiplicative identities.
using Element = std::uint32_t;

bool is_prime(std::uint64_t n) noexcept;

/// Polynomials over Z_p as coefficient vectors, constant term first.
namespace poly {

using Coefficients = std::vector<std::uint32_t>;

/// Drops trailing zero coefficients. The zero polynomial becomes the empty vector.
void trim(Coefficients& a);
int degree(const Coefficients& a) noexcept;
/// Remainder of a modulo a monic divisor over Z_p.
Coefficients remainder(Coefficients a, const Coefficients& monic_divisor, std::uint32_t p);
/// Base-p integer value of the coefficient vector.
std::uint64_t encode(const Coefficients& a, std::uint32_t p) noexcept;
/// Monic polynomial of the given degree whose lower coefficients are the base-p digits of low.
Coefficients monic_from_code(std::uint64_t low, int degree, std::uint32_t p);
/// Trial division by every monic polynomial of degree 1..floor(deg/2).
bool is_irreducible(const Coefficients& monic, std::uint32_t p);

}  // namespace poly

/// GF(p^k) with fully materialized addition, multiplication and inverse tables.
/// Immutable after construction.
class FieldTable {
 public:
  /// Builds GF(p^k). The modulus is the irreducible monic polynomial of degree k with the
  /// smallest base-p encoding. Throws NotPrime or FieldTooLarge.
  static FieldTable make(std::uint32_t p, std::uint32_t k, std::uint64_t field_cap = kDefaultFieldCap);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return k_; }
  std::uint32_t order() const noexcept { return q_; }
  /// Monic modulus, constant term first, length k+1.
  const poly::Coefficients& modulus() const noexcept { return modulus_; }

  Element add(Element a, Element b) const noexcept { return add_[a * q_ + b]; }
  Element sub(Element a, Element b) const noexcept { return add_[a * q_ + neg_[b]]; }
  Element neg(Element a) const noexcept { return neg_[a]; }
  Element mul(Element a, Element b) const noexcept { return mul_[a * q_ + b]; }
  /// Throws ZeroInverse for a == 0.
  Element inv(Element a) const;
  Element pow(Element a, std::uint64_t e) const noexcept;

  /// Base-p digits of the element, constant term first, length k.
  poly::Coefficients coefficients(Element a) const;

  std::span<const Element> mul_table() const noexcept { return mul_; }

  friend bool operator==(const FieldTable&, const FieldTable&) = default;

 private:
  FieldTable() = default;

  std::uint32_t p_ = 0;
  std::uint32_t k_ = 0;
  std::uint32_t q_ = 0;
  poly::Coefficients modulus_;
  std::vector<Element> add_;
  std::vector<Element> mul_;
  std::vector<Element> neg_;
  std::vector<Element> inv_;
};

inline FieldTable make_field(std::uint32_t p, std::uint32_t k, std::uint64_t field_cap = kDefaultFieldCap) {
  return FieldTable::make(p, k, field_cap);
}

}  // namespace uct
