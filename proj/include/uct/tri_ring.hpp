#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "uct/finite_field.hpp"
#include "uct/limits.hpp"

namespace uct {

/// Upper-triangular n x n matrix over a finite field. Entries (i, j) with i <= j are stored
/// in row-major order of the upper triangle, diagonal included:
///   (0,0) (0,1) ... (0,n-1) (1,1) ... (n-1,n-1)
/// Entries below the diagonal are implicitly zero.
class TriMatrix {
 public:
  TriMatrix(std::shared_ptr<const FieldTable> field, std::uint32_t n, std::vector<Element> entries);

  std::uint32_t dimension() const noexcept { return n_; }
  const FieldTable& field() const noexcept { return *field_; }
  const std::shared_ptr<const FieldTable>& field_ptr() const noexcept { return field_; }
  std::span<const Element> entries() const noexcept { return entries_; }

  /// Entry at (row, col), zero-based; zero below the diagonal.
  Element at(std::uint32_t row, std::uint32_t col) const;

  friend bool operator==(const TriMatrix& a, const TriMatrix& b) {
    return a.n_ == b.n_ && *a.field_ == *b.field_ && a.entries_ == b.entries_;
  }

 private:
  std::shared_ptr<const FieldTable> field_;
  std::uint32_t n_;
  std::vector<Element> entries_;
};

/// Number of stored entries n(n+1)/2.
constexpr std::uint32_t triangle_size(std::uint32_t n) noexcept { return n * (n + 1) / 2; }
/// Position of (row, col), row <= col, in the stored entry sequence.
constexpr std::uint32_t triangle_index(std::uint32_t n, std::uint32_t row, std::uint32_t col) noexcept {
  return row * n - row * (row - 1) / 2 + (col - row);
}

/// Throws DimensionMismatch if the operands differ in dimension or field.
TriMatrix mat_sub(const TriMatrix& a, const TriMatrix& b);
/// Product of the diagonal entries.
Element mat_det(const TriMatrix& a);
bool is_unit(const TriMatrix& a);
std::vector<Element> diagonal_of(const TriMatrix& a);
/// Strictly-upper entries (i < j) in row-major order, length n(n-1)/2.
std::vector<Element> strict_upper_of(const TriMatrix& a);

/// The ring T_n(GF(q)) with its canonical enumeration. The encoding reads the stored
/// entry sequence as base-q digits, first entry most significant, so enumeration order
/// is lexicographic in the entry sequence.
class TriangularRing {
 public:
  TriangularRing(std::shared_ptr<const FieldTable> field, std::uint32_t n);

  std::uint32_t dimension() const noexcept { return n_; }
  const FieldTable& field() const noexcept { return *field_; }
  const std::shared_ptr<const FieldTable>& field_ptr() const noexcept { return field_; }
  std::uint32_t entry_count() const noexcept { return triangle_size(n_); }
  /// q^{n(n+1)/2}, saturating.
  std::uint64_t order() const noexcept;
  /// (q-1)^n * q^{n(n-1)/2}, saturating.
  std::uint64_t unit_count() const noexcept;

  std::uint64_t encode(const TriMatrix& a) const;
  std::uint64_t encode(std::span<const Element> entries) const noexcept;
  TriMatrix decode(std::uint64_t code) const;
  void decode_into(std::uint64_t code, std::span<Element> entries) const noexcept;

  TriMatrix zero() const;
  TriMatrix identity() const;
  /// Reassembles a matrix from its strictly-upper part and its diagonal.
  TriMatrix compose(std::span<const Element> strict_upper, std::span<const Element> diagonal) const;

  /// Positions of diagonal and strictly-upper entries inside the stored sequence.
  const std::vector<std::uint32_t>& diagonal_positions() const noexcept { return diag_pos_; }
  const std::vector<std::uint32_t>& strict_positions() const noexcept { return strict_pos_; }

 private:
  std::shared_ptr<const FieldTable> field_;
  std::uint32_t n_;
  std::vector<std::uint32_t> diag_pos_;
  std::vector<std::uint32_t> strict_pos_;
};

/// Z_m, used as an independent family for the Cayley builder.
class IntegersMod {
 public:
  explicit IntegersMod(std::uint64_t modulus);

  std::uint64_t modulus() const noexcept { return m_; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept { return (a + m_ - b) % m_; }
  bool is_unit(std::uint64_t a) const noexcept;
  /// Euler's totient of the modulus.
  std::uint64_t unit_count() const noexcept;

 private:
  std::uint64_t m_;
};

enum class RingKind { TriangularMatrix, IntegersMod };

/// Everything needed to rebuild a ring (and hence its Cayley graph) deterministically.
struct RingSpec {
  RingKind kind = RingKind::TriangularMatrix;
  std::uint32_t n = 2;  // matrix dimension
  std::uint32_t p = 2;
  std::uint32_t k = 1;
  std::uint64_t modulus = 2;  // Z_m only

  static RingSpec triangular(std::uint32_t n, std::uint32_t p, std::uint32_t k) {
    return {RingKind::TriangularMatrix, n, p, k, 0};
  }
  static RingSpec integers_mod(std::uint64_t m) { return {RingKind::IntegersMod, 0, 0, 0, m}; }

  bool is_triangular() const noexcept { return kind == RingKind::TriangularMatrix; }
  /// p^k for triangular specs (saturating), 0 otherwise.
  std::uint64_t field_order() const noexcept;
  /// Number of ring elements, saturating.
  std::uint64_t order() const noexcept;

  /// "tri:N,P,K" or "zn:M".
  std::string to_string() const;
  /// Parses the grammar produced by to_string. Throws ParseError.
  static RingSpec parse(const std::string& text);

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

/// Validates shape and size: dimension >= 2, modulus >= 2, field and ring within limits.
/// Throws NotPrime, FieldTooLarge, RingTooLarge or InvalidArgument.
void validate(const RingSpec& spec, const Limits& limits);

/// Builds the triangular ring for a validated spec.
TriangularRing make_triangular_ring(const RingSpec& spec, const Limits& limits);

using RingElement = std::variant<TriMatrix, std::uint64_t>;

/// Every ring element once, in canonical-encoding order. Throws RingTooLarge past the cap.
std::vector<RingElement> enumerate_ring(const RingSpec& spec, const Limits& limits = {});

}  // namespace uct
