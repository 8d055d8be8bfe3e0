#include "uct/tri_ring.hpp"

#include <numeric>
#include <sstream>
#include <utility>

#include "uct/error.hpp"

namespace uct {

TriMatrix::TriMatrix(std::shared_ptr<const FieldTable> field, std::uint32_t n, std::vector<Element> entries)
    : field_(std::move(field)), n_(n), entries_(std::move(entries)) {
  if (!field_) throw Error(ErrorKind::InvalidArgument, "matrix requires a field");
  if (entries_.size() != triangle_size(n_)) {
    throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(triangle_size(n_)) + " entries, got " +
                                                  std::to_string(entries_.size()));
  }
  for (Element e : entries_) {
    if (e >= field_->order()) throw Error(ErrorKind::InvalidArgument, "entry outside the field");
  }
}

Element TriMatrix::at(std::uint32_t row, std::uint32_t col) const {
  if (row >= n_ || col >= n_) throw Error(ErrorKind::InvalidArgument, "matrix index out of range");
  if (row > col) return 0;
  return entries_[triangle_index(n_, row, col)];
}

TriMatrix mat_sub(const TriMatrix& a, const TriMatrix& b) {
  if (a.dimension() != b.dimension() || !(a.field() == b.field())) {
    throw Error(ErrorKind::DimensionMismatch, "operands differ in dimension or field");
  }
  const FieldTable& f = a.field();
  std::vector<Element> out(a.entries().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.sub(a.entries()[i], b.entries()[i]);
  return TriMatrix(a.field_ptr(), a.dimension(), std::move(out));
}

Element mat_det(const TriMatrix& a) {
  const FieldTable& f = a.field();
  Element det = 1;
  for (std::uint32_t i = 0; i < a.dimension(); ++i) det = f.mul(det, a.at(i, i));
  return det;
}

bool is_unit(const TriMatrix& a) {
  for (std::uint32_t i = 0; i < a.dimension(); ++i) {
    if (a.at(i, i) == 0) return false;
  }
  return true;
}

std::vector<Element> diagonal_of(const TriMatrix& a) {
  std::vector<Element> d(a.dimension());
  for (std::uint32_t i = 0; i < a.dimension(); ++i) d[i] = a.at(i, i);
  return d;
}

std::vector<Element> strict_upper_of(const TriMatrix& a) {
  std::vector<Element> s;
  const std::uint32_t n = a.dimension();
  s.reserve(n * (n - 1) / 2);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) s.push_back(a.at(i, j));
  }
  return s;
}

TriangularRing::TriangularRing(std::shared_ptr<const FieldTable> field, std::uint32_t n)
    : field_(std::move(field)), n_(n) {
  if (!field_) throw Error(ErrorKind::InvalidArgument, "ring requires a field");
  if (n_ < 2) throw Error(ErrorKind::InvalidArgument, "matrix dimension must be at least 2");
  for (std::uint32_t i = 0; i < n_; ++i) {
    for (std::uint32_t j = i; j < n_; ++j) {
      (i == j ? diag_pos_ : strict_pos_).push_back(triangle_index(n_, i, j));
    }
  }
}

std::uint64_t TriangularRing::order() const noexcept { return saturating_pow(field_->order(), entry_count()); }

std::uint64_t TriangularRing::unit_count() const noexcept {
  const std::uint64_t q = field_->order();
  const std::uint64_t a = saturating_pow(q - 1, n_);
  const std::uint64_t b = saturating_pow(q, std::uint64_t{n_} * (n_ - 1) / 2);
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

std::uint64_t TriangularRing::encode(const TriMatrix& a) const {
  if (a.dimension() != n_ || !(a.field() == *field_)) {
    throw Error(ErrorKind::DimensionMismatch, "matrix does not belong to this ring");
  }
  return encode(a.entries());
}

std::uint64_t TriangularRing::encode(std::span<const Element> entries) const noexcept {
  std::uint64_t code = 0;
  for (Element e : entries) code = code * field_->order() + e;
  return code;
}

void TriangularRing::decode_into(std::uint64_t code, std::span<Element> entries) const noexcept {
  const std::uint64_t q = field_->order();
  for (std::size_t i = entries.size(); i-- > 0;) {
    entries[i] = static_cast<Element>(code % q);
    code /= q;
  }
}

TriMatrix TriangularRing::decode(std::uint64_t code) const {
  if (code >= order()) throw Error(ErrorKind::InvalidArgument, "encoding outside the ring");
  std::vector<Element> entries(entry_count());
  decode_into(code, entries);
  return TriMatrix(field_, n_, std::move(entries));
}

TriMatrix TriangularRing::zero() const { return TriMatrix(field_, n_, std::vector<Element>(entry_count(), 0)); }

TriMatrix TriangularRing::identity() const {
  std::vector<Element> entries(entry_count(), 0);
  for (auto pos : diag_pos_) entries[pos] = 1;
  return TriMatrix(field_, n_, std::move(entries));
}

TriMatrix TriangularRing::compose(std::span<const Element> strict_upper, std::span<const Element> diagonal) const {
  if (strict_upper.size() != strict_pos_.size() || diagonal.size() != diag_pos_.size()) {
    throw Error(ErrorKind::DimensionMismatch, "part sizes do not match the ring dimension");
  }
  std::vector<Element> entries(entry_count());
  for (std::size_t i = 0; i < diag_pos_.size(); ++i) entries[diag_pos_[i]] = diagonal[i];
  for (std::size_t i = 0; i < strict_pos_.size(); ++i) entries[strict_pos_[i]] = strict_upper[i];
  return TriMatrix(field_, n_, std::move(entries));
}

IntegersMod::IntegersMod(std::uint64_t modulus) : m_(modulus) {
  if (m_ < 2) throw Error(ErrorKind::InvalidArgument, "modulus must be at least 2");
}

bool IntegersMod::is_unit(std::uint64_t a) const noexcept { return std::gcd(a % m_, m_) == 1; }

std::uint64_t IntegersMod::unit_count() const noexcept {
  std::uint64_t result = m_;
  std::uint64_t n = m_;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    while (n % d == 0) n /= d;
    result -= result / d;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::uint64_t RingSpec::field_order() const noexcept {
  return is_triangular() ? saturating_pow(p, k) : 0;
}

std::uint64_t RingSpec::order() const noexcept {
  if (!is_triangular()) return modulus;
  return saturating_pow(field_order(), triangle_size(n));
}

std::string RingSpec::to_string() const {
  if (is_triangular()) {
    return "tri:" + std::to_string(n) + "," + std::to_string(p) + "," + std::to_string(k);
  }
  return "zn:" + std::to_string(modulus);
}

namespace {

std::uint64_t parse_number(const std::string& text, const std::string& whole) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos || text.size() > 9) {
    throw Error(ErrorKind::ParseError, "bad number '" + text + "' in ring spec '" + whole + "'");
  }
  return std::stoull(text);
}

}  // namespace

RingSpec RingSpec::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw Error(ErrorKind::ParseError, "ring spec '" + text + "' must look like tri:N,P,K or zn:M");
  }
  const std::string kind = text.substr(0, colon);
  const std::string body = text.substr(colon + 1);
  if (kind == "zn") return integers_mod(parse_number(body, text));
  if (kind != "tri") throw Error(ErrorKind::ParseError, "unknown ring kind '" + kind + "'");

  std::vector<std::uint64_t> parts;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(parse_number(item, text));
  if (parts.size() != 3 || body.back() == ',') {
    throw Error(ErrorKind::ParseError, "triangular spec '" + text + "' needs exactly N,P,K");
  }
  return triangular(static_cast<std::uint32_t>(parts[0]), static_cast<std::uint32_t>(parts[1]),
                    static_cast<std::uint32_t>(parts[2]));
}

void validate(const RingSpec& spec, const Limits& limits) {
  if (spec.is_triangular()) {
    if (spec.n < 2) throw Error(ErrorKind::InvalidArgument, "matrix dimension must be at least 2");
    if (spec.k < 1) throw Error(ErrorKind::InvalidArgument, "extension degree must be at least 1");
    if (!is_prime(spec.p)) throw Error(ErrorKind::NotPrime, std::to_string(spec.p) + " is not prime");
    if (spec.field_order() > limits.field_cap) {
      throw Error(ErrorKind::FieldTooLarge, "field order exceeds cap " + std::to_string(limits.field_cap));
    }
  } else if (spec.modulus < 2) {
    throw Error(ErrorKind::InvalidArgument, "modulus must be at least 2");
  }
  if (spec.order() > limits.vertex_cap) {
    throw Error(ErrorKind::RingTooLarge,
                spec.to_string() + " has more elements than the vertex cap " + std::to_string(limits.vertex_cap));
  }
}

TriangularRing make_triangular_ring(const RingSpec& spec, const Limits& limits) {
  if (!spec.is_triangular()) throw Error(ErrorKind::InvalidArgument, "spec is not a triangular matrix ring");
  validate(spec, limits);
  auto field = std::make_shared<const FieldTable>(FieldTable::make(spec.p, spec.k, limits.field_cap));
  return TriangularRing(std::move(field), spec.n);
}

std::vector<RingElement> enumerate_ring(const RingSpec& spec, const Limits& limits) {
  validate(spec, limits);
  std::vector<RingElement> out;
  out.reserve(spec.order());
  if (spec.is_triangular()) {
    const TriangularRing ring = make_triangular_ring(spec, limits);
    for (std::uint64_t code = 0; code < ring.order(); ++code) out.emplace_back(ring.decode(code));
  } else {
    for (std::uint64_t x = 0; x < spec.modulus; ++x) out.emplace_back(x);
  }
  return out;
}

}  // namespace uct
