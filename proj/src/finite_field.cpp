#include "uct/finite_field.hpp"

#include <string>

#include "uct/error.hpp"

namespace uct {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace poly {

void trim(Coefficients& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Coefficients& a) noexcept {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    if (a[i] != 0) return i;
  }
  return -1;
}

Coefficients remainder(Coefficients a, const Coefficients& monic_divisor, std::uint32_t p) {
  const int dd = degree(monic_divisor);
  trim(a);
  for (int da = degree(a); da >= dd; da = degree(a)) {
    const std::uint32_t factor = a[da];
    const int shift = da - dd;
    for (int i = 0; i <= dd; ++i) {
      std::uint32_t t = (factor * monic_divisor[i]) % p;
      a[i + shift] = (a[i + shift] + p - t) % p;
    }
    trim(a);
  }
  return a;
}

std::uint64_t encode(const Coefficients& a, std::uint32_t p) noexcept {
  std::uint64_t value = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) value = value * p + *it;
  return value;
}

Coefficients monic_from_code(std::uint64_t low, int degree, std::uint32_t p) {
  Coefficients c(static_cast<std::size_t>(degree) + 1, 0);
  for (int i = 0; i < degree; ++i) {
    c[i] = static_cast<std::uint32_t>(low % p);
    low /= p;
  }
  c[degree] = 1;
  return c;
}

bool is_irreducible(const Coefficients& monic, std::uint32_t p) {
  const int n = degree(monic);
  if (n <= 0) return false;
  for (int d = 1; d <= n / 2; ++d) {
    std::uint64_t lows = 1;
    for (int i = 0; i < d; ++i) lows *= p;
    for (std::uint64_t low = 0; low < lows; ++low) {
      if (remainder(monic, monic_from_code(low, d, p), p).empty()) return false;
    }
  }
  return true;
}

}  // namespace poly

namespace {

// Product of two residues modulo the field modulus, as coefficient vectors of length k.
poly::Coefficients multiply_mod(const poly::Coefficients& a, const poly::Coefficients& b,
                                const poly::Coefficients& modulus, std::uint32_t p) {
  poly::Coefficients prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
  }
  return poly::remainder(std::move(prod), modulus, p);
}

}  // namespace

FieldTable FieldTable::make(std::uint32_t p, std::uint32_t k, std::uint64_t field_cap) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "extension degree must be at least 1");
  const std::uint64_t q = saturating_pow(p, k);
  if (q > field_cap) {
    throw Error(ErrorKind::FieldTooLarge,
                std::to_string(p) + "^" + std::to_string(k) + " exceeds field cap " + std::to_string(field_cap));
  }

  FieldTable f;
  f.p_ = p;
  f.k_ = k;
  f.q_ = static_cast<std::uint32_t>(q);

  if (k == 1) {
    f.modulus_ = {0, 1};  // x, so residues are the constants of Z_p
  } else {
    for (std::uint64_t low = 0;; ++low) {  // an irreducible polynomial of every degree exists
      auto candidate = poly::monic_from_code(low, static_cast<int>(k), p);
      if (poly::is_irreducible(candidate, p)) {
        f.modulus_ = std::move(candidate);
        break;
      }
    }
  }

  std::vector<poly::Coefficients> coeffs(q);
  for (Element e = 0; e < q; ++e) coeffs[e] = f.coefficients(e);

  f.add_.resize(q * q);
  f.mul_.resize(q * q);
  f.neg_.resize(q);
  f.inv_.assign(q, 0);
  for (Element a = 0; a < q; ++a) {
    poly::Coefficients neg(k);
    for (std::uint32_t i = 0; i < k; ++i) neg[i] = (p - coeffs[a][i]) % p;
    f.neg_[a] = static_cast<Element>(poly::encode(neg, p));
    for (Element b = 0; b < q; ++b) {
      poly::Coefficients sum(k);
      for (std::uint32_t i = 0; i < k; ++i) sum[i] = (coeffs[a][i] + coeffs[b][i]) % p;
      f.add_[a * q + b] = static_cast<Element>(poly::encode(sum, p));
      f.mul_[a * q + b] = static_cast<Element>(poly::encode(multiply_mod(coeffs[a], coeffs[b], f.modulus_, p), p));
    }
  }
  for (Element a = 1; a < q; ++a) {
    for (Element b = 1; b < q; ++b) {
      if (f.mul_[a * q + b] == 1) {
        f.inv_[a] = b;
        break;
      }
    }
  }
  return f;
}

Element FieldTable::inv(Element a) const {
  if (a == 0) throw Error(ErrorKind::ZeroInverse, "zero has no multiplicative inverse");
  return inv_[a];
}

Element FieldTable::pow(Element a, std::uint64_t e) const noexcept {
  Element result = 1;
  Element base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

poly::Coefficients FieldTable::coefficients(Element a) const {
  poly::Coefficients c(k_);
  for (std::uint32_t i = 0; i < k_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

}  // namespace uct
