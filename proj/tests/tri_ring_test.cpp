#include "doctest.h"

#include <optional>

#include <memory>
#include <numeric>

#include "uct/error.hpp"
#include "uct/tri_ring.hpp"

using uct::Element;
using uct::RingSpec;
using uct::TriangularRing;
using uct::TriMatrix;

namespace {

TriangularRing ring_of(std::uint32_t n, std::uint32_t p, std::uint32_t k = 1) {
  return uct::make_triangular_ring(RingSpec::triangular(n, p, k), {});
}

TriMatrix diag(const TriangularRing& r, std::vector<Element> d) {
  return r.compose(std::vector<Element>(r.strict_positions().size(), 0), d);
}

// Rings with at most 4096 elements.
const std::vector<RingSpec> kSmallRings = {
    RingSpec::triangular(2, 2, 1), RingSpec::triangular(3, 2, 1), RingSpec::triangular(4, 2, 1),
    RingSpec::triangular(2, 3, 1), RingSpec::triangular(3, 3, 1), RingSpec::triangular(2, 2, 2),
    RingSpec::triangular(3, 2, 2), RingSpec::triangular(2, 5, 1), RingSpec::triangular(2, 7, 1),
    RingSpec::triangular(2, 2, 3), RingSpec::triangular(2, 3, 2), RingSpec::triangular(2, 2, 4),
};

}  // namespace

TEST_CASE("storage layout is row-major upper triangle") {
  CHECK(uct::triangle_size(3) == 6);
  CHECK(uct::triangle_index(3, 0, 0) == 0);
  CHECK(uct::triangle_index(3, 0, 2) == 2);
  CHECK(uct::triangle_index(3, 1, 1) == 3);
  CHECK(uct::triangle_index(3, 1, 2) == 4);
  CHECK(uct::triangle_index(3, 2, 2) == 5);
  const auto r = ring_of(3, 2);
  CHECK(r.diagonal_positions() == std::vector<std::uint32_t>{0, 3, 5});
  CHECK(r.strict_positions() == std::vector<std::uint32_t>{1, 2, 4});
}

TEST_CASE("mat_sub") {
  const auto r3 = ring_of(2, 3);
  CHECK(uct::mat_sub(diag(r3, {1, 2}), diag(r3, {2, 2})) == diag(r3, {2, 0}));

  const auto a = r3.decode(500 % r3.order());
  CHECK(uct::mat_sub(a, a) == r3.zero());

  const auto r2 = ring_of(3, 2);
  for (std::uint64_t x = 0; x < r2.order(); x += 7) {
    for (std::uint64_t y = 0; y < r2.order(); y += 5) {
      const auto a2 = r2.decode(x);
      const auto b2 = r2.decode(y);
      const auto diff = uct::mat_sub(a2, b2);
      for (std::size_t i = 0; i < diff.entries().size(); ++i) {
        CHECK(diff.entries()[i] == (a2.entries()[i] ^ b2.entries()[i]));
      }
    }
  }

  CHECK_THROWS_AS(uct::mat_sub(r3.zero(), ring_of(3, 3).zero()), uct::Error);
  CHECK_THROWS_AS(uct::mat_sub(r3.zero(), ring_of(2, 5).zero()), uct::Error);
}

TEST_CASE("mat_det is the product of the diagonal") {
  const auto r = ring_of(2, 3);
  CHECK(uct::mat_det(r.identity()) == 1);
  CHECK(uct::mat_det(diag(r, {2, 0})) == 0);
  for (Element upper = 0; upper < 3; ++upper) {
    CHECK(uct::mat_det(r.compose(std::vector<Element>{upper}, std::vector<Element>{2, 2})) == 1);
  }
}

TEST_CASE("is_unit") {
  const auto r = ring_of(3, 3);
  CHECK(uct::is_unit(r.identity()));
  CHECK_FALSE(uct::is_unit(r.zero()));
}

TEST_CASE("is_unit agrees with det != 0 and unit counts match the formula") {
  for (const auto& spec : kSmallRings) {
    CAPTURE(spec.to_string());
    const auto r = uct::make_triangular_ring(spec, {});
    REQUIRE(r.order() <= 4096);
    std::uint64_t units = 0;
    for (std::uint64_t code = 0; code < r.order(); ++code) {
      const auto a = r.decode(code);
      REQUIRE(uct::is_unit(a) == (uct::mat_det(a) != 0));
      units += uct::is_unit(a) ? 1 : 0;
    }
    const std::uint64_t q = r.field().order();
    const std::uint32_t n = spec.n;
    CHECK(units == uct::saturating_pow(q - 1, n) * uct::saturating_pow(q, n * (n - 1) / 2));
    CHECK(units == r.unit_count());
  }
}

TEST_CASE("encode and decode are inverse bijections") {
  for (const auto& spec : kSmallRings) {
    const auto r = uct::make_triangular_ring(spec, {});
    for (std::uint64_t code = 0; code < r.order(); ++code) REQUIRE(r.encode(r.decode(code)) == code);
  }
  const auto r = ring_of(2, 3);
  CHECK(r.encode(r.zero()) == 0);
  CHECK(r.encode(diag(r, {1, 2})) == 1 * 9 + 2);  // digits (1, 0, 2), first most significant
}

TEST_CASE("enumerate_ring") {
  CHECK(uct::enumerate_ring(RingSpec::triangular(2, 2, 1)).size() == 8);
  const auto t33 = uct::enumerate_ring(RingSpec::triangular(3, 3, 1));
  CHECK(t33.size() == 729);
  const auto r = ring_of(3, 3);
  for (std::uint64_t i = 0; i < t33.size(); ++i) REQUIRE(r.encode(std::get<TriMatrix>(t33[i])) == i);

  const auto z8 = uct::enumerate_ring(RingSpec::integers_mod(8));
  REQUIRE(z8.size() == 8);
  for (std::uint64_t i = 0; i < 8; ++i) CHECK(std::get<std::uint64_t>(z8[i]) == i);

  CHECK_THROWS_AS(uct::enumerate_ring(RingSpec::triangular(9, 2, 1)), uct::Error);
}

TEST_CASE("diagonal_of and strict_upper_of") {
  const auto r = ring_of(3, 3);
  CHECK(uct::diagonal_of(r.identity()) == std::vector<Element>{1, 1, 1});
  CHECK(uct::diagonal_of(r.zero()) == std::vector<Element>{0, 0, 0});
  CHECK(uct::strict_upper_of(diag(r, {2, 1, 2})) == std::vector<Element>{0, 0, 0});

  const auto r2 = ring_of(2, 3);
  const auto a = r2.compose(std::vector<Element>{2}, std::vector<Element>{1, 0});
  CHECK(uct::strict_upper_of(a) == std::vector<Element>{2});
  CHECK(a.at(0, 1) == 2);
  CHECK(a.at(1, 0) == 0);
  for (Element x = 0; x < 3; ++x) {
    for (Element y = 0; y < 3; ++y) {
      const auto d = diag(r2, {x, y});
      CHECK(r2.decode(r2.encode(d)) == d);
    }
  }

  for (std::uint64_t code = 0; code < r.order(); ++code) {
    const auto m = r.decode(code);
    REQUIRE(r.compose(uct::strict_upper_of(m), uct::diagonal_of(m)) == m);
  }
}

TEST_CASE("integers mod m") {
  for (std::uint64_t m = 2; m <= 40; ++m) {
    const uct::IntegersMod z(m);
    std::uint64_t units = 0;
    for (std::uint64_t x = 0; x < m; ++x) {
      CHECK(z.is_unit(x) == (std::gcd(x, m) == 1));
      units += z.is_unit(x) ? 1 : 0;
      CHECK(z.sub(x, x) == 0);
    }
    CHECK(z.unit_count() == units);
  }
  CHECK_THROWS_AS(uct::IntegersMod(1), uct::Error);
}

TEST_CASE("ring spec grammar") {
  CHECK(RingSpec::parse("tri:2,3,1") == RingSpec::triangular(2, 3, 1));
  CHECK(RingSpec::parse("zn:12") == RingSpec::integers_mod(12));
  CHECK(RingSpec::triangular(3, 2, 2).to_string() == "tri:3,2,2");
  CHECK(RingSpec::parse(RingSpec::integers_mod(5).to_string()) == RingSpec::integers_mod(5));
  for (const char* bad : {"tri:2,3", "tri:2,3,1,", "tri:a,3,1", "mat:2,2,1", "zn:", "tri2,3,1", "zn:-3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(RingSpec::parse(bad), uct::Error);
  }
  CHECK(RingSpec::triangular(3, 2, 2).order() == 4096);
  CHECK(RingSpec::triangular(9, 2, 1).order() == (std::uint64_t{1} << 45));
}

TEST_CASE("spec validation") {
  auto kind_of = [](const RingSpec& spec, uct::Limits limits = {}) {
    try {
      uct::validate(spec, limits);
    } catch (const uct::Error& e) {
      return std::optional<uct::ErrorKind>(e.kind());
    }
    return std::optional<uct::ErrorKind>();
  };
  CHECK_FALSE(kind_of(RingSpec::triangular(3, 2, 2)).has_value());
  CHECK(kind_of(RingSpec::triangular(9, 2, 1)) == uct::ErrorKind::RingTooLarge);
  CHECK(kind_of(RingSpec::triangular(2, 4, 1)) == uct::ErrorKind::NotPrime);
  CHECK(kind_of(RingSpec::triangular(1, 2, 1)) == uct::ErrorKind::InvalidArgument);
  CHECK(kind_of(RingSpec::triangular(2, 2, 7)) == uct::ErrorKind::FieldTooLarge);
  CHECK(kind_of(RingSpec::integers_mod(1)) == uct::ErrorKind::InvalidArgument);
  CHECK(kind_of(RingSpec::triangular(3, 3, 1), {64, 100}) == uct::ErrorKind::RingTooLarge);
  CHECK(kind_of(RingSpec::integers_mod(70000)) == uct::ErrorKind::RingTooLarge);
}
