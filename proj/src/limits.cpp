#include "uct/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <limits>
#include <string>
#include <string_view>

#include "uct/error.hpp"

namespace uct {

std::uint64_t vertex_cap_from_env() {
  const char* raw = std::getenv("UCT_VERTEX_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultVertexCap;
  std::string_view text(raw);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
    throw Error(ErrorKind::InvalidArgument, "UCT_VERTEX_CAP is not a positive integer: " + std::string(text));
  }
  if (value > kHardVertexCeiling) {
    throw Error(ErrorKind::InvalidArgument,
                "UCT_VERTEX_CAP exceeds hard ceiling " + std::to_string(kHardVertexCeiling));
  }
  return value;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) noexcept {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && result > kMax / base) return kMax;
    result *= base;
  }
  return result;
}

}  // namespace uct
