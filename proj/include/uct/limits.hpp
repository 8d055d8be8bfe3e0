#pragma once

#include <cstdint>

namespace uct {

inline constexpr std::uint64_t kDefaultFieldCap = 64;
inline constexpr std::uint64_t kDefaultVertexCap = std::uint64_t{1} << 16;
inline constexpr std::uint64_t kHardVertexCeiling = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kIsoOracleVertexCap = 512;

/// Size limits threaded through every constructor.
struct Limits {
  std::uint64_t field_cap = kDefaultFieldCap;
  std::uint64_t vertex_cap = kDefaultVertexCap;
};

/// Reads UCT_VERTEX_CAP if set; falls back to the default. Throws InvalidArgument on
/// malformed values or values above the hard ceiling.
std::uint64_t vertex_cap_from_env();

/// Computes base^exp, saturating at UINT64_MAX on overflow.
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) noexcept;

}  // namespace uct
