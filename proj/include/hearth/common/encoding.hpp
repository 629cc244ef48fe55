#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hearth {

using Bytes = std::vector<std::uint8_t>;

/// Lowercase hex.
std::string to_hex(std::span<const std::uint8_t> bytes);
/// Accepts upper or lower case; throws MalformedInput on odd length or bad digits.
Bytes from_hex(std::string_view hex);

std::string to_base64(std::span<const std::uint8_t> bytes);
/// Standard alphabet with padding; throws MalformedInput on invalid input.
Bytes from_base64(std::string_view text);

/// Cryptographically secure random bytes.
Bytes random_bytes(std::size_t n);

inline Bytes to_bytes(std::string_view s) { return Bytes(s.begin(), s.end()); }

}  // namespace hearth
