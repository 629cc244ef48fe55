#pragma once

#include <span>
#include <string_view>

#include "hearth/auth/types.hpp"

namespace hearth::auth {

/// SHA-256(salt || UTF-8 password). Deterministic; the caller rejects empty
/// passwords before hashing.
Digest hash_password(std::string_view password, std::span<const std::uint8_t> salt);

/// Fresh random salt of kSaltSize bytes.
Bytes new_salt();

/// Constant-time digest comparison.
bool digest_equal(const Digest& a, const Digest& b);

}  // namespace hearth::auth
