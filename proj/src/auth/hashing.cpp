#include "hearth/auth/hashing.hpp"

#include <openssl/crypto.h>
#include <openssl/evp.h>

#include <memory>

#include "hearth/common/error.hpp"

namespace hearth::auth {

Digest hash_password(std::string_view password, std::span<const std::uint8_t> salt) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  if (!ctx) throw InternalError("EVP_MD_CTX_new failed");

  Digest out{};
  unsigned int len = 0;
  if (EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), salt.data(), salt.size()) != 1 ||
      EVP_DigestUpdate(ctx.get(), password.data(), password.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), out.data(), &len) != 1 || len != out.size())
    throw InternalError("SHA-256 computation failed");
  return out;
}

Bytes new_salt() { return random_bytes(kSaltSize); }

bool digest_equal(const Digest& a, const Digest& b) {
  return CRYPTO_memcmp(a.data(), b.data(), a.size()) == 0;
}

}  // namespace hearth::auth
