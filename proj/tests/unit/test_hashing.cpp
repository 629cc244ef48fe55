#include <doctest.h>

#include <random>

#include "hearth/auth/hashing.hpp"
#include "hearth/common/encoding.hpp"
#include "sha256_ref.hpp"

using namespace hearth;
using hearth::testing::sha256_reference;

namespace {

std::string hex_of(const auth::Digest& d) { return to_hex(d); }

std::string ref_hex(std::string_view msg) {
  return to_hex(sha256_reference(to_bytes(msg)));
}

}  // namespace

TEST_CASE("reference implementation reproduces FIPS 180-4 vectors") {
  CHECK(ref_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(ref_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(ref_hex("abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq") ==
        "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1");
}

TEST_CASE("hash_password with an empty salt is plain SHA-256") {
  CHECK(hex_of(auth::hash_password("abc", Bytes{})) ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(hex_of(auth::hash_password("abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq", Bytes{})) ==
        "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1");
}

TEST_CASE("one million 'a' (multi-block) agrees with the reference") {
  const std::string m(1000000, 'a');
  CHECK(hex_of(auth::hash_password(m, Bytes{})) ==
        "cdc76e5c9914fb9281a1c7e284d73e67f1809a48a497200e046d39ccc7112cd0");
  CHECK(ref_hex(m) == "cdc76e5c9914fb9281a1c7e284d73e67f1809a48a497200e046d39ccc7112cd0");
}

TEST_CASE("digest is SHA-256(salt || password)") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 200; ++i) {
    Bytes salt(rng() % 40);
    for (auto& b : salt) b = static_cast<std::uint8_t>(rng());
    std::string pw(1 + rng() % 80, '\0');
    for (auto& c : pw) c = static_cast<char>(1 + rng() % 255);
    Bytes msg = salt;
    msg.insert(msg.end(), pw.begin(), pw.end());
    CHECK(auth::hash_password(pw, salt) == sha256_reference(msg));
  }
}

TEST_CASE("deterministic and salt-sensitive") {
  const Bytes s1 = auth::new_salt(), s2 = auth::new_salt();
  CHECK(s1.size() == auth::kSaltSize);
  CHECK(s1 != s2);
  CHECK(auth::hash_password("pw", s1) == auth::hash_password("pw", s1));
  CHECK(auth::hash_password("pw", s1) != auth::hash_password("pw", s2));
  CHECK(auth::hash_password("pw", s1) != auth::hash_password("pW", s1));
}

TEST_CASE("digest_equal") {
  const auto a = auth::hash_password("x", Bytes{1});
  auto b = a;
  CHECK(auth::digest_equal(a, b));
  b[31] ^= 1;
  CHECK_FALSE(auth::digest_equal(a, b));
}
