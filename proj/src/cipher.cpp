#include "cipher.hpp"

#include <algorithm>
#include <string>

#include "errors.hpp"
#include "random_util.hpp"

namespace permrank {

CipherKey::CipherKey(SignedPerm key)
    : key_(std::move(key)),
      inverse_(key_.inverse()),
      domain_(family_order(Family::B, key_.size())) {}

CipherKey CipherKey::generate(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Natural rank = uniform_rank(Family::B, n, rng);
  return CipherKey(unrank(rank, n, Family::B));
}

Natural encrypt_block(const Natural& m, const CipherKey& key) {
  if (!(m < key.domain_size()))
    throw DomainError("block value " + m.to_decimal() + " out of range");
  return rank(unrank(m, key.size(), Family::B) * key.perm(), Family::B);
}

Natural decrypt_block(const Natural& c, const CipherKey& key) {
  if (!(c < key.domain_size()))
    throw DomainError("block value " + c.to_decimal() + " out of range");
  return rank(unrank(c, key.size(), Family::B) * key.inverse(), Family::B);
}

BlockGeometry block_geometry(const CipherKey& key) {
  Natural max_value = key.domain_size();
  max_value -= 1u;
  const std::size_t cipher_bytes = std::max<std::size_t>(max_value.byte_length(), 1);
  Natural power(1);
  for (std::size_t t = 0; t < cipher_bytes; ++t) power *= 256u;
  const std::size_t plain_bytes = power == key.domain_size() ? cipher_bytes : cipher_bytes - 1;
  if (plain_bytes == 0)
    throw DomainError("2^n n! must be at least 256 for stream mode (need n >= 4)");
  return BlockGeometry{plain_bytes, cipher_bytes};
}

std::vector<std::uint8_t> encrypt_stream(std::span<const std::uint8_t> plaintext,
                                         const CipherKey& key) {
  const BlockGeometry geometry = block_geometry(key);
  if (key.size() > 0xFFFF) throw DomainError("stream header limits n to 65535");

  const std::uint64_t length = plaintext.size();
  const std::size_t blocks = (plaintext.size() + geometry.plain_bytes - 1) / geometry.plain_bytes;

  std::vector<std::uint8_t> out(kStreamHeaderSize);
  out.reserve(kStreamHeaderSize + blocks * geometry.cipher_bytes);
  std::copy(kStreamMagic.begin(), kStreamMagic.end(), out.begin());
  out[4] = kStreamVersion;
  out[5] = static_cast<std::uint8_t>(key.size() >> 8);
  out[6] = static_cast<std::uint8_t>(key.size());
  for (std::size_t k = 0; k < 8; ++k)
    out[7 + k] = static_cast<std::uint8_t>(length >> (56 - 8 * k));

  for (std::size_t b = 0; b < blocks; ++b) {
    const std::size_t begin = b * geometry.plain_bytes;
    const std::size_t count = std::min(geometry.plain_bytes, plaintext.size() - begin);
    const Natural m = Natural::from_bytes_be(plaintext.subspan(begin, count));
    const Natural c = encrypt_block(m, key);
    const std::size_t at = out.size();
    out.resize(at + geometry.cipher_bytes);
    c.to_bytes_be(std::span<std::uint8_t>(out).subspan(at, geometry.cipher_bytes));
  }
  return out;
}

std::vector<std::uint8_t> decrypt_stream(std::span<const std::uint8_t> ciphertext,
                                         const CipherKey& key) {
  if (ciphertext.size() < kStreamHeaderSize)
    throw FormatError("ciphertext shorter than its header");
  if (!std::equal(kStreamMagic.begin(), kStreamMagic.end(), ciphertext.begin()))
    throw FormatError("unrecognized ciphertext magic");
  if (ciphertext[4] != kStreamVersion)
    throw FormatError("unsupported ciphertext version " + std::to_string(ciphertext[4]));
  const int n = (static_cast<int>(ciphertext[5]) << 8) | ciphertext[6];
  if (n != key.size())
    throw DomainError("ciphertext was produced with n = " + std::to_string(n) +
                      ", key has n = " + std::to_string(key.size()));
  std::uint64_t length = 0;
  for (std::size_t k = 7; k < kStreamHeaderSize; ++k) length = (length << 8) | ciphertext[k];

  const BlockGeometry geometry = block_geometry(key);
  const std::uint64_t blocks = (length + geometry.plain_bytes - 1) / geometry.plain_bytes;
  if (ciphertext.size() != kStreamHeaderSize + blocks * geometry.cipher_bytes)
    throw FormatError("ciphertext length does not match its header");

  std::vector<std::uint8_t> out;
  out.reserve(length);
  std::vector<std::uint8_t> block(geometry.plain_bytes);
  for (std::uint64_t b = 0; b < blocks; ++b) {
    const std::size_t begin = kStreamHeaderSize + static_cast<std::size_t>(b) * geometry.cipher_bytes;
    const Natural c = Natural::from_bytes_be(ciphertext.subspan(begin, geometry.cipher_bytes));
    const Natural m = decrypt_block(c, key);
    m.to_bytes_be(block);
    const std::uint64_t remaining = length - b * geometry.plain_bytes;
    if (remaining >= geometry.plain_bytes) {
      out.insert(out.end(), block.begin(), block.end());
    } else {
      // Final short chunk was left-padded; keep its low bytes.
      out.insert(out.end(), block.end() - static_cast<std::ptrdiff_t>(remaining), block.end());
    }
  }
  return out;
}

}  // namespace permrank
