#ifndef PERMRANK_CIPHER_HPP
#define PERMRANK_CIPHER_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "codec.hpp"

namespace permrank {

// Secret key: a signed permutation acting on ranks of B_n by composition.
class CipherKey {
 public:
  explicit CipherKey(SignedPerm key);
  // Uniform key over B_n, deterministic per seed.
  static CipherKey generate(int n, std::uint64_t seed);

  int size() const { return key_.size(); }
  const SignedPerm& perm() const { return key_; }
  const SignedPerm& inverse() const { return inverse_; }
  // Block domain size 2^n n!.
  const Natural& domain_size() const { return domain_; }

 private:
  SignedPerm key_;
  SignedPerm inverse_;
  Natural domain_;
};

// Block maps on [0, 2^n n!): unrank, compose with the key (or its inverse),
// rank again. Bijections for every key; inverse of each other.
Natural encrypt_block(const Natural& m, const CipherKey& key);
Natural decrypt_block(const Natural& c, const CipherKey& key);

// Byte widths for stream mode: plain_bytes = max{t : 256^t <= 2^n n!},
// cipher_bytes = min{t : 256^t >= 2^n n!}. Requires plain_bytes >= 1 (n >= 4).
struct BlockGeometry {
  std::size_t plain_bytes;
  std::size_t cipher_bytes;
};
BlockGeometry block_geometry(const CipherKey& key);

inline constexpr std::array<std::uint8_t, 4> kStreamMagic{'P', 'R', 'N', 'K'};
inline constexpr std::uint8_t kStreamVersion = 1;
// magic(4) + version(1) + n(2, big-endian) + plaintext length(8, big-endian)
inline constexpr std::size_t kStreamHeaderSize = 15;

// Stream format: header followed by one cipher_bytes block per plain_bytes
// chunk of input, the final short chunk zero-padded on the left; the header
// records the true length.
std::vector<std::uint8_t> encrypt_stream(std::span<const std::uint8_t> plaintext,
                                         const CipherKey& key);
std::vector<std::uint8_t> decrypt_stream(std::span<const std::uint8_t> ciphertext,
                                         const CipherKey& key);

}  // namespace permrank

#endif
