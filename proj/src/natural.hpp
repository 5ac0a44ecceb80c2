#ifndef PERMRANK_NATURAL_HPP
#define PERMRANK_NATURAL_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permrank {

// Arbitrary-precision unsigned integer.
//
// Little-endian 32-bit limbs; canonical form has no high zero limbs and
// represents zero as the empty limb vector. Multipliers and divisors are
// 32-bit, which covers every radix this library admits.
class Natural {
 public:
  Natural() = default;
  Natural(std::uint64_t value);

  static Natural from_decimal(std::string_view text);
  static Natural from_bytes_be(std::span<const std::uint8_t> bytes);

  std::string to_decimal() const;
  // Writes the big-endian representation right-aligned into `out`,
  // zero-filling the rest; throws OverflowError if the value needs more bytes.
  void to_bytes_be(std::span<std::uint8_t> out) const;
  std::size_t byte_length() const;

  bool is_zero() const { return limbs_.empty(); }
  bool fits_uint64() const { return limbs_.size() <= 2; }
  std::uint64_t to_uint64() const;

  Natural& operator+=(const Natural& rhs);
  Natural& operator+=(std::uint32_t rhs);
  Natural& operator-=(std::uint32_t rhs);
  Natural& operator*=(std::uint32_t rhs);
  // In-place division by a small divisor; returns the remainder.
  std::uint32_t divmod(std::uint32_t divisor);

  friend Natural operator+(Natural lhs, const Natural& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend Natural operator*(Natural lhs, std::uint32_t rhs) {
    lhs *= rhs;
    return lhs;
  }

  friend bool operator==(const Natural&, const Natural&) = default;
  std::strong_ordering operator<=>(const Natural& rhs) const;

 private:
  void trim();
  std::vector<std::uint32_t> limbs_;
};

}  // namespace permrank

#endif
