#include "natural.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "errors.hpp"

namespace permrank {

Natural::Natural(std::uint64_t value) {
  if (value != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(value));
    if (value >> 32) limbs_.push_back(static_cast<std::uint32_t>(value >> 32));
  }
}

void Natural::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

Natural Natural::from_decimal(std::string_view text) {
  if (text.empty()) throw FormatError("empty decimal numeral");
  static constexpr std::uint32_t kPow10[] = {1,      10,      100,      1000,
                                             10000,  100000,  1000000,  10000000,
                                             100000000};
  Natural out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t take = std::min<std::size_t>(9, text.size() - pos);
    std::uint32_t chunk = 0;
    for (std::size_t k = 0; k < take; ++k) {
      const char ch = text[pos + k];
      if (ch < '0' || ch > '9')
        throw FormatError("invalid decimal numeral: " + std::string(text));
      chunk = chunk * 10 + static_cast<std::uint32_t>(ch - '0');
    }
    out *= (take == 9 ? 1000000000u : kPow10[take]);
    out += chunk;
    pos += take;
  }
  return out;
}

std::string Natural::to_decimal() const {
  if (is_zero()) return "0";
  Natural scratch = *this;
  std::vector<std::uint32_t> chunks;
  while (!scratch.is_zero()) chunks.push_back(scratch.divmod(1000000000u));
  std::string out = std::to_string(chunks.back());
  for (std::size_t k = chunks.size() - 1; k-- > 0;) {
    const std::string part = std::to_string(chunks[k]);
    out.append(9 - part.size(), '0');
    out += part;
  }
  return out;
}

Natural Natural::from_bytes_be(std::span<const std::uint8_t> bytes) {
  Natural out;
  for (const std::uint8_t b : bytes) {
    out *= 256u;
    out += b;
  }
  return out;
}

std::size_t Natural::byte_length() const {
  if (limbs_.empty()) return 0;
  const unsigned top_bytes = (std::bit_width(limbs_.back()) + 7) / 8;
  return 4 * (limbs_.size() - 1) + top_bytes;
}

void Natural::to_bytes_be(std::span<std::uint8_t> out) const {
  const std::size_t need = byte_length();
  if (need > out.size()) throw OverflowError("value does not fit in " + std::to_string(out.size()) + " bytes");
  std::fill(out.begin(), out.end(), std::uint8_t{0});
  for (std::size_t j = 0; j < need; ++j)
    out[out.size() - 1 - j] = static_cast<std::uint8_t>(limbs_[j / 4] >> (8 * (j % 4)));
}

std::uint64_t Natural::to_uint64() const {
  if (!fits_uint64()) throw OverflowError("value does not fit in 64 bits");
  std::uint64_t value = 0;
  if (limbs_.size() == 2) value = static_cast<std::uint64_t>(limbs_[1]) << 32;
  if (!limbs_.empty()) value |= limbs_[0];
  return value;
}

Natural& Natural::operator+=(const Natural& rhs) {
  if (limbs_.size() < rhs.limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    carry += limbs_[i];
    if (i < rhs.limbs_.size()) carry += rhs.limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(carry);
    carry >>= 32;
  }
  if (carry != 0) limbs_.push_back(static_cast<std::uint32_t>(carry));
  return *this;
}

Natural& Natural::operator+=(std::uint32_t rhs) {
  std::uint64_t carry = rhs;
  for (std::size_t i = 0; i < limbs_.size() && carry != 0; ++i) {
    carry += limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(carry);
    carry >>= 32;
  }
  if (carry != 0) limbs_.push_back(static_cast<std::uint32_t>(carry));
  return *this;
}

Natural& Natural::operator-=(std::uint32_t rhs) {
  std::uint64_t borrow = rhs;
  for (std::size_t i = 0; i < limbs_.size() && borrow != 0; ++i) {
    const std::uint64_t limb = limbs_[i];
    if (limb >= borrow) {
      limbs_[i] = static_cast<std::uint32_t>(limb - borrow);
      borrow = 0;
    } else {
      limbs_[i] = static_cast<std::uint32_t>((std::uint64_t{1} << 32) + limb - borrow);
      borrow = 1;
    }
  }
  if (borrow != 0) throw DomainError("natural subtraction underflow");
  trim();
  return *this;
}

Natural& Natural::operator*=(std::uint32_t rhs) {
  if (rhs == 0) {
    limbs_.clear();
    return *this;
  }
  std::uint64_t carry = 0;
  for (std::uint32_t& limb : limbs_) {
    const std::uint64_t cur = static_cast<std::uint64_t>(limb) * rhs + carry;
    limb = static_cast<std::uint32_t>(cur);
    carry = cur >> 32;
  }
  if (carry != 0) limbs_.push_back(static_cast<std::uint32_t>(carry));
  return *this;
}

std::uint32_t Natural::divmod(std::uint32_t divisor) {
  if (divisor == 0) throw std::invalid_argument("division by zero");
  std::uint64_t rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    const std::uint64_t cur = (rem << 32) | limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(cur / divisor);
    rem = cur % divisor;
  }
  trim();
  return static_cast<std::uint32_t>(rem);
}

std::strong_ordering Natural::operator<=>(const Natural& rhs) const {
  if (limbs_.size() != rhs.limbs_.size())
    return limbs_.size() <=> rhs.limbs_.size();
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] <=> rhs.limbs_[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace permrank
