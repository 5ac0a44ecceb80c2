#ifndef PERMRANK_NUMBER_SYSTEM_HPP
#define PERMRANK_NUMBER_SYSTEM_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "family.hpp"
#include "natural.hpp"

namespace permrank {

// Largest admissible digit bound; keeps every base 1+c inside 32 bits.
inline constexpr std::uint64_t kMaxRadix = 0xFFFFFFFEu;

// Digit bounds c indexed from a family-dependent smallest index. Position p
// of the stored vector carries the external index offset + p.
struct RadixSequence {
  int offset = 0;
  std::vector<std::uint64_t> radices;
};

// Positional number system (Q, c): the digit at position p lies in
// [0, c_p] and carries weight Q_p = prod_{q<p} (1 + c_q), Q_0 = 1.
// Positions are least significant first throughout.
class NumberSystem {
 public:
  // Builds the unique weight sequence for the given radices.
  explicit NumberSystem(RadixSequence radices);

  // Truncated system of one of the five built-in families:
  //   B: c = 1,3,5,...   D,F: c = 3,5,7,...   S: c = 1,2,3,...   A: c = 2,3,4,...
  // Built-in systems extend past their stored positions on demand.
  static NumberSystem builtin(Family family, int n);

  int offset() const { return radices_.offset; }
  std::size_t positions() const { return radices_.radices.size(); }
  std::optional<Family> family() const { return family_; }
  bool extendable() const { return family_.has_value(); }

  // Digit bound at position pos; applies the family formula past the stored
  // positions and throws OverflowError for fixed systems.
  std::uint64_t radix(std::size_t pos) const;
  // Weight at position pos, extended the same way.
  Natural weight(std::size_t pos) const;
  std::span<const Natural> weights() const { return weights_; }

 private:
  NumberSystem(RadixSequence radices, std::optional<Family> family);

  RadixSequence radices_;
  std::vector<Natural> weights_;
  std::optional<Family> family_;
};

// Digit vector, least significant first; reading past the end yields zeros.
// High zero digits are legal and ignored by comparison and rendering.
class DigitString {
 public:
  DigitString() = default;
  explicit DigitString(std::vector<std::uint64_t> digits) : digits_(std::move(digits)) {}

  std::size_t size() const { return digits_.size(); }
  std::size_t significant_size() const;
  std::uint64_t digit(std::size_t pos) const { return pos < digits_.size() ? digits_[pos] : 0; }
  std::span<const std::uint64_t> digits() const { return digits_; }

  friend bool operator==(const DigitString& lhs, const DigitString& rhs);

 private:
  std::vector<std::uint64_t> digits_;
};

// True iff (Q, c) is a valid system: Q_0 = 1 and Q_{p+1} = Q_p (1 + c_p).
// Misaligned or empty input is an error, not "false".
bool validate_system(std::span<const Natural> weights, std::span<const std::uint64_t> radices);

// Value of the digit string, sum of digit * weight.
Natural decode_digits(const NumberSystem& system, const DigitString& digits);

// Unique digit string of `value`; extends built-in systems as needed and
// throws OverflowError when a fixed system runs out of positions.
DigitString encode_natural(const NumberSystem& system, Natural value);

// Digit string of value + 1, by carry propagation.
DigitString increment_digits(const NumberSystem& system, const DigitString& digits);

// Colon-separated digits, most significant first, e.g. "2:0:1".
DigitString parse_digit_string(const NumberSystem& system, std::string_view text);
std::string format_digit_string(const DigitString& digits);

}  // namespace permrank

#endif
