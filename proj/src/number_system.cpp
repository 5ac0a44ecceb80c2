#include "number_system.hpp"

#include <charconv>
#include <stdexcept>

#include "errors.hpp"

namespace permrank {

namespace {

std::uint64_t builtin_radix(Family family, std::size_t pos) {
  switch (family) {
    case Family::B: return 2 * pos + 1;
    case Family::D:
    case Family::F: return 2 * pos + 3;
    case Family::S: return pos + 1;
    case Family::A: return pos + 2;
  }
  throw std::invalid_argument("unknown family");
}

// Digits beyond a fixed system's positions must be zero; within the system
// (or an extendable one) they must respect the radix bound.
void check_digit_bounds(const NumberSystem& system, const DigitString& digits) {
  for (std::size_t pos = 0; pos < digits.size(); ++pos) {
    const std::uint64_t digit = digits.digit(pos);
    if (!system.extendable() && pos >= system.positions()) {
      if (digit != 0)
        throw OverflowError("digit at position " + std::to_string(pos) +
                            " lies beyond the number system");
      continue;
    }
    if (digit > system.radix(pos))
      throw DomainError("digit " + std::to_string(digit) + " exceeds bound " +
                        std::to_string(system.radix(pos)) + " at position " +
                        std::to_string(pos));
  }
}

}  // namespace

NumberSystem::NumberSystem(RadixSequence radices)
    : NumberSystem(std::move(radices), std::nullopt) {}

NumberSystem::NumberSystem(RadixSequence radices, std::optional<Family> family)
    : radices_(std::move(radices)), family_(family) {
  if (radices_.radices.empty())
    throw std::invalid_argument("radix sequence must be non-empty");
  for (const std::uint64_t c : radices_.radices) {
    if (c == 0) throw std::invalid_argument("radices must be positive");
    if (c > kMaxRadix) throw std::invalid_argument("radix exceeds 2^32-2");
  }
  weights_.reserve(radices_.radices.size());
  weights_.emplace_back(1u);
  for (std::size_t p = 0; p + 1 < radices_.radices.size(); ++p)
    weights_.push_back(weights_[p] * static_cast<std::uint32_t>(radices_.radices[p] + 1));
}

NumberSystem NumberSystem::builtin(Family family, int n) {
  if (n < family_min_size(family))
    throw DomainError(std::string("family ") + family_char(family) +
                      " requires n >= " + std::to_string(family_min_size(family)));
  RadixSequence seq;
  seq.offset = family_offset(family);
  seq.radices.resize(static_cast<std::size_t>(n - seq.offset));
  for (std::size_t p = 0; p < seq.radices.size(); ++p)
    seq.radices[p] = builtin_radix(family, p);
  return NumberSystem(std::move(seq), family);
}

std::uint64_t NumberSystem::radix(std::size_t pos) const {
  if (pos < radices_.radices.size()) return radices_.radices[pos];
  if (family_) return builtin_radix(*family_, pos);
  throw OverflowError("position " + std::to_string(pos) +
                      " lies beyond the number system");
}

Natural NumberSystem::weight(std::size_t pos) const {
  if (pos < weights_.size()) return weights_[pos];
  if (!family_)
    throw OverflowError("position " + std::to_string(pos) +
                        " lies beyond the number system");
  Natural w = weights_.back();
  for (std::size_t p = weights_.size() - 1; p < pos; ++p)
    w *= static_cast<std::uint32_t>(radix(p) + 1);
  return w;
}

std::size_t DigitString::significant_size() const {
  std::size_t size = digits_.size();
  while (size > 0 && digits_[size - 1] == 0) --size;
  return size;
}

bool operator==(const DigitString& lhs, const DigitString& rhs) {
  const std::size_t size = lhs.significant_size();
  if (size != rhs.significant_size()) return false;
  for (std::size_t pos = 0; pos < size; ++pos)
    if (lhs.digit(pos) != rhs.digit(pos)) return false;
  return true;
}

bool validate_system(std::span<const Natural> weights, std::span<const std::uint64_t> radices) {
  if (weights.empty() || weights.size() != radices.size())
    throw std::invalid_argument("weight and radix sequences must be non-empty and aligned");
  for (const std::uint64_t c : radices) {
    if (c > kMaxRadix) throw std::invalid_argument("radix exceeds 2^32-2");
    if (c == 0) return false;
  }
  if (weights[0] != Natural(1)) return false;
  for (std::size_t p = 0; p + 1 < weights.size(); ++p)
    if (weights[p + 1] != weights[p] * static_cast<std::uint32_t>(radices[p] + 1)) return false;
  return true;
}

Natural decode_digits(const NumberSystem& system, const DigitString& digits) {
  check_digit_bounds(system, digits);
  Natural value;
  for (std::size_t pos = digits.significant_size(); pos-- > 0;) {
    value *= static_cast<std::uint32_t>(system.radix(pos) + 1);
    value += static_cast<std::uint32_t>(digits.digit(pos));
  }
  return value;
}

DigitString encode_natural(const NumberSystem& system, Natural value) {
  std::vector<std::uint64_t> digits;
  std::size_t pos = 0;
  while (!value.is_zero()) {
    const std::uint64_t base = system.radix(pos) + 1;
    digits.push_back(value.divmod(static_cast<std::uint32_t>(base)));
    ++pos;
  }
  return DigitString(std::move(digits));
}

DigitString increment_digits(const NumberSystem& system, const DigitString& digits) {
  check_digit_bounds(system, digits);
  std::vector<std::uint64_t> out(digits.digits().begin(), digits.digits().end());
  std::size_t pos = 0;
  for (;;) {
    if (pos == out.size()) out.push_back(0);
    if (out[pos] < system.radix(pos)) {
      ++out[pos];
      break;
    }
    out[pos] = 0;
    ++pos;
  }
  return DigitString(std::move(out));
}

DigitString parse_digit_string(const NumberSystem& system, std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  if (text.empty()) throw FormatError("empty digit string");

  std::vector<std::uint64_t> most_significant_first;
  std::size_t start = 0;
  for (std::size_t pos = 0; pos <= text.size(); ++pos) {
    if (pos != text.size() && text[pos] != ':') continue;
    const std::string_view token = text.substr(start, pos - start);
    std::uint64_t digit = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), digit);
    if (ec != std::errc{} || end != token.data() + token.size())
      throw FormatError("invalid digit '" + std::string(token) + "' in digit string");
    most_significant_first.push_back(digit);
    start = pos + 1;
  }

  std::vector<std::uint64_t> digits(most_significant_first.rbegin(), most_significant_first.rend());
  DigitString out(std::move(digits));
  check_digit_bounds(system, out);
  return out;
}

std::string format_digit_string(const DigitString& digits) {
  const std::size_t size = digits.significant_size();
  if (size == 0) return "0";
  std::string out;
  for (std::size_t pos = size; pos-- > 0;) {
    out += std::to_string(digits.digit(pos));
    if (pos != 0) out += ':';
  }
  return out;
}

}  // namespace permrank
