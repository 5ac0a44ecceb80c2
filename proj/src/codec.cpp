#include "codec.hpp"

#include <string>

#include "errors.hpp"
#include "inversion_stats.hpp"
#include "random_util.hpp"

namespace permrank {

DigitString family_digits(const SignedPerm& perm, Family family) {
  const int n = perm.size();
  if (n < family_min_size(family))
    throw DomainError(std::string("family ") + family_char(family) +
                      " requires n >= " + std::to_string(family_min_size(family)));
  if (!is_member(perm, family))
    throw DomainError(format_window(perm) + " is not a member of family " +
                      family_char(family));
  const int offset = family_offset(family);
  std::vector<std::uint64_t> digits(static_cast<std::size_t>(n - offset));
  for (std::size_t pos = 0; pos < digits.size(); ++pos)
    digits[pos] = inv_i(perm, n - offset - static_cast<int>(pos));
  return DigitString(std::move(digits));
}

Natural rank(const SignedPerm& perm, Family family) {
  return decode_digits(NumberSystem::builtin(family, perm.size()),
                       family_digits(perm, family));
}

void insert_into_chain(std::vector<std::int32_t>& chain, std::int32_t symbol, std::size_t below) {
  if (below > chain.size())
    throw DomainError("cannot place " + std::to_string(below) + " symbols below, only " +
                      std::to_string(chain.size()) + " placed");
  chain.insert(chain.begin() + static_cast<std::ptrdiff_t>(chain.size() - below), symbol);
}

SignedPerm unrank_digits(const DigitString& digits, int n, Family family) {
  if (n < family_min_size(family))
    throw DomainError(std::string("family ") + family_char(family) +
                      " requires n >= " + std::to_string(family_min_size(family)));
  const NumberSystem system = NumberSystem::builtin(family, n);
  const std::size_t capacity = system.positions();
  for (std::size_t pos = capacity; pos < digits.size(); ++pos) {
    if (digits.digit(pos) != 0)
      throw DomainError("digit string has more than " + std::to_string(capacity) +
                        " positions");
  }
  for (std::size_t pos = 0; pos < capacity; ++pos) {
    if (digits.digit(pos) > system.radix(pos))
      throw DomainError("digit " + std::to_string(digits.digit(pos)) + " exceeds bound " +
                        std::to_string(system.radix(pos)) + " at position " + std::to_string(pos));
  }

  const int offset = family_offset(family);
  std::vector<std::int32_t> chain;
  chain.reserve(static_cast<std::size_t>(n));
  std::vector<int> sign(static_cast<std::size_t>(n) + 1, 1);

  // Positions above n - offset carry no digit and behave like digit zero.
  for (int i = n; i >= 1; --i) {
    std::uint64_t digit = 0;
    if (i <= n - offset) digit = digits.digit(static_cast<std::size_t>(n - offset - i));
    if (digit > static_cast<std::uint64_t>(n - i)) sign[static_cast<std::size_t>(i)] = -1;
    const std::uint64_t below = r_value(n, i, digit);
    insert_into_chain(chain, i, static_cast<std::size_t>(below));
  }

  // The chain fixes the relative order of |window| values: top entry gets n.
  std::vector<std::int32_t> window(static_cast<std::size_t>(n));
  for (int depth = 0; depth < n; ++depth) {
    const std::size_t position = static_cast<std::size_t>(chain[static_cast<std::size_t>(depth)]);
    window[position - 1] = static_cast<std::int32_t>(n - depth) * sign[position];
  }

  switch (family) {
    case Family::B:
    case Family::S:
      break;
    case Family::D: {
      std::size_t negatives = 0;
      for (std::size_t i = 0; i + 1 < window.size(); ++i)
        if (window[i] < 0) ++negatives;
      if (negatives % 2 == 1) window.back() = -window.back();
      break;
    }
    case Family::F:
      if (inv(SignedPerm::from_window(window)) % 2 == 1) window.back() = -window.back();
      break;
    case Family::A:
      if (inv(SignedPerm::from_window(window)) % 2 == 1)
        std::swap(window[window.size() - 2], window[window.size() - 1]);
      break;
  }
  return SignedPerm::from_window(std::move(window));
}

SignedPerm unrank(const Natural& m, int n, Family family) {
  if (!(m < family_order(family, n)))
    throw DomainError("rank " + m.to_decimal() + " out of range for family " +
                      family_char(family) + ", n = " + std::to_string(n));
  return unrank_digits(encode_natural(NumberSystem::builtin(family, n), m), n, family);
}

Natural uniform_rank(Family family, int n, std::mt19937_64& rng) {
  const NumberSystem system = NumberSystem::builtin(family, n);
  std::vector<std::uint64_t> digits(system.positions());
  for (std::size_t pos = 0; pos < digits.size(); ++pos)
    digits[pos] = uniform_below(rng, system.radix(pos) + 1);
  return decode_digits(system, DigitString(std::move(digits)));
}

}  // namespace permrank
