#include "signed_perm.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "errors.hpp"
#include "inversion_stats.hpp"
#include "random_util.hpp"

namespace permrank {

SignedPerm SignedPerm::identity(int n) {
  if (n < 1) throw DomainError("window size must be positive");
  std::vector<std::int32_t> window(static_cast<std::size_t>(n));
  std::iota(window.begin(), window.end(), 1);
  return SignedPerm(std::move(window), Unchecked{});
}

SignedPerm SignedPerm::from_window(std::vector<std::int32_t> window) {
  const std::size_t n = window.size();
  if (n == 0) throw DomainError("window must be non-empty");
  std::vector<bool> seen(n + 1, false);
  for (const std::int32_t w : window) {
    if (w == 0) throw DomainError("window entries must be nonzero");
    const std::int64_t abs = w < 0 ? -static_cast<std::int64_t>(w) : w;
    if (abs > static_cast<std::int64_t>(n))
      throw DomainError("window entry " + std::to_string(w) + " out of range for n = " +
                        std::to_string(n));
    if (seen[static_cast<std::size_t>(abs)])
      throw DomainError("repeated absolute value " + std::to_string(abs) + " in window");
    seen[static_cast<std::size_t>(abs)] = true;
  }
  return SignedPerm(std::move(window), Unchecked{});
}

std::int32_t SignedPerm::operator()(int j) const {
  const int abs = j < 0 ? -j : j;
  if (abs < 1 || abs > size()) throw DomainError("index " + std::to_string(j) + " out of range");
  const std::int32_t image = window_[static_cast<std::size_t>(abs) - 1];
  return j < 0 ? -image : image;
}

SignedPerm SignedPerm::inverse() const {
  std::vector<std::int32_t> out(window_.size());
  for (int i = 1; i <= size(); ++i) {
    const std::int32_t w = window_[static_cast<std::size_t>(i) - 1];
    const std::size_t target = static_cast<std::size_t>(w < 0 ? -w : w) - 1;
    out[target] = w < 0 ? -i : i;
  }
  return SignedPerm(std::move(out), Unchecked{});
}

SignedPerm operator*(const SignedPerm& lhs, const SignedPerm& rhs) {
  if (lhs.size() != rhs.size()) throw DomainError("composition requires equal sizes");
  std::vector<std::int32_t> out(rhs.window_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = lhs(rhs.window_[i]);
  return SignedPerm(std::move(out), SignedPerm::Unchecked{});
}

bool is_member(const SignedPerm& perm, Family family) {
  switch (family) {
    case Family::B:
      return true;
    case Family::S:
      return std::ranges::all_of(perm.window(), [](std::int32_t w) { return w > 0; });
    case Family::D: {
      std::size_t negatives = 0;
      for (const std::int32_t w : perm.window())
        if (w < 0) ++negatives;
      return negatives % 2 == 0;
    }
    case Family::A:
      return std::ranges::all_of(perm.window(), [](std::int32_t w) { return w > 0; }) &&
             inv(perm) % 2 == 0;
    case Family::F:
      return inv(perm) % 2 == 0;
  }
  throw std::invalid_argument("unknown family");
}

FamilyIterator::FamilyIterator(Family family, int n) : family_(family), n_(n) {
  if (n < family_min_size(family))
    throw DomainError(std::string("family ") + family_char(family) +
                      " requires n >= " + std::to_string(family_min_size(family)));
  if (n > 62) throw std::invalid_argument("enumeration is limited to n <= 62");
  sigma_.resize(static_cast<std::size_t>(n));
  std::iota(sigma_.begin(), sigma_.end(), 1);
  const bool signed_family = family == Family::B || family == Family::D || family == Family::F;
  max_sign_bits_ = signed_family ? (std::uint64_t{1} << n) - 1 : 0;
}

std::optional<SignedPerm> FamilyIterator::next() {
  while (!exhausted_) {
    std::vector<std::int32_t> window(sigma_.begin(), sigma_.end());
    for (int k = 0; k < n_; ++k)
      if ((sign_bits_ >> k) & 1) window[static_cast<std::size_t>(k)] = -window[static_cast<std::size_t>(k)];

    if (sign_bits_ < max_sign_bits_) {
      ++sign_bits_;
    } else {
      sign_bits_ = 0;
      if (!std::next_permutation(sigma_.begin(), sigma_.end())) exhausted_ = true;
    }

    SignedPerm candidate = SignedPerm::from_window(std::move(window));
    if (is_member(candidate, family_)) return candidate;
  }
  return std::nullopt;
}

void enumerate_family(Family family, int n, const std::function<void(const SignedPerm&)>& fn) {
  FamilyIterator it(family, n);
  while (auto perm = it.next()) fn(*perm);
}

SignedPerm random_element(Family family, int n, std::uint64_t seed) {
  if (n < family_min_size(family))
    throw DomainError(std::string("family ") + family_char(family) +
                      " requires n >= " + std::to_string(family_min_size(family)));
  std::mt19937_64 rng(seed);
  std::vector<std::int32_t> window(static_cast<std::size_t>(n));
  std::iota(window.begin(), window.end(), 1);
  for (std::size_t i = window.size() - 1; i > 0; --i)
    std::swap(window[i], window[uniform_below(rng, i + 1)]);

  switch (family) {
    case Family::S:
      break;
    case Family::B:
      for (std::int32_t& w : window)
        if (uniform_below(rng, 2) == 1) w = -w;
      break;
    case Family::D: {
      // Free signs on the first n-1 positions, last sign fixes the parity;
      // every member has exactly one preimage, so the draw stays uniform.
      std::size_t negatives = 0;
      for (std::size_t i = 0; i + 1 < window.size(); ++i) {
        if (uniform_below(rng, 2) == 1) {
          window[i] = -window[i];
          ++negatives;
        }
      }
      if (negatives % 2 == 1) window.back() = -window.back();
      break;
    }
    case Family::F: {
      for (std::int32_t& w : window)
        if (uniform_below(rng, 2) == 1) w = -w;
      // Flipping the last sign toggles the inversion parity.
      if (inv(SignedPerm::from_window(window)) % 2 == 1) window.back() = -window.back();
      break;
    }
    case Family::A:
      // Swapping the last two images toggles the inversion parity.
      if (inv(SignedPerm::from_window(window)) % 2 == 1)
        std::swap(window[window.size() - 2], window[window.size() - 1]);
      break;
  }
  return SignedPerm::from_window(std::move(window));
}

SignedPerm parse_window(std::string_view text) {
  const auto is_space = [](char ch) { return ch == ' ' || ch == '\t' || ch == '\r'; };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw FormatError("window must be bracketed like [-2,1]");
  text = text.substr(1, text.size() - 2);

  std::vector<std::int32_t> window;
  std::size_t start = 0;
  for (std::size_t pos = 0; pos <= text.size(); ++pos) {
    if (pos != text.size() && text[pos] != ',') continue;
    std::string_view token = text.substr(start, pos - start);
    while (!token.empty() && is_space(token.front())) token.remove_prefix(1);
    while (!token.empty() && is_space(token.back())) token.remove_suffix(1);
    std::int32_t entry = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), entry);
    if (ec != std::errc{} || end != token.data() + token.size())
      throw FormatError("invalid window entry '" + std::string(token) + "'");
    window.push_back(entry);
    start = pos + 1;
  }
  return SignedPerm::from_window(std::move(window));
}

std::string format_window(const SignedPerm& perm) {
  std::string out = "[";
  for (int i = 0; i < perm.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(perm.window()[static_cast<std::size_t>(i)]);
  }
  out += ']';
  return out;
}

}  // namespace permrank
