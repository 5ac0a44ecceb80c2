#ifndef PERMRANK_SIGNED_PERM_HPP
#define PERMRANK_SIGNED_PERM_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "family.hpp"

namespace permrank {

// Signed permutation in window notation: entry i (1-based) is eps_i sigma(i).
// Immutable after construction.
class SignedPerm {
 public:
  static SignedPerm identity(int n);
  // Validates the window invariants: nonzero entries whose absolute values
  // form a permutation of 1..n. Throws DomainError otherwise.
  static SignedPerm from_window(std::vector<std::int32_t> window);

  int size() const { return static_cast<int>(window_.size()); }
  std::span<const std::int32_t> window() const { return window_; }

  // Image of j for j in {-n..-1, 1..n}; odd in the sense pi(-j) = -pi(j).
  std::int32_t operator()(int j) const;

  SignedPerm inverse() const;
  // Composition (lhs * rhs)(i) = lhs(rhs(i)).
  friend SignedPerm operator*(const SignedPerm& lhs, const SignedPerm& rhs);
  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;

 private:
  struct Unchecked {};
  SignedPerm(std::vector<std::int32_t> window, Unchecked) : window_(std::move(window)) {}

  std::vector<std::int32_t> window_;
};

bool is_member(const SignedPerm& perm, Family family);

// Streams the members of a family in a fixed order (windows lexicographic by
// absolute permutation, then by sign pattern).
class FamilyIterator {
 public:
  FamilyIterator(Family family, int n);
  std::optional<SignedPerm> next();

 private:
  Family family_;
  int n_;
  std::vector<std::int32_t> sigma_;
  std::uint64_t sign_bits_ = 0;
  std::uint64_t max_sign_bits_ = 0;
  bool exhausted_ = false;
};

void enumerate_family(Family family, int n, const std::function<void(const SignedPerm&)>& fn);

// Uniform member of the family, deterministic per seed.
SignedPerm random_element(Family family, int n, std::uint64_t seed);

// Window text format "[w1,w2,...,wn]"; spaces around entries are accepted.
SignedPerm parse_window(std::string_view text);
std::string format_window(const SignedPerm& perm);

}  // namespace permrank

#endif
