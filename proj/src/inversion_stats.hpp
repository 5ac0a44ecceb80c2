#ifndef PERMRANK_INVERSION_STATS_HPP
#define PERMRANK_INVERSION_STATS_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "signed_perm.hpp"

namespace permrank {

// Root of the rank-n root system: e_k, -e_k, or c_0 e_{i} + c_1 e_{j} with
// i < j and coefficients +-1. Single-term roots leave slot 1 zeroed.
struct Root {
  std::array<std::int32_t, 2> index{0, 0};
  std::array<std::int32_t, 2> coeff{0, 0};

  static Root single(int k, int sign);
  static Root pair(int i, int ci, int j, int cj);
  bool is_single() const { return index[1] == 0; }

  friend bool operator==(const Root&, const Root&) = default;
};

// All n^2 positive roots: e_k, e_i + e_j, e_i - e_j for i < j.
std::vector<Root> positive_roots(int n);
// The subset fixing the smaller index to i: e_i, e_i + e_j, e_i - e_j for
// j > i. These sets partition the positive roots.
std::vector<Root> restricted_roots(int n, int i);

// Linear action e_i -> eps_i e_{sigma(i)}.
Root act_on_root(const SignedPerm& perm, const Root& root);
bool is_negative_root(const Root& root);

// Inversion counts by iterating roots; kept as the reference oracle for the
// counting formulas below.
std::uint64_t inv_oracle(const SignedPerm& perm);
std::uint64_t inv_i_oracle(const SignedPerm& perm, int i);

// Counting formula over absolute values of later entries, O(n - i):
//   perm(i) > 0:  #{k > i : |perm(k)| < |perm(i)|}
//   perm(i) < 0:  1 + #{k > i : |perm(k)| < |perm(i)|} + 2 #{k > i : |perm(k)| > |perm(i)|}
std::uint64_t inv_i(const SignedPerm& perm, int i);
std::vector<std::uint64_t> inv_vector(const SignedPerm& perm);
std::uint64_t inv(const SignedPerm& perm);

// r(i, j) = j when j <= n - i, else 1 + 2(n - i) - j. For j = inv_i(perm)
// this recovers #{k > i : |perm(k)| < |perm(i)|} regardless of the sign of
// perm(i). Requires j <= 2(n - i) + 1.
std::uint64_t r_value(int n, int i, std::uint64_t j);

}  // namespace permrank

#endif
