#include "inversion_stats.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "errors.hpp"

namespace permrank {

Root Root::single(int k, int sign) {
  if (k < 1) throw std::invalid_argument("root index must be positive");
  if (sign != 1 && sign != -1) throw std::invalid_argument("root coefficient must be +-1");
  Root root;
  root.index[0] = k;
  root.coeff[0] = sign;
  return root;
}

Root Root::pair(int i, int ci, int j, int cj) {
  if (i < 1 || j < 1 || i == j) throw std::invalid_argument("root indices must be distinct and positive");
  if ((ci != 1 && ci != -1) || (cj != 1 && cj != -1))
    throw std::invalid_argument("root coefficients must be +-1");
  if (i > j) {
    std::swap(i, j);
    std::swap(ci, cj);
  }
  Root root;
  root.index = {i, j};
  root.coeff = {ci, cj};
  return root;
}

std::vector<Root> positive_roots(int n) {
  if (n < 1) throw DomainError("rank must be positive");
  std::vector<Root> roots;
  roots.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) roots.push_back(Root::single(k, 1));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      roots.push_back(Root::pair(i, 1, j, 1));
      roots.push_back(Root::pair(i, 1, j, -1));
    }
  }
  return roots;
}

std::vector<Root> restricted_roots(int n, int i) {
  if (n < 1) throw DomainError("rank must be positive");
  if (i < 1 || i > n) throw DomainError("index " + std::to_string(i) + " out of range");
  std::vector<Root> roots;
  roots.reserve(1 + 2 * static_cast<std::size_t>(n - i));
  roots.push_back(Root::single(i, 1));
  for (int j = i + 1; j <= n; ++j) {
    roots.push_back(Root::pair(i, 1, j, 1));
    roots.push_back(Root::pair(i, 1, j, -1));
  }
  return roots;
}

Root act_on_root(const SignedPerm& perm, const Root& root) {
  const auto map_term = [&perm](int index, int coeff) {
    const std::int32_t image = perm(index);
    const int new_index = image < 0 ? -image : image;
    const int new_coeff = image < 0 ? -coeff : coeff;
    return std::pair<int, int>(new_index, new_coeff);
  };
  const auto [i, ci] = map_term(root.index[0], root.coeff[0]);
  if (root.is_single()) return Root::single(i, ci);
  const auto [j, cj] = map_term(root.index[1], root.coeff[1]);
  return Root::pair(i, ci, j, cj);
}

bool is_negative_root(const Root& root) {
  if (root.is_single()) return root.coeff[0] < 0;
  // Indices are ordered; a two-term root is negative when both coefficients
  // are negative or only the smaller index carries the minus.
  return root.coeff[0] < 0;
}

std::uint64_t inv_oracle(const SignedPerm& perm) {
  std::uint64_t count = 0;
  for (const Root& root : positive_roots(perm.size()))
    if (is_negative_root(act_on_root(perm, root))) ++count;
  return count;
}

std::uint64_t inv_i_oracle(const SignedPerm& perm, int i) {
  std::uint64_t count = 0;
  for (const Root& root : restricted_roots(perm.size(), i))
    if (is_negative_root(act_on_root(perm, root))) ++count;
  return count;
}

std::uint64_t inv_i(const SignedPerm& perm, int i) {
  const int n = perm.size();
  if (i < 1 || i > n) throw DomainError("index " + std::to_string(i) + " out of range");
  const std::int32_t v = perm(i);
  const std::int32_t abs = v < 0 ? -v : v;
  std::uint64_t smaller = 0;
  std::uint64_t larger = 0;
  for (int k = i + 1; k <= n; ++k) {
    const std::int32_t w = perm(k);
    if ((w < 0 ? -w : w) < abs)
      ++smaller;
    else
      ++larger;
  }
  return v > 0 ? smaller : 1 + smaller + 2 * larger;
}

std::vector<std::uint64_t> inv_vector(const SignedPerm& perm) {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(perm.size()));
  for (int i = 1; i <= perm.size(); ++i) out[static_cast<std::size_t>(i) - 1] = inv_i(perm, i);
  return out;
}

std::uint64_t inv(const SignedPerm& perm) {
  std::uint64_t total = 0;
  for (int i = 1; i <= perm.size(); ++i) total += inv_i(perm, i);
  return total;
}

std::uint64_t r_value(int n, int i, std::uint64_t j) {
  if (n < 1 || i < 1 || i > n) throw DomainError("index " + std::to_string(i) + " out of range");
  const std::uint64_t gap = static_cast<std::uint64_t>(n - i);
  if (j > 2 * gap + 1)
    throw DomainError("inversion count " + std::to_string(j) + " exceeds 2(n-i)+1");
  return j <= gap ? j : 1 + 2 * gap - j;
}

}  // namespace permrank
