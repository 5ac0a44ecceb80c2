#include "selftest.hpp"

#include <vector>

#include "cipher.hpp"
#include "codec.hpp"
#include "inversion_stats.hpp"

namespace permrank {

namespace {
constexpr int kMaxN = 4;
constexpr Family kFamilies[] = {Family::B, Family::D, Family::S, Family::A, Family::F};
}  // namespace

std::vector<SelftestCheck> run_selftest() {
  std::vector<SelftestCheck> checks;

  bool formula_ok = true;
  bool sum_ok = true;
  bool sign_ok = true;
  bool r_ok = true;
  for (int n = 1; n <= kMaxN; ++n) {
    enumerate_family(Family::B, n, [&](const SignedPerm& perm) {
      std::uint64_t total = 0;
      for (int i = 1; i <= n; ++i) {
        const std::uint64_t fast = inv_i(perm, i);
        total += fast;
        if (fast != inv_i_oracle(perm, i)) formula_ok = false;
        if ((perm(i) > 0) != (fast <= static_cast<std::uint64_t>(n - i))) sign_ok = false;
        std::uint64_t smaller = 0;
        for (int k = i + 1; k <= n; ++k)
          if ((perm(k) < 0 ? -perm(k) : perm(k)) < (perm(i) < 0 ? -perm(i) : perm(i))) ++smaller;
        if (r_value(n, i, fast) != smaller) r_ok = false;
      }
      if (total != inv_oracle(perm)) sum_ok = false;
    });
  }
  checks.push_back({"inv_i formula matches root oracle (B_n, n <= 4)", formula_ok});
  checks.push_back({"inv decomposes as sum of inv_i (B_n, n <= 4)", sum_ok});
  checks.push_back({"sign criterion inv_i <= n-i (B_n, n <= 4)", sign_ok});
  checks.push_back({"r recovers smaller-later count (B_n, n <= 4)", r_ok});

  for (const Family family : kFamilies) {
    bool bijective = true;
    for (int n = family_min_size(family); n <= kMaxN; ++n) {
      const std::uint64_t order = family_order(family, n).to_uint64();
      std::vector<bool> seen(order, false);
      std::uint64_t count = 0;
      enumerate_family(family, n, [&](const SignedPerm& perm) {
        ++count;
        const Natural r = rank(perm, family);
        if (!r.fits_uint64() || r.to_uint64() >= order) {
          bijective = false;
          return;
        }
        const std::uint64_t value = r.to_uint64();
        if (seen[value]) bijective = false;
        seen[value] = true;
        if (unrank(r, n, family) != perm) bijective = false;
      });
      if (count != order) bijective = false;
    }
    checks.push_back({std::string("rank/unrank bijection (") + family_char(family) + ", n <= 4)",
                      bijective});
  }

  return checks;
}

}  // namespace permrank
