#ifndef PERMRANK_SELFTEST_HPP
#define PERMRANK_SELFTEST_HPP

#include <string>
#include <vector>

namespace permrank {

struct SelftestCheck {
  std::string name;
  bool passed;
};

// Exhaustive oracle-equivalence and bijection sweeps for n <= 4, cheap
// enough to run on demand from the CLI or through the C API.
std::vector<SelftestCheck> run_selftest();

}  // namespace permrank

#endif
