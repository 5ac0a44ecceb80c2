#include "family.hpp"

#include <string>

#include "errors.hpp"

namespace permrank {

std::optional<Family> family_from_char(char tag) {
  switch (tag) {
    case 'B': return Family::B;
    case 'D': return Family::D;
    case 'S': return Family::S;
    case 'A': return Family::A;
    case 'F': return Family::F;
    default: return std::nullopt;
  }
}

Natural family_order(Family family, int n) {
  if (n < family_min_size(family))
    throw DomainError(std::string("family ") + family_char(family) +
                      " requires n >= " + std::to_string(family_min_size(family)));
  Natural order(1);
  for (int i = 2; i <= n; ++i) order *= static_cast<std::uint32_t>(i);
  switch (family) {
    case Family::S:
      break;
    case Family::A:
      order.divmod(2);
      break;
    case Family::B:
      for (int i = 0; i < n; ++i) order *= 2u;
      break;
    case Family::D:
    case Family::F:
      for (int i = 1; i < n; ++i) order *= 2u;
      break;
  }
  return order;
}

}  // namespace permrank
