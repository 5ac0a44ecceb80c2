#ifndef PERMRANK_FAMILY_HPP
#define PERMRANK_FAMILY_HPP

#include <cstdint>
#include <optional>

#include "natural.hpp"

namespace permrank {

// The five supported group families over windows of size n:
//   B - all signed permutations
//   D - signed permutations with an even number of negative entries
//   S - plain permutations (no negative entries)
//   A - plain permutations with even inversion number
//   F - signed permutations with even inversion number
enum class Family : std::uint8_t { B, D, S, A, F };

// Starting index of the family's radix sequence; also the gap between
// window size and digit count in the rank codec.
constexpr int family_offset(Family family) {
  switch (family) {
    case Family::B: return 0;
    case Family::D: return 1;
    case Family::S: return 1;
    case Family::F: return 1;
    case Family::A: return 2;
  }
  return 0;
}

// Minimal window size the rank codec supports for the family.
constexpr int family_min_size(Family family) {
  switch (family) {
    case Family::B: return 1;
    case Family::D: return 2;
    case Family::S: return 2;
    case Family::F: return 2;
    case Family::A: return 3;
  }
  return 1;
}

constexpr char family_char(Family family) {
  switch (family) {
    case Family::B: return 'B';
    case Family::D: return 'D';
    case Family::S: return 'S';
    case Family::A: return 'A';
    case Family::F: return 'F';
  }
  return '?';
}

std::optional<Family> family_from_char(char tag);

// Group order: |B_n| = 2^n n!, |D_n| = |F_n| = 2^(n-1) n!, |S_n| = n!,
// |A_n| = n!/2. Throws DomainError when n is below the family minimum.
Natural family_order(Family family, int n);

}  // namespace permrank

#endif
