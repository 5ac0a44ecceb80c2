#ifndef PERMRANK_CODEC_HPP
#define PERMRANK_CODEC_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "number_system.hpp"
#include "signed_perm.hpp"

namespace permrank {

// Digit string of a family member: the digit at weight index n - i is
// inv_i(perm), so the most significant digit is inv_1. Digit counts are
// n, n-1, n-1, n-1, n-2 for B, D, F, S, A.
DigitString family_digits(const SignedPerm& perm, Family family);

// Position of `perm` in the family's enumeration, in [0, |G_n|); the digit
// string above read in the family's number system.
Natural rank(const SignedPerm& perm, Family family);

// Inserts `symbol` into the strictly decreasing chain (stored top first) so
// that exactly `below` already placed symbols end up under it.
void insert_into_chain(std::vector<std::int32_t>& chain, std::int32_t symbol, std::size_t below);

// Inverse of rank: rebuilds the window by chain insertion, then applies the
// family's dependent-sign rule (D: negative-count parity, F: even total
// inversions, A: swap of the two bottom images).
SignedPerm unrank(const Natural& m, int n, Family family);
SignedPerm unrank_digits(const DigitString& digits, int n, Family family);

// Uniform rank in [0, |G_n|), drawn digit by digit.
Natural uniform_rank(Family family, int n, std::mt19937_64& rng);

}  // namespace permrank

#endif
