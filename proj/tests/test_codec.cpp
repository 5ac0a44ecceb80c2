#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "codec.hpp"
#include "errors.hpp"
#include "inversion_stats.hpp"
#include "oracles.hpp"

using namespace permrank;
using permrank::testing::collect_family;
using permrank::testing::rank_by_root_oracle;

namespace {
const Family kFamilies[] = {Family::B, Family::D, Family::S, Family::A, Family::F};
}

TEST_CASE("family digit strings") {
  const DigitString id3 = family_digits(SignedPerm::identity(3), Family::B);
  CHECK(id3.size() == 3);
  CHECK(id3 == DigitString());
  CHECK(format_digit_string(id3) == "0");

  CHECK(format_digit_string(family_digits(parse_window("[-2,1]"), Family::B)) == "2:0");
  CHECK(format_digit_string(family_digits(parse_window("[3,1,2]"), Family::A)) == "2");

  CHECK(family_digits(parse_window("[2,1,3,4]"), Family::S).size() == 3);
  CHECK(family_digits(parse_window("[3,1,2]"), Family::A).size() == 1);
}

TEST_CASE("digit strings stay within the family radices") {
  for (const Family family : kFamilies) {
    for (int n = family_min_size(family); n <= 4; ++n) {
      const NumberSystem system = NumberSystem::builtin(family, n);
      for (const SignedPerm& pi : collect_family(family, n)) {
        const DigitString digits = family_digits(pi, family);
        REQUIRE(digits.size() == system.positions());
        for (std::size_t pos = 0; pos < digits.size(); ++pos)
          CHECK(digits.digit(pos) <= system.radix(pos));
      }
    }
  }
}

TEST_CASE("worked rank vectors, re-derived through the root oracle") {
  const struct {
    const char* window;
    Family family;
    std::uint64_t expected;
  } cases[] = {
      {"[-2,1]", Family::B, 4}, {"[2,3,1]", Family::S, 3}, {"[-1,-2]", Family::D, 3},
      {"[2,-1]", Family::F, 1}, {"[3,1,2]", Family::A, 2},
  };
  for (const auto& c : cases) {
    CAPTURE(c.window);
    const SignedPerm pi = parse_window(c.window);
    CHECK(rank_by_root_oracle(pi, c.family) == Natural(c.expected));
    CHECK(rank(pi, c.family) == Natural(c.expected));
  }
}

TEST_CASE("rank of the identity is zero") {
  for (const Family family : kFamilies) {
    for (int n = family_min_size(family); n <= 6; ++n)
      CHECK(rank(SignedPerm::identity(n), family).is_zero());
  }
}

TEST_CASE("rank rejects non-members and undersized windows") {
  CHECK_THROWS_AS(rank(parse_window("[-1,2]"), Family::S), DomainError);
  CHECK_THROWS_AS(rank(parse_window("[-1,2]"), Family::D), DomainError);
  CHECK_THROWS_AS(rank(parse_window("[2,1]"), Family::A), DomainError);
  CHECK_THROWS_AS(rank(parse_window("[1,2]"), Family::A), DomainError);  // n = 2 < 3
  CHECK_THROWS_AS(rank(parse_window("[1]"), Family::S), DomainError);
}

TEST_CASE("chain insertion") {
  std::vector<std::int32_t> chain;
  insert_into_chain(chain, 3, 0);
  CHECK(chain == std::vector<std::int32_t>{3});

  insert_into_chain(chain, 2, 1);  // above the single placed symbol
  CHECK(chain == std::vector<std::int32_t>{2, 3});

  insert_into_chain(chain, 1, 1);  // exactly one symbol below
  CHECK(chain == std::vector<std::int32_t>{2, 1, 3});

  CHECK_THROWS_AS(insert_into_chain(chain, 9, 4), DomainError);
}

TEST_CASE("unrank examples") {
  CHECK(unrank(Natural(4), 2, Family::B) == parse_window("[-2,1]"));
  CHECK(unrank(Natural(2), 2, Family::D) == parse_window("[-2,-1]"));
  CHECK(unrank(Natural(1), 2, Family::F) == parse_window("[2,-1]"));
  CHECK(unrank(Natural(2), 3, Family::A) == parse_window("[3,1,2]"));

  const NumberSystem b2 = NumberSystem::builtin(Family::B, 2);
  CHECK(unrank_digits(parse_digit_string(b2, "0:0"), 2, Family::B) == SignedPerm::identity(2));
  CHECK(unrank_digits(parse_digit_string(b2, "2:0"), 2, Family::B) == parse_window("[-2,1]"));
  const NumberSystem s3 = NumberSystem::builtin(Family::S, 3);
  CHECK(unrank_digits(parse_digit_string(s3, "1:1"), 3, Family::S) == parse_window("[2,3,1]"));
}

TEST_CASE("unrank tables at n = 2") {
  // Every digit combination of the two-position B system.
  const char* b2[8] = {"[1,2]", "[1,-2]", "[2,1]",  "[2,-1]",
                       "[-2,1]", "[-2,-1]", "[-1,2]", "[-1,-2]"};
  for (std::uint64_t m = 0; m < 8; ++m)
    CHECK(unrank(Natural(m), 2, Family::B) == parse_window(b2[m]));

  // The four values of the single D/F digit select sign and placement of
  // the first entry; the last sign is dependent.
  const char* d2[4] = {"[1,2]", "[2,1]", "[-2,-1]", "[-1,-2]"};
  const char* f2[4] = {"[1,2]", "[2,-1]", "[-2,1]", "[-1,-2]"};
  for (std::uint64_t m = 0; m < 4; ++m) {
    CHECK(unrank(Natural(m), 2, Family::D) == parse_window(d2[m]));
    CHECK(unrank(Natural(m), 2, Family::F) == parse_window(f2[m]));
  }

  const char* s2[2] = {"[1,2]", "[2,1]"};
  for (std::uint64_t m = 0; m < 2; ++m)
    CHECK(unrank(Natural(m), 2, Family::S) == parse_window(s2[m]));
}

TEST_CASE("unrank input validation") {
  CHECK_THROWS_AS(unrank(Natural(8), 2, Family::B), DomainError);
  CHECK_THROWS_AS(unrank(family_order(Family::S, 4), 4, Family::S), DomainError);
  CHECK_THROWS_AS(unrank(Natural(0), 2, Family::A), DomainError);
  CHECK_THROWS_AS(unrank_digits(DigitString({4}), 2, Family::B), DomainError);
  CHECK_THROWS_AS(unrank_digits(DigitString({0, 0, 1}), 2, Family::B), DomainError);
  CHECK(unrank_digits(DigitString({0, 0, 0}), 2, Family::B) == SignedPerm::identity(2));
}

TEST_CASE("rank is a bijection onto the group order") {
  for (const Family family : kFamilies) {
    const int top = (family == Family::S || family == Family::A) ? 5 : 4;
    for (int n = family_min_size(family); n <= top; ++n) {
      const std::uint64_t order = family_order(family, n).to_uint64();
      std::vector<bool> seen(order, false);
      std::uint64_t count = 0;
      enumerate_family(family, n, [&](const SignedPerm& pi) {
        const Natural r = rank(pi, family);
        REQUIRE(r < Natural(order));
        const std::uint64_t value = r.to_uint64();
        CHECK_FALSE(seen[value]);
        seen[value] = true;
        ++count;
        CHECK(unrank(r, n, family) == pi);
      });
      CHECK(count == order);
    }
  }
}

TEST_CASE("rank inverts unrank on random large inputs") {
  std::mt19937_64 rng(123456);
  for (const Family family : kFamilies) {
    for (const int n : {20, 50}) {
      for (int round = 0; round < 50; ++round) {
        const Natural m = uniform_rank(family, n, rng);
        const SignedPerm pi = unrank(m, n, family);
        CHECK(is_member(pi, family));
        CHECK(rank(pi, family) == m);
      }
    }
  }
}

TEST_CASE("maximal B rank has the descending odd inversion vector") {
  const int n = 5;
  Natural top = family_order(Family::B, n);
  top -= 1u;
  const SignedPerm pi = unrank(top, n, Family::B);
  std::vector<std::uint64_t> expected;
  for (int i = 1; i <= n; ++i) expected.push_back(2 * static_cast<std::uint64_t>(n - i) + 1);
  CHECK(inv_vector(pi) == expected);
  CHECK(rank(pi, Family::B) == top);
}

TEST_CASE("swapping the two bottom images preserves the A digits") {
  for (int n = 3; n <= 6; ++n) {
    for (const SignedPerm& sigma : collect_family(Family::A, n)) {
      std::vector<std::int32_t> window(sigma.window().begin(), sigma.window().end());
      std::swap(window[window.size() - 2], window[window.size() - 1]);
      const SignedPerm swapped = SignedPerm::from_window(std::move(window));
      for (int i = 1; i <= n - 2; ++i) CHECK(inv_i(sigma, i) == inv_i(swapped, i));
    }
  }
}

TEST_CASE("uniform ranks stay in range") {
  std::mt19937_64 rng(5);
  for (const Family family : kFamilies) {
    const Natural order = family_order(family, 10);
    for (int round = 0; round < 200; ++round) CHECK(uniform_rank(family, 10, rng) < order);
  }
}
