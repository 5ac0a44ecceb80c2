#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "errors.hpp"
#include "inversion_stats.hpp"
#include "oracles.hpp"
#include "signed_perm.hpp"

using namespace permrank;
using permrank::testing::collect_family;

namespace {
const Family kFamilies[] = {Family::B, Family::D, Family::S, Family::A, Family::F};
}

TEST_CASE("identity and window accessors") {
  const SignedPerm id2 = SignedPerm::identity(2);
  CHECK(format_window(id2) == "[1,2]");
  CHECK(format_window(SignedPerm::identity(1)) == "[1]");
  CHECK_THROWS_AS(SignedPerm::identity(0), DomainError);

  const SignedPerm pi = parse_window("[-2,1]");
  CHECK(pi(1) == -2);
  CHECK(pi(-1) == 2);
  CHECK(pi(2) == 1);
  CHECK(pi(-2) == -1);
  CHECK_THROWS_AS(pi(3), DomainError);
  CHECK_THROWS_AS(pi(0), DomainError);
}

TEST_CASE("window validation") {
  CHECK_THROWS_AS(SignedPerm::from_window({1, 1}), DomainError);
  CHECK_THROWS_AS(SignedPerm::from_window({0, 2}), DomainError);
  CHECK_THROWS_AS(SignedPerm::from_window({3}), DomainError);
  CHECK_THROWS_AS(SignedPerm::from_window({1, -1}), DomainError);
  CHECK_THROWS_AS(SignedPerm::from_window({}), DomainError);
  CHECK(SignedPerm::from_window({-2, 1}).size() == 2);
}

TEST_CASE("window text parsing") {
  CHECK(parse_window("[-2,1]") == SignedPerm::from_window({-2, 1}));
  CHECK(parse_window(" [ -2 , 1 ] ") == SignedPerm::from_window({-2, 1}));
  CHECK(format_window(parse_window("[-2,1]")) == "[-2,1]");

  CHECK_THROWS_AS(parse_window("(1,2)"), FormatError);
  CHECK_THROWS_AS(parse_window("[1,]"), FormatError);
  CHECK_THROWS_AS(parse_window("[1 2]"), FormatError);
  CHECK_THROWS_AS(parse_window("[]"), FormatError);
  CHECK_THROWS_AS(parse_window(""), FormatError);
  CHECK_THROWS_AS(parse_window("[1,1]"), DomainError);
  CHECK_THROWS_AS(parse_window("[0,2]"), DomainError);
}

TEST_CASE("composition") {
  const SignedPerm pi = parse_window("[-2,1]");
  const SignedPerm rho = parse_window("[2,1]");
  CHECK(pi * rho == parse_window("[1,-2]"));
  CHECK(rho * rho == SignedPerm::identity(2));
  CHECK(SignedPerm::identity(2) * pi == pi);
  CHECK(pi * SignedPerm::identity(2) == pi);
  CHECK_THROWS_AS(pi * SignedPerm::identity(3), DomainError);
}

TEST_CASE("inverse") {
  const SignedPerm pi = parse_window("[-2,1]");
  CHECK(pi.inverse() == parse_window("[2,-1]"));
  CHECK(pi * pi.inverse() == SignedPerm::identity(2));
  CHECK(pi.inverse() * pi == SignedPerm::identity(2));
  CHECK(parse_window("[2,1]").inverse() == parse_window("[2,1]"));
  CHECK(SignedPerm::identity(4).inverse() == SignedPerm::identity(4));
}

TEST_CASE("group laws hold exhaustively for small n") {
  for (int n = 1; n <= 3; ++n) {
    const auto members = collect_family(Family::B, n);
    const SignedPerm id = SignedPerm::identity(n);
    for (const SignedPerm& pi : members) {
      CHECK(pi * pi.inverse() == id);
      CHECK(pi.inverse() * pi == id);
      CHECK(id * pi == pi);
      CHECK(pi * id == pi);
    }
    // All pairs compose inside the group.
    for (const SignedPerm& pi : members) {
      for (const SignedPerm& rho : members) {
        const SignedPerm composed = pi * rho;
        CHECK(composed.size() == n);
        CHECK(is_member(composed, Family::B));
      }
    }
  }
}

TEST_CASE("composition is associative on random triples") {
  for (int round = 0; round < 50; ++round) {
    const SignedPerm a = random_element(Family::B, 4, 1000 + round);
    const SignedPerm b = random_element(Family::B, 4, 2000 + round);
    const SignedPerm c = random_element(Family::B, 4, 3000 + round);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("membership predicates") {
  CHECK(is_member(parse_window("[-1,2]"), Family::B));
  CHECK_FALSE(is_member(parse_window("[-1,2]"), Family::D));
  CHECK(is_member(parse_window("[-1,-2]"), Family::D));
  CHECK(is_member(parse_window("[-2,1]"), Family::F));
  CHECK_FALSE(is_member(parse_window("[2,1]"), Family::A));
  CHECK(is_member(parse_window("[3,1,2]"), Family::A));
  CHECK_FALSE(is_member(parse_window("[-1,2]"), Family::S));
  CHECK(is_member(parse_window("[2,1]"), Family::S));
}

TEST_CASE("enumeration counts match the group orders") {
  const auto count = [](Family family, int n) {
    std::uint64_t total = 0;
    enumerate_family(family, n, [&](const SignedPerm&) { ++total; });
    return total;
  };
  for (int n = 1; n <= 5; ++n) CHECK(count(Family::B, n) == family_order(Family::B, n).to_uint64());
  for (int n = 2; n <= 5; ++n) {
    CHECK(count(Family::D, n) == family_order(Family::D, n).to_uint64());
    CHECK(count(Family::F, n) == family_order(Family::F, n).to_uint64());
  }
  for (int n = 2; n <= 7; ++n) CHECK(count(Family::S, n) == family_order(Family::S, n).to_uint64());
  for (int n = 3; n <= 7; ++n) CHECK(count(Family::A, n) == family_order(Family::A, n).to_uint64());

  CHECK(family_order(Family::B, 2).to_uint64() == 8);
  CHECK(family_order(Family::B, 5).to_uint64() == 3840);
  CHECK(family_order(Family::D, 5).to_uint64() == 1920);
  CHECK(family_order(Family::S, 7).to_uint64() == 5040);
  CHECK(family_order(Family::A, 7).to_uint64() == 2520);
}

TEST_CASE("enumeration yields each member exactly once") {
  for (const Family family : {Family::B, Family::S}) {
    const int n = family == Family::B ? 4 : 5;
    std::set<std::string> seen;
    enumerate_family(family, n, [&](const SignedPerm& perm) {
      CHECK(seen.insert(format_window(perm)).second);
    });
    CHECK(seen.size() == family_order(family, n).to_uint64());
  }
}

TEST_CASE("small family contents") {
  std::set<std::string> d2;
  enumerate_family(Family::D, 2, [&](const SignedPerm& p) { d2.insert(format_window(p)); });
  CHECK(d2 == std::set<std::string>{"[1,2]", "[2,1]", "[-1,-2]", "[-2,-1]"});

  std::set<std::string> a3;
  enumerate_family(Family::A, 3, [&](const SignedPerm& p) { a3.insert(format_window(p)); });
  CHECK(a3 == std::set<std::string>{"[1,2,3]", "[2,3,1]", "[3,1,2]"});
}

TEST_CASE("family containments") {
  for (int n = 3; n <= 4; ++n) {
    for (const SignedPerm& sigma : collect_family(Family::A, n)) {
      CHECK(is_member(sigma, Family::S));
      CHECK(is_member(sigma, Family::B));
    }
    for (const SignedPerm& sigma : collect_family(Family::S, n)) CHECK(is_member(sigma, Family::B));
    for (const SignedPerm& pi : collect_family(Family::D, n)) CHECK(is_member(pi, Family::B));
    for (const SignedPerm& pi : collect_family(Family::F, n)) CHECK(is_member(pi, Family::B));
    // Positive windows with even negatives are plain permutations.
    for (const SignedPerm& pi : collect_family(Family::D, n)) {
      const bool positive = std::ranges::all_of(pi.window(), [](int w) { return w > 0; });
      if (positive) CHECK(is_member(pi, Family::S));
    }
  }
}

TEST_CASE("D and F are closed under composition and inverse") {
  for (const Family family : {Family::D, Family::F}) {
    const auto members = collect_family(family, 3);
    for (const SignedPerm& pi : members) {
      CHECK(is_member(pi.inverse(), family));
      for (const SignedPerm& rho : members) CHECK(is_member(pi * rho, family));
    }
  }
}

TEST_CASE("random elements are deterministic members") {
  for (const Family family : kFamilies) {
    const int n = family_min_size(family) + 2;
    CHECK(random_element(family, n, 42) == random_element(family, n, 42));
    for (std::uint64_t seed = 0; seed < 200; ++seed)
      CHECK(is_member(random_element(family, n, seed), family));
  }
  CHECK_THROWS_AS(random_element(Family::A, 2, 1), DomainError);
}

TEST_CASE("random elements cover B_2") {
  std::map<std::string, int> histogram;
  for (std::uint64_t seed = 0; seed < 10000; ++seed)
    ++histogram[format_window(random_element(Family::B, 2, seed))];
  CHECK(histogram.size() == 8);
  for (const auto& [window, count] : histogram) {
    CAPTURE(window);
    CHECK(count > 1000);  // fair coin would put 1250 in each cell
  }
}

TEST_CASE("enumeration guards") {
  CHECK_THROWS_AS(FamilyIterator(Family::A, 2), DomainError);
  CHECK_THROWS_AS(FamilyIterator(Family::B, 63), std::invalid_argument);
}
