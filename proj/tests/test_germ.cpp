#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "dyck/germ.hpp"
#include "dyck/oracle.hpp"

using namespace dyck;

TEST_CASE("restricted growth stream starts with the fixed prefix") {
  const std::vector<std::string> prefix = {
      "0",   "1",   "10",  "11",  "12",  "100", "101", "110", "111",
      "112", "120", "121", "122", "123", "1000", "1001", "1010", "1011"};
  auto stream = rgs_stream(18);
  REQUIRE(stream.size() == prefix.size());
  for (std::size_t m = 0; m < prefix.size(); ++m)
    CHECK(rgs_to_string(stream[m]) == prefix[m]);
}

TEST_CASE("stream indices 0..41 in full") {
  const std::vector<std::string> table = {
      "0",    "1",    "10",   "11",   "12",   "100",  "101",  "110",  "111",
      "112",  "120",  "121",  "122",  "123",  "1000", "1001", "1010", "1011",
      "1012", "1100", "1101", "1110", "1111", "1112", "1120", "1121", "1122",
      "1123", "1200", "1201", "1210", "1211", "1212", "1220", "1221", "1222",
      "1223", "1230", "1231", "1232", "1233", "1234"};
  auto stream = rgs_stream(42);
  REQUIRE(stream.size() == 42);
  for (std::size_t m = 0; m < table.size(); ++m)
    CHECK(rgs_to_string(stream[m]) == table[m]);
}

TEST_CASE("length jump happens exactly at the Catalan numbers") {
  auto stream = rgs_stream(catalan(8) + 1);
  for (int k = 2; k <= 8; ++k) {
    std::string last;
    for (int d = 1; d <= k - 1; ++d) last += static_cast<char>('0' + d);
    std::string first = "1" + std::string(k - 1, '0');
    CHECK(rgs_to_string(stream[catalan(k) - 1]) == last);
    CHECK(rgs_to_string(stream[catalan(k)]) == first);
  }
}

TEST_CASE("enumeration counts match the Catalan numbers") {
  for (int k = 2; k <= 9; ++k)
    CHECK(static_cast<long long>(enumerate_germs(k).size()) == catalan(k));
}

TEST_CASE("enumeration is in natural order") {
  const auto &germs = enumerate_germs(4);
  const std::vector<std::string> expected = {
      "000", "001", "010", "011", "012", "100", "101",
      "110", "111", "112", "120", "121", "122", "123"};
  REQUIRE(germs.size() == expected.size());
  for (std::size_t m = 0; m < expected.size(); ++m)
    CHECK(germ_to_string(germs[m]) == expected[m]);
  for (std::size_t m = 0; m + 1 < germs.size(); ++m)
    CHECK(natural_order_compare(germs[m], germs[m + 1]) < 0);
}

TEST_CASE("digit bounds") {
  CHECK_NOTHROW(validate_germ({1, 2, 3}, 4));
  CHECK_NOTHROW(validate_germ({0, 0, 0}, 4));
  SUBCASE("a digit may exceed its left neighbor by at most one") {
    try {
      validate_germ({0, 2, 1}, 4);
      CHECK(false);
    } catch (const error &e) {
      CHECK(e.code() == errc::growth_violation);
      CHECK(e.detail() == std::vector<long long>{2});
    }
  }
  SUBCASE("the leading digit is binary") {
    try {
      validate_germ({2, 0, 0}, 4);
      CHECK(false);
    } catch (const error &e) {
      CHECK(e.code() == errc::growth_violation);
      CHECK(e.detail() == std::vector<long long>{3});
    }
  }
  SUBCASE("length must be one less than the order") {
    CHECK_THROWS_AS(validate_germ({0, 0}, 4), error);
  }
}

TEST_CASE("parent decrements the rightmost nonzero digit") {
  CHECK(germ_to_string(parent(germ_from_string("001"))) == "000");
  CHECK(germ_to_string(parent(germ_from_string("100"))) == "000");
  CHECK(germ_to_string(parent(germ_from_string("012"))) == "011");
  CHECK(germ_to_string(parent(germ_from_string("120"))) == "110");
  try {
    parent(germ_from_string("000"));
    CHECK(false);
  } catch (const error &e) {
    CHECK(e.code() == errc::null_germ);
  }
}

TEST_CASE("children come back in ascending natural order") {
  auto names = [](const std::vector<k_germ> &kids) {
    std::vector<std::string> out;
    for (const auto &g : kids) out.push_back(germ_to_string(g));
    return out;
  };
  CHECK(names(children(germ_from_string("000"))) ==
        std::vector<std::string>{"001", "010", "100"});
  CHECK(names(children(germ_from_string("100"))) ==
        std::vector<std::string>{"101", "110"});
  CHECK(names(children(germ_from_string("010"))) ==
        std::vector<std::string>{"011"});
  CHECK(children(germ_from_string("123")).empty());
  CHECK(children(germ_from_string("012")).empty());
  SUBCASE("every child's parent is the original germ") {
    for (const auto &g : enumerate_germs(6))
      for (const auto &c : children(g)) CHECK(parent(c) == g);
  }
}

TEST_CASE("rank and unrank invert each other") {
  CHECK(rank(germ_from_string("000")) == 0);
  CHECK(rank(germ_from_string("123")) == catalan(4) - 1);
  for (int k = 2; k <= 7; ++k) {
    const auto &germs = enumerate_germs(k);
    for (std::size_t m = 0; m < germs.size(); ++m) {
      CHECK(rank(germs[m]) == static_cast<long long>(m));
      CHECK(unrank(static_cast<long long>(m), k) == germs[m]);
    }
  }
  try {
    unrank(catalan(4), 4);
    CHECK(false);
  } catch (const error &e) {
    CHECK(e.code() == errc::rank_out_of_range);
  }
  CHECK_THROWS_AS(unrank(-1, 4), error);
}

TEST_CASE("padding and stripping") {
  CHECK(germ_to_string(pad(rgs_from_string("11"), 3)) == "11");
  CHECK(germ_to_string(pad(rgs_from_string("11"), 5)) == "0011");
  CHECK(germ_to_string(pad(rgs_from_string("0"), 2)) == "0");
  CHECK(rgs_to_string(strip(germ_from_string("0011"))) == "11");
  CHECK(rgs_to_string(strip(germ_from_string("000"))) == "0");
  try {
    pad(rgs_from_string("11"), 2);
    CHECK(false);
  } catch (const error &e) {
    CHECK(e.code() == errc::k_too_small);
  }
  SUBCASE("round trip over the stream") {
    for (const auto &r : rgs_stream(100)) {
      int k = r.min_order() + 2;
      CHECK(strip(pad(r, k)) == r);
    }
  }
}

TEST_CASE("string forms") {
  CHECK(rgs_to_string(rgs{}) == "0");
  CHECK(rgs_from_string("0").is_null());
  CHECK(rgs_from_string("0").min_order() == 1);
  CHECK(rgs_to_string(rgs_from_string("1234")) == "1234");
  CHECK_THROWS_AS(rgs_from_string("2"), error);
  CHECK_THROWS_AS(rgs_from_string("13"), error);
  CHECK(germ_from_string("0011").k == 5);
  CHECK_THROWS_AS(germ_from_string("021"), error);
}

TEST_CASE("small orders are rejected") {
  try {
    enumerate_germs(1);
    CHECK(false);
  } catch (const error &e) {
    CHECK(e.code() == errc::k_too_small);
  }
}

TEST_CASE("comparing germs of different orders is refused") {
  try {
    natural_order_compare(germ_from_string("00"), germ_from_string("000"));
    CHECK(false);
  } catch (const error &e) {
    CHECK(e.code() == errc::order_mismatch);
  }
}
