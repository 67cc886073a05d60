#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "dyck/oracle.hpp"

using namespace dyck;

TEST_CASE("catalan numbers") {
  const std::vector<long long> first = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
  for (std::size_t k = 0; k < first.size(); ++k)
    CHECK(catalan(static_cast<int>(k)) == first[k]);
  CHECK(catalan(33) == 212336130412243110LL);
  try {
    catalan(34);
    CHECK(false);
  } catch (const error &e) {
    CHECK(e.code() == errc::too_large);
  }
  CHECK_THROWS_AS(catalan(-1), error);
}

TEST_CASE("brute force enumeration") {
  CHECK(brute_force_words(0) == std::vector<std::string>{"0"});
  CHECK(brute_force_words(1) == std::vector<std::string>{"001"});
  CHECK(brute_force_words(2) == std::vector<std::string>{"00011", "00101"});
  for (int k = 2; k <= 7; ++k)
    CHECK(static_cast<long long>(brute_force_words(k).size()) == catalan(k));
  SUBCASE("output is sorted and duplicate-free") {
    auto words = brute_force_words(5);
    for (std::size_t t = 0; t + 1 < words.size(); ++t)
      CHECK(words[t] < words[t + 1]);
  }
  SUBCASE("desk-scale ceiling") {
    CHECK_THROWS_AS(brute_force_words(13), error);
  }
}

TEST_CASE("suite registry") {
  CHECK(suite_names().size() == 10);
  try {
    run_suite("no-such-suite");
    CHECK(false);
  } catch (const error &e) {
    CHECK(e.code() == errc::unknown_suite);
  }
}

TEST_CASE("reports serialize to json") {
  verification_report rep;
  rep.suite = "demo";
  rep.params = "k=2";
  rep.checked = 7;
  CHECK(rep.to_json() ==
        "{\"suite\":\"demo\",\"params\":\"k=2\",\"checked\":7,\"pass\":true,"
        "\"failures\":[]}");
  rep.failures.push_back("a \"quoted\" complaint");
  CHECK_FALSE(rep.pass());
  CHECK(rep.to_json().find("a \\\"quoted\\\" complaint") != std::string::npos);
  CHECK(rep.to_json(true).find("wall_seconds") != std::string::npos);
}

TEST_CASE("every suite passes") {
  for (const auto &name : suite_names()) {
    verification_report rep = run_suite(name);
    INFO(rep.to_json());
    CHECK(rep.pass());
    CHECK(rep.checked > 0);
  }
}
