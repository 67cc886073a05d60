#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "dyck/germ.hpp"
#include "dyck/nest.hpp"
#include "dyck/signature.hpp"

using namespace dyck;

TEST_CASE("the root signature reads 1 up to k-1") {
  CHECK(signature_to_string(encode(root_nest(2))) == "1");
  CHECK(signature_to_string(encode(root_nest(3))) == "12");
  CHECK(signature_to_string(encode(root_nest(6))) == "12345");
}

TEST_CASE("worked decodes") {
  auto decoded = [](const std::string &s, int k) {
    return nest_to_string(decode(signature_from_string(s, k)));
  };
  CHECK(decoded("00201", 6) == "0366553221441");
  CHECK(decoded("01122", 6) == "0246642135531");
  SUBCASE("both results are genuine nests") {
    CHECK(is_valid_nest(nest_from_string("0366553221441")));
    CHECK(is_valid_nest(nest_from_string("0246642135531")));
  }
}

TEST_CASE("some entry vectors name no nest at all") {
  try {
    decode(signature_from_string("11", 3));
    CHECK(false);
  } catch (const error &e) {
    CHECK(e.code() == errc::unrealizable);
  }
}

TEST_CASE("entries out of range are rejected before decoding") {
  signature sig{3, {0, 3}};
  CHECK_THROWS_AS(decode(sig), error);
}

TEST_CASE("encode and decode invert each other") {
  for (int k = 2; k <= 7; ++k)
    for (const auto &g : enumerate_germs(k)) {
      dyck_nest nest = nest_for_germ(g);
      CHECK(decode(encode(nest)) == nest);
    }
}

TEST_CASE("one write moves a signature to its child") {
  signature root = encode(root_nest(2));
  signature moved = apply_update(root, 1, 0);
  CHECK(signature_to_string(moved) == "0");
  CHECK(moved == encode(nest_for_germ(germ_from_string("1"))));
  SUBCASE("negative h wraps by the order") {
    signature parent = encode(nest_for_germ(germ_from_string("10")));
    signature child = apply_update(parent, 1, -2);
    CHECK(child == encode(nest_for_germ(germ_from_string("11"))));
  }
  SUBCASE("locations outside [1,k-1] are refused") {
    try {
      apply_update(root, 0, 0);
      CHECK(false);
    } catch (const error &e) {
      CHECK(e.code() == errc::out_of_bounds);
    }
    CHECK_THROWS_AS(apply_update(root, 2, 0), error);
  }
  SUBCASE("values above the location bound are refused") {
    signature wide = encode(root_nest(5));
    CHECK_THROWS_AS(apply_update(wide, 3, 3), error);
    CHECK_NOTHROW(apply_update(wide, 3, 2));
  }
}

TEST_CASE("diff finds the single changed entry") {
  signature a = encode(nest_for_germ(germ_from_string("110")));
  signature b = encode(nest_for_germ(germ_from_string("111")));
  update_delta d = diff(a, b);
  CHECK(d.location == 1);
  CHECK(a.at(1) == d.old_value);
  CHECK(b.at(1) == d.new_value);
  SUBCASE("equal signatures have no difference") {
    try {
      diff(a, a);
      CHECK(false);
    } catch (const error &e) {
      CHECK(e.code() == errc::no_difference);
    }
  }
  SUBCASE("two changed entries are reported with their spots") {
    signature x = signature_from_string("12", 3);
    signature y = signature_from_string("01", 3);
    try {
      diff(x, y);
      CHECK(false);
    } catch (const error &e) {
      CHECK(e.code() == errc::multiple_differences);
      CHECK(e.detail().size() == 2);
    }
  }
  SUBCASE("orders must agree") {
    CHECK_THROWS_AS(diff(encode(root_nest(3)), encode(root_nest(4))), error);
  }
}

TEST_CASE("signature strings") {
  CHECK(signature_to_string(signature_from_string("00201", 6)) == "00201");
  try {
    signature_from_string("0020", 6);
    CHECK(false);
  } catch (const error &e) {
    CHECK(e.code() == errc::wrong_length);
  }
  signature wide = encode(root_nest(12));
  CHECK(signature_from_string(signature_to_string(wide), 12) == wide);
}
