#pragma once

#include <string>
#include <vector>

#include "dyck/error.hpp"

namespace dyck {

// Digits are stored left to right as a_{k-1} ... a_1, so digits[0] is the
// leftmost (highest-position) digit.  Positions are 1-based from the right:
// a_p lives at digits[k-1-p].
struct k_germ {
  int k = 2;
  std::vector<int> digits;

  bool is_null() const {
    for (int d : digits)
      if (d != 0) return false;
    return true;
  }
  int at(int pos) const { return digits[k - 1 - pos]; }
  bool operator==(const k_germ &o) const {
    return k == o.k && digits == o.digits;
  }
};

// Growth string with leading zeros stripped.  Empty digit vector is the null
// string, rendered "0".
struct rgs {
  std::vector<int> digits;

  bool is_null() const { return digits.empty(); }
  int length() const { return static_cast<int>(digits.size()); }
  // smallest order whose germs can carry this string
  int min_order() const { return length() + 1; }
  bool operator==(const rgs &o) const { return digits == o.digits; }
};

// Desk-scale ceiling, overridable through the DYCK_MAX_K environment
// variable.
int effective_ceiling(int default_ceiling);

k_germ validate_germ(const std::vector<int> &digits, int k);

// Position of the rightmost nonzero digit (1-based from the right).
int rightmost_nonzero_index(const k_germ &germ);

k_germ parent(const k_germ &germ);
std::vector<k_germ> children(const k_germ &germ);

// -1, 0, +1 like strcmp; compares digit vectors left to right.
int natural_order_compare(const k_germ &a, const k_germ &b);

// All k-germs in natural order; cached per k, safe for concurrent readers.
const std::vector<k_germ> &enumerate_germs(int k);
long long rank(const k_germ &germ);
k_germ unrank(long long m, int k);

// First `count` growth strings: the null string, then all strings grouped by
// length, each group in ascending order.
std::vector<rgs> rgs_stream(long long count);

k_germ pad(const rgs &r, int k);
rgs strip(const k_germ &germ);

std::string germ_to_string(const k_germ &germ);
k_germ germ_from_string(const std::string &s);
std::string rgs_to_string(const rgs &r);
rgs rgs_from_string(const std::string &s);

} // namespace dyck
