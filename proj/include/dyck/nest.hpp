#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dyck/germ.hpp"

namespace dyck {

// Length-n string over [0,k] (n = 2k+1): 0 once at the front, every other
// value twice, intervals properly nested, the two k's adjacent.
struct dyck_nest {
  int k = 1;
  std::vector<int> values;

  int n() const { return 2 * k + 1; }
  bool operator==(const dyck_nest &o) const {
    return k == o.k && values == o.values;
  }
};

// Length-n bit string: leading 0, exactly k ones, and every nonempty prefix
// has strictly more zeros than ones.
struct anchored_word {
  int k = 1;
  std::string bits;

  int n() const { return 2 * k + 1; }
  bool operator==(const anchored_word &o) const {
    return k == o.k && bits == o.bits;
  }
};

// One block swap W|X|Y|Z -> W|Y|X|Z.  Index ranges refer to the parent nest;
// leftmost_y is the first value of Y once it has moved to the front.
struct castling_record {
  int i = 0;
  int c = 0;
  int x_begin = 0;
  int x_len = 0;
  int y_len = 0;
  int leftmost_y = 0;
};

dyck_nest root_nest(int k);

dyck_nest castle(const dyck_nest &parent, int i);
dyck_nest castle(const dyck_nest &parent, int i, castling_record *rec);

dyck_nest nest_for_germ(const k_germ &germ);

anchored_word nest_to_word(const dyck_nest &nest);
dyck_nest word_to_nest(const anchored_word &word);

// Validates and wraps a raw bit string.
anchored_word word_from_bits(const std::string &bits);
// Strict prefix test on a raw bit string (no weight or length demands).
bool is_anchored_bits(const std::string &bits);

// Lattice path points from (0,0): 0-bit steps (+1,+1), 1-bit steps (+1,-1).
std::vector<std::pair<int, int>> path_steps(const anchored_word &word);

// False with a reason when any nest invariant fails; never throws.
bool is_valid_nest(const dyck_nest &nest, std::string *why = nullptr);
void validate_nest(const dyck_nest &nest);

// Digit string while every value fits one character, else comma separated.
std::string nest_to_string(const dyck_nest &nest);
// Parses either form; k is taken from the largest value.  No validity check,
// so ill-formed nests can be constructed for inspection.
dyck_nest nest_from_string(const std::string &s);

} // namespace dyck
