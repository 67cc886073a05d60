#pragma once

#include <string>
#include <vector>

#include "dyck/nest.hpp"

namespace dyck {

// Per-pair nesting counts A_{k-1} ... A_1, stored left to right, so the
// count for pair j sits at entries[k-1-j].  A_k is always 0 and not stored.
struct signature {
  int k = 1;
  std::vector<int> entries;

  int at(int j) const { return entries[k - 1 - j]; }
  bool operator==(const signature &o) const {
    return k == o.k && entries == o.entries;
  }
};

struct update_delta {
  int location = 0;
  int old_value = 0;
  int new_value = 0;
};

// A_j = floor(d(j',j'')/2); equal to the number of complete pairs between
// the two appearances of j (asserted in debug builds).
signature encode(const dyck_nest &nest);

// Unique nest re-encoding to the given entries, placed pairs-outermost from
// the right with a single wrap allowed per pair.
dyck_nest decode(const signature &sig);

// One-entry write A_i := h (h >= 0) or h + k (h < 0).
signature apply_update(const signature &sig, int location, int h);

update_delta diff(const signature &a, const signature &b);

std::string signature_to_string(const signature &sig);
signature signature_from_string(const std::string &s, int k);

} // namespace dyck
