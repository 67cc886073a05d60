#pragma once

#include <string>
#include <vector>

#include "dyck/error.hpp"

namespace dyck {

// Exact value via the product recurrence; guarded against int64 overflow.
long long catalan(int k);

// Every length-(2k+1) weight-k bit string with a leading 0 and strictly more
// zeros than ones in every nonempty prefix, enumerated directly from bits.
std::vector<std::string> brute_force_words(int k);

struct verification_report {
  std::string suite;
  std::string params;
  long long checked = 0;
  std::vector<std::string> failures;
  double wall_seconds = 0.0;

  bool pass() const { return failures.empty(); }
  // wall_seconds is nondeterministic and only included on request
  std::string to_json(bool with_time = false) const;
};

const std::vector<std::string> &suite_names();

// Runs one exhaustive desk-scale audit.  Each suite recomputes its reference
// answers from first principles (bit enumeration, direct pair counting,
// digit scans) and confronts the library's answers with them, reporting the
// first counterexample verbatim.
verification_report run_suite(const std::string &name);

} // namespace dyck
