#pragma once

#include <string>
#include <vector>

#include "dyck/signature.hpp"

namespace dyck {

enum class update_case { B, C };

// One element of the update sequence.  Record 0 is the root placeholder: its
// rgs is the null string and i/g/case/h carry no information.
struct update_record {
  long long o = 0;
  rgs alpha;
  int i = 0;
  int g = 0;
  update_case kind = update_case::B;
  int h = 0;

  bool sentinel() const { return o == 0; }
};

struct stream_counters {
  long long apply_writes = 0;
  long long undo_writes = 0;
};

// Entry of the maintained signature at the germ's own update location.
int g_value(const k_germ &germ);
// B when the adjacent pair kk falls outside the open interval spanned by the
// update location's pair, C when inside.
update_case case_of(const k_germ &germ);
// g for case B, g - k for case C; independent of zero padding.
int h_value(const k_germ &germ);
// Same, evaluated at the minimal order carrying the string.
int h_value(const rgs &r);

// First `count` records in stream order, produced by a depth-first walk that
// keeps one live signature and performs exactly one entry write per edge
// (plus one undo write per retreat; both counted separately).
std::vector<update_record> update_stream(long long count);
std::vector<update_record> update_stream(long long count,
                                         stream_counters *counters);

// j=1 prefixes a 1; j>=2 requires the prefix 1 2 ... (j-1) (j-1) and bumps
// its final digit to j.
rgs lift_phi(const rgs &r, int j);
// True when the lift changes h.  False for the null string and for strings
// without the required prefix.
bool phi_membership(const rgs &r, int j);
// Stream indices m in [1, limit) whose string is a member.
std::vector<long long> phi_indices(int j, long long limit);

struct triangle_row {
  int r = 0;
  std::vector<long long> values;
};

// Rows 0..rows of the reversed ballot-number triangle.
std::vector<triangle_row> reversed_catalan_triangle(int rows);

// iota = update location (0 stands for the root placeholder), zeta = the
// label position within its column.
struct formation_entry {
  int iota = 0;
  int zeta = 0;
  bool operator==(const formation_entry &o) const {
    return iota == o.iota && zeta == o.zeta;
  }
};

struct formation_block {
  int i = 0;
  int j = 0;
  std::vector<formation_entry> entries;
  std::vector<int> column_sizes;
};

// The block string for label (i,j) built from the recurrence
//   A_2^j = 2_{j-1} | 1_1 | ... | 1_j
//   A_i^j = i_{j-i+1} | 1_1 | A_2^2 | ... | A_{i-1}^{i-1} | A_{i-1}^i | ... | A_{i-1}^j.
std::vector<formation_entry> recurrence_block(int i, int j);

// Partition of the first C_{k+1} stream entries into diagonal blocks
// (1,1), (2,2), ..., (k,k); entry labels are cross-checked against the
// stream's update locations.
std::vector<formation_block> formation(int k);

// Sizes of the nested grouping of the first C_{k+1} stream entries: the
// C_k entries before the last block, then the last block peeled one level
// per step.  Equals row k of the reversed triangle.
std::vector<long long> delta_prime_groups(int k);

enum class bench_strategy { signature_replay, castling };

struct bench_report {
  int k = 0;
  bench_strategy strategy = bench_strategy::signature_replay;
  long long steps = 0;
  long long entry_writes = 0;
  long long undo_writes = 0;
  long long moved_positions = 0;
  double avg_moved = 0.0;
  double setup_seconds = 0.0;
  double walk_seconds = 0.0;
  double steps_per_second = 0.0;
};

// Walks the full order-k tree edge by edge.  The signature strategy replays
// precomputed h values with a single entry write per edge; the castling
// strategy rebuilds each nest by block swaps and reports how many positions
// move.  When `collect` is given, the per-node signatures are appended in
// visit order for cross-checking.
bench_report run_bench(int k, bench_strategy strategy,
                       std::vector<signature> *collect = nullptr);

// Generative membership rules, kept apart from the behavioral definition.
// Rule interpretations are documented at the implementation; disagreements
// are reported, never asserted.
std::vector<rgs> phi_rules_experimental(int j, long long limit);

struct phi_rule_report {
  int j = 0;
  long long limit = 0;
  std::vector<rgs> rule_members;
  std::vector<rgs> behavioral_members;
  std::vector<rgs> rule_only;
  std::vector<rgs> behavioral_only;
};

phi_rule_report phi_rules_discrepancies(int j, long long limit);

} // namespace dyck
