#include "dyck/update.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <map>
#include <set>

#include "dyck/oracle.hpp"

namespace dyck {

namespace {

struct pair_positions {
  int first = -1;
  int second = -1;
};

pair_positions find_pair(const dyck_nest &nest, int value) {
  pair_positions out;
  for (int p = 0; p < nest.n(); ++p) {
    if (nest.values[p] != value) continue;
    if (out.first < 0)
      out.first = p;
    else {
      out.second = p;
      break;
    }
  }
  return out;
}

update_case classify(const dyck_nest &nest, int location) {
  pair_positions loc = find_pair(nest, location);
  pair_positions top = find_pair(nest, nest.k);
  bool inside = top.first > loc.first && top.second < loc.second;
  return inside ? update_case::C : update_case::B;
}

} // namespace

int g_value(const k_germ &germ) {
  int i = rightmost_nonzero_index(germ);
  pair_positions pp = find_pair(nest_for_germ(germ), i);
  return (pp.second - pp.first) / 2;
}

update_case case_of(const k_germ &germ) {
  int i = rightmost_nonzero_index(germ);
  return classify(nest_for_germ(germ), i);
}

int h_value(const k_germ &germ) {
  int i = rightmost_nonzero_index(germ);
  dyck_nest nest = nest_for_germ(germ);
  pair_positions pp = find_pair(nest, i);
  int g = (pp.second - pp.first) / 2;
  return classify(nest, i) == update_case::B ? g : g - germ.k;
}

int h_value(const rgs &r) {
  if (r.is_null()) throw error(errc::null_germ, "the null string carries no h");
  return h_value(pad(r, r.min_order()));
}

namespace {

// Depth-first walk over one length class at its minimal order, keeping a
// live nest (block swaps both ways) and a live signature (one entry write
// per edge forward, one restore per retreat).
class stream_walker {
public:
  stream_walker(long long budget, stream_counters *counters)
      : budget_(budget), counters_(counters) {}

  std::vector<update_record> run() {
    if (budget_ < 1) return {};
    out_.reserve(static_cast<std::size_t>(budget_));
    out_.push_back(update_record{}); // root placeholder
    for (int len = 1; more(); ++len) walk_length(len);
    return std::move(out_);
  }

private:
  bool more() const { return static_cast<long long>(out_.size()) < budget_; }

  void walk_length(int len) {
    k_ = len + 1;
    digits_.assign(k_ - 1, 0);
    digits_[0] = 1;
    nest_ = castle(root_nest(k_), len);
    sig_ = encode(root_nest(k_));
    write_entry(len);
    visit(len);
    undo_.clear();
  }

  void write_entry(int location) {
    pair_positions pp = find_pair(nest_, location);
    int g = (pp.second - pp.first) / 2;
    undo_.push_back(update_delta{location, sig_.at(location), g});
    sig_.entries[k_ - 1 - location] = g;
    if (counters_ != nullptr) counters_->apply_writes += 1;
  }

  void pop_entry() {
    const update_delta &d = undo_.back();
    sig_.entries[k_ - 1 - d.location] = d.old_value;
    undo_.pop_back();
    if (counters_ != nullptr) counters_->undo_writes += 1;
  }

  void visit(int location) {
    emit(location);
    for (int pos = 1; pos <= location && more(); ++pos) {
      int idx = k_ - 1 - pos;
      int cap = (pos == k_ - 1) ? 1 : digits_[idx - 1] + 1;
      if (digits_[idx] + 1 > cap) continue;
      digits_[idx] += 1;
      dyck_nest saved = nest_;
      nest_ = castle(nest_, pos);
      write_entry(pos);
      visit(pos);
      pop_entry();
      nest_ = std::move(saved);
      digits_[idx] -= 1;
    }
  }

  void emit(int location) {
    if (!more()) return;
    update_record rec;
    rec.o = static_cast<long long>(out_.size());
    rec.alpha = rgs{digits_};
    rec.i = location;
    rec.g = sig_.at(location);
    rec.kind = classify(nest_, location);
    rec.h = rec.kind == update_case::B ? rec.g : rec.g - k_;
    out_.push_back(std::move(rec));
  }

  long long budget_ = 0;
  stream_counters *counters_ = nullptr;
  std::vector<update_record> out_;
  int k_ = 2;
  std::vector<int> digits_;
  dyck_nest nest_;
  signature sig_;
  std::vector<update_delta> undo_;
};

} // namespace

std::vector<update_record> update_stream(long long count,
                                         stream_counters *counters) {
  return stream_walker(count, counters).run();
}

std::vector<update_record> update_stream(long long count) {
  return update_stream(count, nullptr);
}

rgs lift_phi(const rgs &r, int j) {
  if (j < 1) throw error(errc::bad_prefix, "level must be at least 1");
  if (j == 1) {
    std::vector<int> digits{1};
    digits.insert(digits.end(), r.digits.begin(), r.digits.end());
    return rgs{std::move(digits)};
  }
  if (r.length() < j)
    throw error(errc::bad_prefix, "string too short for level " +
                                      std::to_string(j));
  for (int t = 0; t < j - 1; ++t)
    if (r.digits[t] != t + 1)
      throw error(errc::bad_prefix,
                  "prefix must climb 1 2 ... " + std::to_string(j - 1));
  if (r.digits[j - 1] != j - 1)
    throw error(errc::bad_prefix, "digit " + std::to_string(j) +
                                      " from the left must repeat " +
                                      std::to_string(j - 1));
  rgs out = r;
  out.digits[j - 1] = j;
  return out;
}

bool phi_membership(const rgs &r, int j) {
  if (r.is_null()) return false;
  if (j >= 2) {
    if (r.length() < j) return false;
    for (int t = 0; t < j - 1; ++t)
      if (r.digits[t] != t + 1) return false;
    if (r.digits[j - 1] != j - 1) return false;
  }
  return h_value(lift_phi(r, j)) != h_value(r);
}

std::vector<long long> phi_indices(int j, long long limit) {
  std::vector<long long> out;
  auto stream = rgs_stream(limit);
  for (long long m = 1; m < static_cast<long long>(stream.size()); ++m)
    if (phi_membership(stream[m], j)) out.push_back(m);
  return out;
}

std::vector<triangle_row> reversed_catalan_triangle(int rows) {
  if (rows < 0)
    throw error(errc::out_of_bounds, "row count must be nonnegative");
  // ballot numbers: c(r,0)=1, c(r,t)=c(r,t-1)+c(r-1,t), c(r,r)=c(r,r-1)
  std::vector<std::vector<long long>> c(rows + 1);
  for (int r = 0; r <= rows; ++r) {
    c[r].resize(r + 1);
    c[r][0] = 1;
    for (int t = 1; t <= r; ++t)
      c[r][t] = c[r][t - 1] + (t <= r - 1 ? c[r - 1][t] : 0);
  }
  std::vector<triangle_row> out;
  out.reserve(rows + 1);
  for (int r = 0; r <= rows; ++r) {
    triangle_row row;
    row.r = r;
    row.values.reserve(r + 1);
    for (int t = r; t >= 0; --t) row.values.push_back(c[r][t]);
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<formation_entry> recurrence_block(int i, int j) {
  if (i == 1 && j == 1)
    return {formation_entry{0, 0}, formation_entry{1, 1}};
  if (i < 2 || j < i)
    throw error(errc::out_of_bounds, "no block labelled (" + std::to_string(i) +
                                         "," + std::to_string(j) + ")");
  std::vector<formation_entry> out;
  if (i == 2) {
    out.push_back(formation_entry{2, j - 1});
    for (int t = 1; t <= j; ++t) out.push_back(formation_entry{1, t});
    return out;
  }
  auto append = [&out](std::vector<formation_entry> part) {
    out.insert(out.end(), part.begin(), part.end());
  };
  out.push_back(formation_entry{i, j - i + 1});
  out.push_back(formation_entry{1, 1});
  for (int t = 2; t <= i - 1; ++t) append(recurrence_block(t, t));
  for (int t = i; t <= j; ++t) append(recurrence_block(i - 1, t));
  return out;
}

std::vector<formation_block> formation(int k) {
  if (k < 1) throw error(errc::k_too_small, "order must be at least 1");
  long long total = catalan(k + 1);
  auto records = update_stream(total);
  std::vector<formation_block> out;
  for (int j = 1; j <= k; ++j) {
    formation_block block;
    block.i = j;
    block.j = j;
    block.entries = recurrence_block(j, j);
    long long lo = (j == 1) ? 0 : catalan(j);
    long long hi = catalan(j + 1);
    assert(static_cast<long long>(block.entries.size()) == hi - lo);
    for (long long m = lo; m < hi; ++m) {
      int iota = records[m].sentinel() ? 0 : records[m].i;
      assert(iota == block.entries[m - lo].iota);
      (void)iota;
    }
    int run = 0;
    for (const auto &e : block.entries) {
      if (e.iota != 1 && run > 0) {
        block.column_sizes.push_back(run);
        run = 0;
      }
      ++run;
    }
    if (run > 0) block.column_sizes.push_back(run);
    out.push_back(std::move(block));
  }
  return out;
}

std::vector<long long> delta_prime_groups(int k) {
  if (k < 2) throw error(errc::k_too_small, "order must be at least 2");
  auto size_of = [](int i, int j) {
    return static_cast<long long>(recurrence_block(i, j).size());
  };
  std::vector<long long> out;
  out.push_back(catalan(k));
  for (int i = k; i >= 3; --i) out.push_back(size_of(i, k) - size_of(i - 1, k));
  out.push_back(k);
  out.push_back(1);
  return out;
}

namespace {

double seconds_between(std::chrono::steady_clock::time_point a,
                       std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

// Replays the precomputed h table over the full order-k tree; per edge the
// signature work is a single entry assignment.
class replay_walker {
public:
  replay_walker(int k, const std::vector<int> &hs, const std::vector<int> &locs,
                bench_report *rep, std::vector<signature> *collect)
      : k_(k), hs_(hs), locs_(locs), rep_(rep), collect_(collect) {}

  void run() {
    digits_.assign(k_ - 1, 0);
    sig_ = encode(root_nest(k_));
    if (collect_ != nullptr) collect_->push_back(sig_);
    m_ = 1;
    visit(k_ - 1);
  }

private:
  void visit(int top) {
    for (int pos = 1; pos <= top; ++pos) {
      int idx = k_ - 1 - pos;
      int cap = (pos == k_ - 1) ? 1 : digits_[idx - 1] + 1;
      if (digits_[idx] + 1 > cap) continue;
      digits_[idx] += 1;
      int h = hs_[m_];
      assert(locs_[m_] == pos);
      int value = h >= 0 ? h : h + k_;
      assert(value >= 0 && value <= k_ - pos);
      undo_.push_back(update_delta{pos, sig_.at(pos), value});
      sig_.entries[k_ - 1 - pos] = value;
      rep_->entry_writes += 1;
      rep_->steps += 1;
      if (collect_ != nullptr) collect_->push_back(sig_);
      ++m_;
      visit(pos);
      const update_delta &d = undo_.back();
      sig_.entries[k_ - 1 - d.location] = d.old_value;
      undo_.pop_back();
      rep_->undo_writes += 1;
      digits_[idx] -= 1;
    }
  }

  int k_;
  const std::vector<int> &hs_;
  const std::vector<int> &locs_;
  bench_report *rep_;
  std::vector<signature> *collect_;
  std::vector<int> digits_;
  signature sig_;
  std::vector<update_delta> undo_;
  long long m_ = 1;
};

// Rebuilds every child nest by a block swap and undoes it on retreat; the
// moved-entries tally is the cost the replay strategy avoids.
class castling_walker {
public:
  castling_walker(int k, bench_report *rep, std::vector<signature> *collect)
      : k_(k), rep_(rep), collect_(collect) {}

  void run() {
    digits_.assign(k_ - 1, 0);
    nest_ = root_nest(k_);
    if (collect_ != nullptr) collect_->push_back(encode(nest_));
    visit(k_ - 1);
  }

private:
  void visit(int top) {
    for (int pos = 1; pos <= top; ++pos) {
      int idx = k_ - 1 - pos;
      int cap = (pos == k_ - 1) ? 1 : digits_[idx - 1] + 1;
      if (digits_[idx] + 1 > cap) continue;
      digits_[idx] += 1;
      castling_record rec;
      dyck_nest saved = nest_;
      nest_ = castle(nest_, pos, &rec);
      rep_->steps += 1;
      rep_->moved_positions += rec.x_len + rec.y_len;
      if (collect_ != nullptr) collect_->push_back(encode(nest_));
      visit(pos);
      nest_ = std::move(saved);
      digits_[idx] -= 1;
    }
  }

  int k_;
  bench_report *rep_;
  std::vector<signature> *collect_;
  std::vector<int> digits_;
  dyck_nest nest_;
};

} // namespace

bench_report run_bench(int k, bench_strategy strategy,
                       std::vector<signature> *collect) {
  if (k < 2) throw error(errc::k_too_small, "order must be at least 2");
  int cap = effective_ceiling(strategy == bench_strategy::castling ? 14 : 20);
  if (k > cap)
    throw error(errc::too_large, "bench capped at k=" + std::to_string(cap) +
                                     " (set DYCK_MAX_K to change)");
  bench_report rep;
  rep.k = k;
  rep.strategy = strategy;
  auto t0 = std::chrono::steady_clock::now();
  if (strategy == bench_strategy::signature_replay) {
    long long total = catalan(k);
    auto records = update_stream(total);
    std::vector<int> hs(total, 0), locs(total, 0);
    for (long long m = 1; m < total; ++m) {
      hs[m] = records[m].h;
      locs[m] = records[m].i;
    }
    auto t1 = std::chrono::steady_clock::now();
    rep.setup_seconds = seconds_between(t0, t1);
    replay_walker(k, hs, locs, &rep, collect).run();
    auto t2 = std::chrono::steady_clock::now();
    rep.walk_seconds = seconds_between(t1, t2);
  } else {
    castling_walker(k, &rep, collect).run();
    auto t1 = std::chrono::steady_clock::now();
    rep.walk_seconds = seconds_between(t0, t1);
  }
  if (rep.steps > 0)
    rep.avg_moved =
        static_cast<double>(rep.moved_positions) / static_cast<double>(rep.steps);
  if (rep.walk_seconds > 0)
    rep.steps_per_second =
        static_cast<double>(rep.steps) / rep.walk_seconds;
  return rep;
}

std::vector<rgs> phi_rules_experimental(int j, long long limit) {
  if (j < 1) throw error(errc::bad_prefix, "level must be at least 1");
  auto stream = rgs_stream(limit);
  std::map<std::vector<int>, long long> index_of;
  for (long long m = 0; m < static_cast<long long>(stream.size()); ++m)
    index_of.emplace(stream[m].digits, m);

  // Implemented rules: the seed (level 1 seeds the one-digit string 1, level
  // j seeds the smallest string ending in the doubled digit j-1) and the
  // append rule (a member whose final digit is 0, or that has no member
  // variant with a smaller final digit, grows by one digit running over
  // 0..final; member variants with a raised final digit then grow the same
  // way up to their own final digit).  The vertical-suffix rule is not
  // generated here: its window parameters do not pin down a unique reading,
  // so entries it would contribute surface in the discrepancy report
  // instead (at level 1 the first such entry is 122).
  std::vector<int> seed;
  if (j == 1) {
    seed = {1};
  } else {
    for (int t = 1; t <= j - 1; ++t) seed.push_back(t);
    seed.push_back(j - 1);
  }

  std::set<long long> members;
  std::map<long long, std::vector<int>> digits_at;
  auto add = [&](const std::vector<int> &d) {
    auto it = index_of.find(d);
    if (it == index_of.end()) return; // beyond the examined window
    if (members.insert(it->second).second) digits_at[it->second] = d;
  };
  add(seed);

  // members are processed in stream order; appends only lengthen strings,
  // so every same-length member exists before its turn comes
  for (auto it = members.begin(); it != members.end(); ++it) {
    const std::vector<int> d = digits_at[*it];
    int last = d.back();
    bool gate = last == 0;
    if (!gate) {
      gate = true;
      for (int v = 0; v < last && gate; ++v) {
        std::vector<int> variant = d;
        variant.back() = v;
        auto f = index_of.find(variant);
        if (f != index_of.end() && members.count(f->second) > 0) gate = false;
      }
    }
    if (!gate) continue;
    for (int v = 0; v <= last; ++v) {
      std::vector<int> child = d;
      child.push_back(v);
      add(child);
    }
    int raise_cap = d.size() >= 2 ? d[d.size() - 2] + 1 : 1;
    for (int raise = last + 1; raise <= raise_cap; ++raise) {
      std::vector<int> companion = d;
      companion.back() = raise;
      auto f = index_of.find(companion);
      if (f == index_of.end() || members.count(f->second) == 0) continue;
      for (int v = 0; v <= raise; ++v) {
        std::vector<int> child = companion;
        child.push_back(v);
        add(child);
      }
    }
  }

  std::vector<rgs> out;
  for (long long m : members)
    if (m >= 1 && m < limit) out.push_back(rgs{digits_at[m]});
  return out;
}

phi_rule_report phi_rules_discrepancies(int j, long long limit) {
  phi_rule_report rep;
  rep.j = j;
  rep.limit = limit;
  rep.rule_members = phi_rules_experimental(j, limit);
  auto stream = rgs_stream(limit);
  for (long long m : phi_indices(j, limit))
    rep.behavioral_members.push_back(stream[m]);
  auto key = [](const rgs &r) { return r.digits; };
  std::set<std::vector<int>> rule_set, behavioral_set;
  for (const auto &r : rep.rule_members) rule_set.insert(key(r));
  for (const auto &r : rep.behavioral_members) behavioral_set.insert(key(r));
  for (const auto &r : rep.rule_members)
    if (behavioral_set.count(key(r)) == 0) rep.rule_only.push_back(r);
  for (const auto &r : rep.behavioral_members)
    if (rule_set.count(key(r)) == 0) rep.behavioral_only.push_back(r);
  return rep;
}

} // namespace dyck
