#include "dyck/germ.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <map>
#include <mutex>

namespace dyck {

int effective_ceiling(int default_ceiling) {
  const char *env = std::getenv("DYCK_MAX_K");
  if (env == nullptr || *env == '\0') return default_ceiling;
  return std::atoi(env);
}

k_germ validate_germ(const std::vector<int> &digits, int k) {
  if (k < 2 || static_cast<int>(digits.size()) != k - 1)
    throw error(errc::wrong_length,
                "need k-1 digits for order " + std::to_string(k) + ", got " +
                    std::to_string(digits.size()));
  // positions run k-1 (leftmost) down to 1 (rightmost)
  for (int idx = 0; idx < k - 1; ++idx) {
    int pos = k - 1 - idx;
    int d = digits[idx];
    int cap = (pos == k - 1) ? 1 : digits[idx - 1] + 1;
    if (d < 0 || d > cap)
      throw error(errc::growth_violation,
                  "digit " + std::to_string(d) + " at position " +
                      std::to_string(pos) + " exceeds " + std::to_string(cap),
                  {pos});
  }
  return k_germ{k, digits};
}

int rightmost_nonzero_index(const k_germ &germ) {
  for (int idx = germ.k - 2; idx >= 0; --idx)
    if (germ.digits[idx] != 0) return germ.k - 1 - idx;
  throw error(errc::null_germ, "all digits are zero");
}

k_germ parent(const k_germ &germ) {
  int i = rightmost_nonzero_index(germ);
  k_germ out = germ;
  out.digits[germ.k - 1 - i] -= 1;
  return out;
}

std::vector<k_germ> children(const k_germ &germ) {
  int top = germ.is_null() ? germ.k - 1 : rightmost_nonzero_index(germ);
  std::vector<k_germ> out;
  // increments right of the rightmost nonzero digit would not point back
  // here through parent(), so only positions up to it qualify
  for (int pos = 1; pos <= top; ++pos) {
    int idx = germ.k - 1 - pos;
    int cap = (pos == germ.k - 1) ? 1 : germ.digits[idx - 1] + 1;
    if (germ.digits[idx] + 1 > cap) continue;
    k_germ child = germ;
    child.digits[idx] += 1;
    out.push_back(std::move(child));
  }
  // ascending increment position already yields ascending natural order
  return out;
}

int natural_order_compare(const k_germ &a, const k_germ &b) {
  if (a.k != b.k)
    throw error(errc::order_mismatch, "comparing order " + std::to_string(a.k) +
                                          " with " + std::to_string(b.k));
  if (a.digits < b.digits) return -1;
  if (b.digits < a.digits) return 1;
  return 0;
}

namespace {

void extend_digits(std::vector<int> &acc, int want, int cap_first,
                   std::vector<std::vector<int>> &out) {
  if (static_cast<int>(acc.size()) == want) {
    out.push_back(acc);
    return;
  }
  int cap = acc.empty() ? cap_first : acc.back() + 1;
  for (int d = 0; d <= cap; ++d) {
    acc.push_back(d);
    extend_digits(acc, want, cap_first, out);
    acc.pop_back();
  }
}

} // namespace

const std::vector<k_germ> &enumerate_germs(int k) {
  if (k < 2) throw error(errc::k_too_small, "order must be at least 2");
  if (int cap = effective_ceiling(14); k > cap)
    throw error(errc::too_large, "enumeration capped at k=" +
                                     std::to_string(cap) +
                                     " (set DYCK_MAX_K to change)");
  static std::mutex lock;
  static std::map<int, std::vector<k_germ>> cache;
  std::lock_guard<std::mutex> guard(lock);
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  std::vector<std::vector<int>> all;
  std::vector<int> acc;
  extend_digits(acc, k - 1, 1, all);
  std::vector<k_germ> germs;
  germs.reserve(all.size());
  for (auto &d : all) germs.push_back(k_germ{k, std::move(d)});
  return cache.emplace(k, std::move(germs)).first->second;
}

long long rank(const k_germ &germ) {
  const auto &all = enumerate_germs(germ.k);
  auto it = std::lower_bound(all.begin(), all.end(), germ,
                             [](const k_germ &a, const k_germ &b) {
                               return a.digits < b.digits;
                             });
  assert(it != all.end() && it->digits == germ.digits);
  return it - all.begin();
}

k_germ unrank(long long m, int k) {
  const auto &all = enumerate_germs(k);
  if (m < 0 || m >= static_cast<long long>(all.size()))
    throw error(errc::rank_out_of_range,
                std::to_string(m) + " not in [0," +
                    std::to_string(all.size()) + "[");
  return all[m];
}

std::vector<rgs> rgs_stream(long long count) {
  std::vector<rgs> out;
  if (count <= 0) return out;
  out.push_back(rgs{});
  for (int len = 1; static_cast<long long>(out.size()) < count; ++len) {
    std::vector<std::vector<int>> all;
    std::vector<int> acc{1}; // stripped strings start with 1
    extend_digits(acc, len, 0, all);
    for (auto &d : all) {
      out.push_back(rgs{std::move(d)});
      if (static_cast<long long>(out.size()) == count) break;
    }
  }
  return out;
}

k_germ pad(const rgs &r, int k) {
  if (k < r.min_order())
    throw error(errc::k_too_small, "order " + std::to_string(k) +
                                       " cannot carry a length-" +
                                       std::to_string(r.length()) + " string");
  std::vector<int> digits(k - 1 - r.length(), 0);
  digits.insert(digits.end(), r.digits.begin(), r.digits.end());
  return k_germ{k, std::move(digits)};
}

rgs strip(const k_germ &germ) {
  auto it = std::find_if(germ.digits.begin(), germ.digits.end(),
                         [](int d) { return d != 0; });
  return rgs{std::vector<int>(it, germ.digits.end())};
}

namespace {

std::string digits_to_string(const std::vector<int> &digits) {
  std::string s;
  for (int d : digits) {
    if (d > 9)
      throw error(errc::digit_overflow,
                  "digit " + std::to_string(d) + " has no single character");
    s.push_back(static_cast<char>('0' + d));
  }
  return s;
}

std::vector<int> digits_from_string(const std::string &s) {
  std::vector<int> digits;
  digits.reserve(s.size());
  for (char c : s) {
    if (c < '0' || c > '9')
      throw error(errc::growth_violation,
                  std::string("unexpected character '") + c + "'");
    digits.push_back(c - '0');
  }
  return digits;
}

} // namespace

std::string germ_to_string(const k_germ &germ) {
  if (germ.k > 10)
    throw error(errc::digit_overflow,
                "digit rendering ends at k=10; use per-digit access");
  return digits_to_string(germ.digits);
}

k_germ germ_from_string(const std::string &s) {
  return validate_germ(digits_from_string(s), static_cast<int>(s.size()) + 1);
}

std::string rgs_to_string(const rgs &r) {
  if (r.is_null()) return "0";
  return digits_to_string(r.digits);
}

rgs rgs_from_string(const std::string &s) {
  if (s == "0" || s.empty()) return rgs{};
  std::vector<int> digits = digits_from_string(s);
  // reuse the germ checks: a stripped string padded by one zero must validate
  std::vector<int> padded(digits);
  padded.insert(padded.begin(), 0);
  validate_germ(padded, static_cast<int>(padded.size()) + 1);
  if (digits[0] != 1)
    throw error(errc::growth_violation, "stripped strings start with 1", {1});
  return rgs{std::move(digits)};
}

} // namespace dyck
